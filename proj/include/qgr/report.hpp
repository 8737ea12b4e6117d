#pragma once

#include <string>
#include <vector>

namespace qgr {

/// Outcome of a verification sweep; failures carry human-readable residuals.
struct CheckReport {
    std::string suite;
    std::string params;
    long checked = 0;
    std::vector<std::string> failures;

    [[nodiscard]] bool ok() const { return failures.empty(); }
};

} // namespace qgr
