#pragma once

#include <string>

#include <json.hpp>

#include "qgr/cauchon.hpp"
#include "qgr/diagrams.hpp"
#include "qgr/posets.hpp"
#include "qgr/qminor.hpp"

namespace qgr {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json element_to_json(const Element& e);
Element element_from_json(const Json& j);

Json census_to_json(const CellCensus& census);
Json cell_to_json(const GammaCell& cell);
Json report_to_json(const CheckReport& report);
Json straightening_to_json(const IndexSet& alpha, const IndexSet& beta,
                           const std::vector<StraightenTerm>& terms);

} // namespace qgr
