#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qgr/cauchon.hpp"
#include "qgr/diagrams.hpp"
#include "qgr/json_io.hpp"
#include "qgr/posets.hpp"
#include "qgr/qminor.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRefusedSize = 3;

struct Output {
    std::string path;

    void emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            if (text.empty() || text.back() != '\n') std::cout << "\n";
        } else {
            std::ofstream file(path);
            if (!file) throw std::runtime_error("cannot open output file: " + path);
            file << text;
            if (text.empty() || text.back() != '\n') file << "\n";
        }
    }
};

void log_verbose(bool verbose, const std::string& message) {
    if (verbose) std::cerr << "[qgr] " << message << "\n";
}

int run_count(const std::vector<int>& grassmannian, const std::vector<int>& partition_parts,
              const std::string& format, const Output& out, bool verbose) {
    if (!grassmannian.empty()) {
        int m = grassmannian[0];
        int n = grassmannian[1];
        log_verbose(verbose, "closed-formula and census counts for the " + std::to_string(m) + "," +
                                 std::to_string(n) + " grassmannian");
        long long formula = qgr::williams_total(m, n);
        // hspec_census cross-checks the per-cell sum against the formula and
        // throws on mismatch.
        qgr::CellCensus census = qgr::hspec_census(m, n);
        bool ok = census.total == formula;
        if (format == "text") {
            out.emit("total " + std::to_string(formula) + " check " + (ok ? "ok" : "MISMATCH"));
        } else {
            qgr::Json j;
            j["schema_version"] = qgr::kSchemaVersion;
            j["total"] = formula;
            j["check"] = ok ? "ok" : "mismatch";
            out.emit(j.dump(2));
        }
        return ok ? kExitOk : kExitVerificationFailed;
    }

    qgr::Partition lambda(partition_parts);
    long long count = qgr::count_recurrence(lambda);
    if (format == "text") {
        std::string text = "lambda " + lambda.str() + ": " + std::to_string(count) + " diagrams\n";
        for (const qgr::CauchonDiagram& d : qgr::enumerate_diagrams(lambda)) {
            text += d.art();
            text += "\n";
        }
        out.emit(text);
    } else {
        qgr::Json j;
        j["schema_version"] = qgr::kSchemaVersion;
        j["lambda"] = lambda.parts();
        j["count"] = count;
        out.emit(j.dump(2));
    }
    return kExitOk;
}

int run_census(int m, int n, const std::string& format, const Output& out, bool verbose) {
    log_verbose(verbose, "censusing H-Spec cells of the " + std::to_string(m) + "," + std::to_string(n) +
                             " grassmannian");
    qgr::CellCensus census = qgr::hspec_census(m, n);
    if (format == "text") {
        std::string text;
        for (const qgr::CellCount& cell : census.cells) {
            text += cell.gamma.str() + " lambda " + cell.lambda.str() + ": " +
                    std::to_string(cell.count) + "\n";
        }
        text += "irrelevant: 1\ntotal: " + std::to_string(census.total) + "\n";
        out.emit(text);
    } else {
        out.emit(qgr::census_to_json(census).dump(2));
    }
    return kExitOk;
}

int run_poset(int m, int n, const std::vector<int>& gamma_entries, const std::string& format,
              const Output& out, bool verbose) {
    qgr::MatrixShape shape(m, n);
    if (!gamma_entries.empty()) {
        qgr::IndexSet gamma(gamma_entries);
        qgr::GammaCell cell = qgr::gamma_to_cell(gamma, shape);
        if (format == "dot") {
            out.emit(qgr::to_dot(cell));
        } else {
            out.emit(qgr::cell_to_json(cell).dump(2));
        }
        return kExitOk;
    }
    qgr::PiPoset poset(shape);
    log_verbose(verbose, "poset on " + std::to_string(poset.elements().size()) + " index sets");
    if (format == "json") {
        qgr::Json j;
        j["schema_version"] = qgr::kSchemaVersion;
        qgr::Json nodes = qgr::Json::array();
        for (const qgr::IndexSet& e : poset.elements()) nodes.push_back(e.entries());
        j["nodes"] = std::move(nodes);
        qgr::Json edges = qgr::Json::array();
        for (const auto& [lower, upper] : qgr::hasse_edges(poset)) {
            edges.push_back({lower.entries(), upper.entries()});
        }
        j["edges"] = std::move(edges);
        out.emit(j.dump(2));
    } else {
        out.emit(qgr::to_dot(poset));
    }
    return kExitOk;
}

int emit_reports(const std::vector<qgr::CheckReport>& reports, const std::string& format,
                 const Output& out) {
    bool ok = true;
    for (const qgr::CheckReport& r : reports) ok = ok && r.ok();
    if (format == "text") {
        std::string text;
        for (const qgr::CheckReport& r : reports) {
            text += r.suite + " " + r.params + ": " + (r.ok() ? "pass" : "FAIL") + " (" +
                    std::to_string(r.checked) + " checks)\n";
            for (const std::string& f : r.failures) text += "  " + f + "\n";
        }
        out.emit(text);
    } else {
        qgr::Json j = qgr::Json::array();
        for (const qgr::CheckReport& r : reports) j.push_back(qgr::report_to_json(r));
        out.emit(j.dump(2));
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

int run_verify(const std::string& suite, const std::vector<int>& params, bool slow,
               const std::string& format, const Output& out, bool verbose) {
    std::vector<qgr::CheckReport> reports;

    if (suite == "asl" || suite == "ladder") {
        if (params.size() != 2) {
            std::cerr << "verify " << suite << " expects: m n\n";
            return kExitUsage;
        }
        int m = params[0];
        int n = params[1];
        bool within_fast = m <= 2 && n <= 5;
        bool within_slow = m <= 3 && n <= 6;
        if (!(within_fast || (slow && within_slow))) {
            std::cerr << "refused: " << suite << " is capped at (2,5), or (3,6) with --slow; got (" << m
                      << "," << n << ")\n";
            return kExitRefusedSize;
        }
        qgr::MatrixShape shape(m, n);
        if (suite == "asl") {
            log_verbose(verbose, "running A.S.L. axiom checks on " + shape.str());
            reports.push_back(qgr::verify_asl(shape));
        } else {
            qgr::Straightener shared(shape);
            for (const qgr::IndexSet& gamma : qgr::all_index_sets(shape)) {
                log_verbose(verbose, "cell " + gamma.str());
                reports.push_back(qgr::verify_gamma_normality(gamma, shape, &shared));
                reports.push_back(qgr::verify_ladder_relations(gamma, shape, &shared));
            }
        }
    } else if (suite == "restore") {
        qgr::Partition lambda(params);
        if (!lambda.fits_in_box(4, 4)) {
            std::cerr << "refused: restore is capped at partitions inside the 4x4 box\n";
            return kExitRefusedSize;
        }
        reports.push_back(qgr::verify_restored_relations(lambda));
    } else if (suite == "delete") {
        qgr::Partition lambda(params);
        if (!lambda.fits_in_box(3, 3)) {
            std::cerr << "refused: delete is capped at partitions inside the 3x3 box\n";
            return kExitRefusedSize;
        }
        reports.push_back(qgr::single_step_deletion(lambda));
    } else {
        std::cerr << "unknown suite: " << suite << " (expected asl, ladder, restore, delete)\n";
        return kExitUsage;
    }

    return emit_reports(reports, format, out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics and verification for quantum grassmannian H-spectra"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::string format = "json";
    Output out;
    bool slow = false;
    bool verbose = false;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "dot", "text"}));
    app.add_option("--out", out.path, "Write output to a file instead of stdout");
    app.add_flag("--slow", slow, "Allow the gated large sizes");
    app.add_flag("-v,--verbose", verbose, "Diagnostics on stderr");

    // count
    auto* count_cmd = app.add_subcommand("count", "Diagram counts: closed formula or one partition");
    std::vector<int> count_grassmannian;
    std::vector<int> count_partition;
    count_cmd->add_option("--grassmannian", count_grassmannian, "m n")->expected(2);
    count_cmd->add_option("--partition", count_partition, "lambda parts")->expected(-1);

    // census
    auto* census_cmd = app.add_subcommand("census", "Per-cell H-prime census of G(m,n)");
    int census_m = 0;
    int census_n = 0;
    census_cmd->add_option("m", census_m, "row count")->required();
    census_cmd->add_option("n", census_n, "column count")->required();

    // poset
    auto* poset_cmd = app.add_subcommand("poset", "Hasse diagram of Pi_{m,n} or one Schubert cell");
    int poset_m = 0;
    int poset_n = 0;
    std::vector<int> poset_gamma;
    bool poset_dot = false;
    poset_cmd->add_option("m", poset_m, "row count")->required();
    poset_cmd->add_option("n", poset_n, "column count")->required();
    poset_cmd->add_option("--gamma", poset_gamma, "emit the cell descriptor of this index set");
    poset_cmd->add_flag("--dot", poset_dot, "force DOT output");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Verification suites: asl, ladder, restore, delete");
    std::string verify_suite;
    std::vector<int> verify_params;
    verify_cmd->add_option("suite", verify_suite, "asl | ladder | restore | delete")->required();
    verify_cmd->add_option("params", verify_params, "m n for asl/ladder, lambda parts for restore/delete");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (count_cmd->parsed()) {
            if (count_grassmannian.empty() == count_partition.empty()) {
                std::cerr << "count: pass exactly one of --grassmannian or --partition\n";
                return kExitUsage;
            }
            if (!count_grassmannian.empty() &&
                (count_grassmannian[0] < 1 || count_grassmannian[1] < count_grassmannian[0])) {
                std::cerr << "count: require 1 <= m <= n\n";
                return kExitUsage;
            }
            return run_count(count_grassmannian, count_partition, format, out, verbose);
        }
        if (census_cmd->parsed()) {
            if (census_m < 1 || census_n < census_m) {
                std::cerr << "census: require 1 <= m <= n\n";
                return kExitUsage;
            }
            if (census_n > 12) {
                std::cerr << "refused: census is capped at n <= 12\n";
                return kExitRefusedSize;
            }
            return run_census(census_m, census_n, format, out, verbose);
        }
        if (poset_cmd->parsed()) {
            if (poset_m < 1 || poset_n < poset_m) {
                std::cerr << "poset: require 1 <= m <= n\n";
                return kExitUsage;
            }
            if (poset_n > 12) {
                std::cerr << "refused: poset materialization is capped at n <= 12\n";
                return kExitRefusedSize;
            }
            // Whole-poset default is the Figure-1 style DOT; a cell (--gamma)
            // defaults to its JSON descriptor.
            std::string poset_format = format;
            if (poset_dot) {
                poset_format = "dot";
            } else if (app.count("--format") == 0) {
                poset_format = poset_gamma.empty() ? "dot" : "json";
            }
            return run_poset(poset_m, poset_n, poset_gamma, poset_format, out, verbose);
        }
        if (verify_cmd->parsed()) {
            return run_verify(verify_suite, verify_params, slow, format, out, verbose);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
    return kExitUsage;
}
