#include "qgr/json_io.hpp"

#include "qgr/scalar_text.hpp"

namespace qgr {

Json element_to_json(const Element& e) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["shape"] = {e.shape().rows, e.shape().cols};
    if (e.restriction()) j["partition"] = e.restriction()->parts();
    Json terms = Json::array();
    for (const auto& [mono, c] : e.terms()) {
        Json exponents = Json::array();
        for (const auto& [v, exp] : mono) exponents.push_back({v.row, v.col, exp});
        terms.push_back({{"coeff", c.str()}, {"monomial", exponents}});
    }
    j["terms"] = std::move(terms);
    return j;
}

Element element_from_json(const Json& j) {
    MatrixShape shape(j.at("shape").at(0).get<int>(), j.at("shape").at(1).get<int>());
    std::optional<Partition> restriction;
    if (j.contains("partition")) restriction = Partition(j.at("partition").get<std::vector<int>>());
    Element e(shape, restriction);
    for (const Json& term : j.at("terms")) {
        PbwMonomial mono;
        for (const Json& entry : term.at("monomial")) {
            VarIndex v{entry.at(0).get<int>(), entry.at(1).get<int>()};
            if (!index_in_algebra(v, shape, restriction)) {
                throw std::domain_error("element_from_json: index outside shape or partition");
            }
            mono.emplace_back(v, entry.at(2).get<int>());
        }
        e.add_term(mono, parse_laurent(term.at("coeff").get<std::string>()));
    }
    return e;
}

Json census_to_json(const CellCensus& census) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["m"] = census.m;
    j["n"] = census.n;
    Json cells = Json::array();
    for (const CellCount& cell : census.cells) {
        cells.push_back({{"gamma", cell.gamma.entries()},
                         {"lambda", cell.lambda.parts()},
                         {"count", cell.count}});
    }
    j["cells"] = std::move(cells);
    j["irrelevant"] = census.irrelevant;
    j["total"] = census.total;
    return j;
}

Json cell_to_json(const GammaCell& cell) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["gamma"] = cell.gamma.entries();
    j["lambda"] = cell.lambda.parts();
    Json ladder = Json::array();
    for (const LadderPosition& p : cell.ladder) ladder.push_back({p.row, p.col});
    j["ladder"] = std::move(ladder);
    Json minors = Json::array();
    for (const LadderPosition& p : cell.ladder) minors.push_back(p.displaced_minor.entries());
    j["displaced_minors"] = std::move(minors);
    return j;
}

Json report_to_json(const CheckReport& report) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["suite"] = report.suite;
    j["params"] = report.params;
    j["checked"] = report.checked;
    j["failures"] = report.failures;
    j["ok"] = report.ok();
    return j;
}

Json straightening_to_json(const IndexSet& alpha, const IndexSet& beta,
                           const std::vector<StraightenTerm>& terms) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["alpha"] = alpha.entries();
    j["beta"] = beta.entries();
    Json out = Json::array();
    for (const StraightenTerm& term : terms) {
        Json chain = Json::array();
        for (const IndexSet& s : term.chain.chain) chain.push_back(s.entries());
        out.push_back({{"coeff", term.coeff.str()}, {"chain", chain}});
    }
    j["terms"] = std::move(out);
    return j;
}

} // namespace qgr
