#include <doctest.h>

#include "qgr/json_io.hpp"
#include "qgr/qminor.hpp"

using namespace qgr;

TEST_CASE("element JSON round-trips exactly") {
    MatrixShape s24(2, 4);
    Element minor = maximal_minor(IndexSet{2, 4}, s24);
    CHECK(element_from_json(element_to_json(minor)) == minor);

    Element zero = Element::zero(s24);
    CHECK(element_from_json(element_to_json(zero)) == zero);

    MatrixShape s23(2, 3);
    Element restricted = mul(Element::generator({2, 1}, s23, Partition({2, 1})),
                             Element::generator({1, 2}, s23, Partition({2, 1})));
    Element back = element_from_json(element_to_json(restricted));
    CHECK(back == restricted);
    CHECK(back.restriction() == restricted.restriction());

    // Round-trip through the serialized text as well.
    Json j = element_to_json(minor);
    Json reparsed = Json::parse(j.dump());
    CHECK(element_from_json(reparsed) == minor);
}

TEST_CASE("element JSON rejects malformed monomials") {
    Json j;
    j["shape"] = {2, 2};
    j["terms"] = Json::array({Json{{"coeff", "q"}, {"monomial", Json::array({Json::array({3, 1, 1})})}}});
    CHECK_THROWS_AS(element_from_json(j), std::domain_error);
}

TEST_CASE("census JSON carries the schema and the paper totals") {
    Json j = census_to_json(hspec_census(2, 4));
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["m"] == 2);
    CHECK(j["n"] == 4);
    CHECK(j["total"] == 34);
    CHECK(j["irrelevant"] == 1);
    REQUIRE(j["cells"].size() == 6);
    CHECK(j["cells"][0]["gamma"] == Json::array({1, 2}));
    CHECK(j["cells"][0]["lambda"] == Json::array({2, 2}));
    CHECK(j["cells"][0]["count"] == 14);
}

TEST_CASE("cell descriptor JSON matches the ladder example") {
    Json j = cell_to_json(gamma_to_cell(IndexSet{1, 3, 6}, MatrixShape(3, 7)));
    CHECK(j["gamma"] == Json::array({1, 3, 6}));
    CHECK(j["lambda"] == Json::array({4, 3, 1}));
    REQUIRE(j["ladder"].size() == 8);
    CHECK(j["ladder"][0] == Json::array({1, 7}));
    CHECK(j["displaced_minors"][0] == Json::array({1, 3, 7}));
}

TEST_CASE("report and straightening JSON") {
    CheckReport report;
    report.suite = "restore";
    report.params = "(2,2)";
    report.checked = 6;
    Json jr = report_to_json(report);
    CHECK(jr["ok"] == true);
    CHECK(jr["failures"] == Json::array());
    CHECK(jr["checked"] == 6);

    MatrixShape s24(2, 4);
    auto terms = straighten_product(IndexSet{1, 4}, IndexSet{2, 3}, s24);
    Json js = straightening_to_json(IndexSet{1, 4}, IndexSet{2, 3}, terms);
    CHECK(js["alpha"] == Json::array({1, 4}));
    CHECK(js["beta"] == Json::array({2, 3}));
    CHECK(js["terms"].size() == terms.size());
    for (const Json& term : js["terms"]) {
        CHECK(term.contains("coeff"));
        CHECK(term["chain"].size() == 2);
    }
}
