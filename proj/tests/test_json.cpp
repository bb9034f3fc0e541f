#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brq/json_io.hpp"

using namespace brq;

TEST_CASE("integers survive as decimal strings") {
    Int big("123456789012345678901234567890");
    CHECK(int_from_json(to_json(big)) == big);
    CHECK(int_from_json(Json(42)) == 42);
    CHECK(int_from_json(Json("-17")) == -17);
    CHECK_THROWS_AS(int_from_json(Json(1.5)), std::invalid_argument);
}

TEST_CASE("matrix round trip") {
    IntMatrix m{{1, -2}, {3, 4}};
    CHECK(matrix_from_json(to_json(m)) == m);
    IntMatrix empty(0, 0);
    CHECK(matrix_from_json(to_json(empty)) == empty);
}

TEST_CASE("group parsing recanonicalizes") {
    Json j;
    j["rank"] = 1;
    j["invariant_factors"] = Json::array({"3", "2"});  // not a divisibility chain
    FgAbGroup g = group_from_json(j);
    CHECK(g == FgAbGroup{1, {6}});
    CHECK(group_from_json(to_json(g)) == g);
    CHECK(group_from_json(Json()) == FgAbGroup::trivial());
}

TEST_CASE("descriptor and invariants parsing") {
    Json j = Json::parse(R"({
        "descriptor": {"kind": "BDiscrete", "free_rank": 2,
                       "finite_part": {"rank": 0, "invariant_factors": []}},
        "invariants": {"units_torsion": {"rank": 0, "invariant_factors": ["6"]},
                       "flags": {"br_equals_br_prime": "unknown"}}
    })");
    StackDescriptor d = descriptor_from_json(j["descriptor"]);
    CHECK(d.kind == StackDescriptor::Kind::BDiscrete);
    CHECK(d.free_rank == 2);
    SchemeInvariants s = invariants_from_json(j["invariants"]);
    CHECK(s.units_torsion == FgAbGroup{0, {6}});
    CHECK(s.br_equals_br_prime == Tristate::Unknown);

    Verdict v = evaluate(d, s);
    Json out = to_json(v);
    CHECK(out["conclusion"] == "SBMIFails");
    CHECK(out["br_prime_model"]["invariant_factors"][0] == "6");
}

TEST_CASE("curve specs parse both field styles") {
    EllipticCurveSpec c1 = curve_from_json(Json::parse(R"({"field": "Q", "a": "-1", "b": 0})"));
    CHECK(c1.rational);
    CHECK(c1.a == -1);
    EllipticCurveSpec c2 = curve_from_json(Json::parse(R"({"field": "7", "a": 1, "b": 1})"));
    CHECK_FALSE(c2.rational);
    CHECK(c2.p == 7);
    CHECK(to_json(c2)["field"] == "7");
}

TEST_CASE("inconsistent invariants are rejected") {
    Json j = Json::parse(R"({"pic": {"rank": 0, "invariant_factors": ["2"]},
                             "pic_torsion": {"rank": 0, "invariant_factors": []}})");
    CHECK_THROWS_AS(invariants_from_json(j), std::invalid_argument);
}
