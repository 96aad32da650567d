#include <doctest.h>

#include "helpers.hpp"
#include "lsup/classify.hpp"
#include "lsup/error.hpp"

using namespace lsup;
using lsup::test::fixture;

TEST_CASE("algebra JSON round trip") {
    for (const char* name : {"example_2_1", "example_4_1", "sl2_sl2", "chevalley_G2", "example_2_1_qi"}) {
        CAPTURE(name);
        const LieAlgebra l = fixture(name);
        const Json j = algebra_to_json(l);
        const LieAlgebra back = parse_algebra(j);
        CHECK(algebra_to_json(back) == j);
        CHECK(back.labels() == l.labels());
    }
}

TEST_CASE("coefficients") {
    const Field q = Field::rationals();
    CHECK(parse_coeff(Json("3/6"), q) == FieldElement(Rational(1, 2)));
    CHECK(parse_coeff(Json(-4), q) == FieldElement(-4));
    CHECK(coeff_to_json(FieldElement(Rational(-3, 4))) == Json("-3/4"));
    CHECK(coeff_to_json(FieldElement(7)) == Json(7));
    const Field f = lsup::test::qi();
    const FieldElement z = parse_coeff(Json::parse(R"(["1/2", -1])"), f);
    CHECK(z == FieldElement(Rational(1, 2)).lifted(f) - FieldElement::generator(f));
    CHECK(coeff_to_json(z) == Json::parse(R"(["1/2", -1])"));
    CHECK_THROWS_AS(parse_coeff(Json::parse("[1, 2]"), q), ParseError);
    CHECK_THROWS_AS(parse_coeff(Json::parse("[1, 2, 3]"), f), ParseError);
    CHECK_THROWS_AS(parse_coeff(Json(1.5), q), ParseError);
}

TEST_CASE("fields") {
    CHECK(parse_field(Json("Q")).is_rationals());
    CHECK(parse_field(Json()).is_rationals());
    const Field f = parse_field(Json::parse(R"({"minpoly": [1, 0, 1], "name": "i"})"));
    CHECK(f == lsup::test::qi());
    CHECK(field_to_json(f) == Json::parse(R"({"minpoly": [1, 0, 1], "name": "i"})"));
    CHECK_THROWS_AS(parse_field(Json::parse(R"({"minpoly": [1, 0, 2]})")), ParseError);
    CHECK_THROWS_AS(parse_field(Json("R")), ParseError);
}

TEST_CASE("verdict serialization") {
    const Json mu = verdict_to_json(decide_MU(fixture("example_4_1")));
    CHECK(mu["class"] == "MU");
    CHECK(mu["value"] == "Yes");
    CHECK(mu["mode"] == "closure");
    CHECK(mu["witness"].is_null());
    CHECK(mu["rule"].is_string());
    const Json mo = verdict_to_json(decide_MO(fixture("sl2")));
    CHECK(mo["mode"] == "base");
    CHECK(mo["witness"] == Json::parse("[[1, 0, 0], [0, 1, 0], [0, 0, 1]]"));
    const Json ma = verdict_to_json(decide_MA(fixture("example_4_1")));
    CHECK(ma["value"] == "Unknown");
    CHECK(ma["rule"].is_null());
    // key order is fixed
    std::vector<std::string> keys;
    for (const auto& [k, v] : mu.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"class", "value", "rule", "mode", "witness"});
}

TEST_CASE("fixture loading") {
    const auto fx = load_fixtures(default_fixture_dir());
    CHECK(fx.size() == 15);
    std::size_t failed = 0;
    for (const auto& f : fx) {
        CAPTURE(f.name);
        CHECK(f.algebra.has_value() != f.expects_load_error());
        failed += f.algebra ? 0 : 1;
    }
    CHECK(failed == 1);
    CHECK_THROWS_AS(load_fixtures("/nonexistent"), ParseError);
}
