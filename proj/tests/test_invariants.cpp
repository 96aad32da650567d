#include <doctest.h>

#include "helpers.hpp"
#include "lsup/invariants.hpp"
#include "lsup/structure.hpp"

using namespace lsup;

TEST_CASE("generated subalgebras") {
    const LieAlgebra s = lsup::test::fixture("sl2");
    CHECK(generated_subalgebra(s, {lsup::test::vec({1, 0, 0}), lsup::test::vec({0, 0, 1})}).dim() == 3);
    CHECK(generated_subalgebra(s, {lsup::test::vec({0, 1, 1})}).dim() == 1);
    const LieAlgebra h = lsup::test::fixture("heisenberg");
    CHECK(generated_subalgebra(h, {lsup::test::vec({1, 0, 0}), lsup::test::vec({0, 1, 0})}).dim() == 3);
}

TEST_CASE("invariant suite over the corpus") {
    const auto fx = load_fixtures(default_fixture_dir());
    const auto results = run_invariants(fx);
    CHECK(results.size() >= 20);
    for (const auto& r : results) {
        CAPTURE(r.module);
        CAPTURE(r.name);
        CAPTURE(r.detail);
        if (r.name == "Table 1 closed forms for dim L and gamma") {
            // the table's D_{2n+1} entries are off; the property reports it, see the README
            CHECK_FALSE(r.pass);
            CHECK(r.detail.find("D_{2n+1}") != std::string::npos);
            continue;
        }
        CHECK(r.pass);
    }
}

TEST_CASE("randomized suites are reproducible") {
    const auto fx = load_fixtures(default_fixture_dir());
    const PropertyResult a = lemma24_suite(fx, 20);
    const PropertyResult b = lemma24_suite(fx, 20);
    CHECK(a.pass);
    CHECK(a.detail == b.detail);
    CHECK(saturation_suite(fx).pass);
}
