#include <doctest.h>

#include "helpers.hpp"
#include "lsup/error.hpp"
#include "lsup/frattini.hpp"
#include "lsup/module.hpp"
#include "lsup/structure.hpp"

using namespace lsup;
using lsup::test::fixture;
using lsup::test::units;
using lsup::test::vec;

namespace {

// [x, a] = a, [x, b] = b, [a, b] = c, [x, c] = 2c
LieAlgebra graded4() {
    return parse_algebra_text(R"({"dim": 4, "labels": ["x", "a", "b", "c"], "brackets": [
        [1, 2, [0, 1, 0, 0]], [1, 3, [0, 0, 1, 0]], [1, 4, [0, 0, 0, 2]], [2, 3, [0, 0, 0, 1]]]})");
}

}  // namespace

TEST_CASE("Example 2.1 has phi = span{e4}") {
    const LieAlgebra l = fixture("example_2_1");
    const FrattiniReport r = frattini_ideal(l);
    CHECK(r.phi == units(l, {4}));
    CHECK_FALSE(r.is_phi_free);
    CHECK(r.method == FrattiniReport::Method::SolvableRecursive);
    CHECK_FALSE(is_phi_free(l));
    // the same over Q(i)
    CHECK(frattini_ideal(fixture("example_2_1_qi")).phi.dim() == 1);
}

TEST_CASE("nilpotent algebras: phi = L^2") {
    const LieAlgebra h = fixture("heisenberg");
    const FrattiniReport r = frattini_ideal(h);
    CHECK(r.phi == units(h, {3}));
    CHECK(r.method == FrattiniReport::Method::Nilpotent);
    CHECK_FALSE(has_complement(h, center(h)));
    CHECK(frattini_ideal(fixture("abelian_3")).phi.dim() == 0);
}

TEST_CASE("phi-free solvable algebras") {
    const LieAlgebra n2 = fixture("nonabelian_2");
    CHECK(is_phi_free(n2));
    CHECK(frattini_ideal(n2).phi.dim() == 0);
    const auto u = has_complement(n2, units(n2, {2}));
    REQUIRE(u);
    CHECK(u->dim() == 1);
    CHECK(is_subalgebra(n2, *u));

    // x acting by 1 on a and b: abelian ideal span{a, b} complemented by x
    const LieAlgebra d = parse_algebra_text(R"({"dim": 3, "brackets": [[1, 2, [0, 1, 0]], [1, 3, [0, 0, 1]]]})");
    CHECK(is_phi_free(d));
    CHECK(frattini_ideal(d).phi.dim() == 0);
}

TEST_CASE("a graded algebra with phi = span{c}") {
    const LieAlgebra l = graded4();
    const FrattiniReport r = frattini_ideal(l);
    CHECK(r.phi == units(l, {4}));
    const QuotientMap q = quotient(l, r.phi);
    CHECK(is_phi_free(q.algebra));
}

TEST_CASE("semisimple algebras are phi-free; other non-solvable ones are refused") {
    CHECK(frattini_ideal(fixture("sl2_sl2")).phi.dim() == 0);
    CHECK(frattini_ideal(fixture("sl2")).method == FrattiniReport::Method::Declared);
    CHECK_THROWS_AS(frattini_ideal(fixture("example_4_1")), Unsupported);
    CHECK_THROWS_AS(is_phi_free(fixture("sl2")), NotSolvable);
}

TEST_CASE("complements require an abelian ideal") {
    const LieAlgebra l = fixture("example_2_1");
    CHECK_THROWS_AS(has_complement(l, units(l, {1})), NotAbelianIdeal);
    CHECK_THROWS_AS(has_complement(l, units(l, {2, 3, 4})), NotAbelianIdeal);
}
