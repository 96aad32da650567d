#include <doctest.h>

#include "helpers.hpp"
#include "lsup/error.hpp"
#include "lsup/module.hpp"
#include "lsup/rootsys.hpp"
#include "lsup/structure.hpp"

using namespace lsup;
using lsup::test::fixture;
using lsup::test::units;
using lsup::test::vec;

namespace {

std::vector<std::size_t> derived_dims(const LieAlgebra& l) {
    std::vector<std::size_t> out;
    for (const auto& s : series(l).derived) out.push_back(s.dim());
    return out;
}

std::vector<std::size_t> lower_dims(const LieAlgebra& l) {
    std::vector<std::size_t> out;
    for (const auto& s : series(l).lower_central) out.push_back(s.dim());
    return out;
}

}  // namespace

TEST_CASE("a Jacobi failure names the offending triple") {
    try {
        fixture("broken_so3");
        FAIL("broken fixture loaded");
    } catch (const JacobiViolation& e) {
        CHECK(e.triple() == std::array<std::size_t, 3>{0, 1, 2});
        CHECK(std::string(e.what()).find("(1, 2, 3)") != std::string::npos);
    }
}

TEST_CASE("structure-constant parse errors") {
    CHECK_THROWS_AS(parse_algebra_text(R"({"dim": 2, "brackets": [[2, 1, [0, 1]]]})"), ParseError);
    CHECK_THROWS_AS(parse_algebra_text(R"({"dim": 2, "brackets": [[1, 3, [0, 1]]]})"), ParseError);
    CHECK_THROWS_AS(parse_algebra_text(R"({"dim": 2, "brackets": [[1, 2, [0]]]})"), ParseError);
    CHECK_THROWS_AS(parse_algebra_text(R"({"dim": 2, "brackets": [[1, 2, [0, "x"]]]})"), ParseError);
    CHECK_THROWS_AS(parse_algebra_text(R"({"brackets": []})"), ParseError);
    CHECK_THROWS_AS(parse_algebra_text("{"), ParseError);
    CHECK_THROWS_AS(parse_algebra_text(R"({"dim": 2, "labels": ["a"]})"), ParseError);
    // omitted pairs are zero, unknown keys ignored
    const LieAlgebra l = parse_algebra_text(R"({"dim": 3, "note": 1, "brackets": [[1, 2, [0, 0, "1/2"]]]})");
    CHECK(l.bracket(vec({1, 0, 0}), vec({0, 1, 0}))[2] == FieldElement(Rational(1, 2)));
    CHECK(l.bracket(vec({0, 1, 0}), vec({1, 0, 0}))[2] == FieldElement(Rational(-1, 2)));
    CHECK(l.bracket(vec({0, 1, 0}), vec({0, 0, 1})) == vec({0, 0, 0}));
}

TEST_CASE("sl2 Killing form in the u-basis") {
    // From the standard values kappa(h, h) = 8, kappa(e, f) = 4 with h = 2 u0, e = u1, f = -2 u_{-1}.
    const LieAlgebra l = fixture("sl2");
    const Matrix k = killing_form(l);
    CHECK(k.row(0) == vec({0, 0, -2}));
    CHECK(k.row(1) == vec({0, 2, 0}));
    CHECK(k.row(2) == vec({-2, 0, 0}));
    CHECK(killing_nondegenerate(l));
    CHECK(radical(l).dim() == 0);
}

TEST_CASE("Chevalley A2 Killing form on the Cartan is 6 times the trace form") {
    // kappa(x, y) = 6 tr(xy) on sl3, and tr(h_i h_j) on the coroots is the Cartan matrix.
    const RootSystem rs = build_root_system(RootType::A, 2);
    const LieAlgebra l = chevalley_constants(rs);
    const Matrix k = killing_form(l);
    CHECK(k.row(0)[0] == FieldElement(12));
    CHECK(k.row(0)[1] == FieldElement(-6));
    CHECK(k.row(1)[1] == FieldElement(12));
}

TEST_CASE("serial and parallel kernels agree") {
    for (const auto& [t, r] : {std::pair{RootType::B, 3}, std::pair{RootType::G, 2}, std::pair{RootType::A, 4}}) {
        const LieAlgebra l = chevalley_constants(build_root_system(t, static_cast<std::size_t>(r)));
        CHECK(killing_form_serial(l) == killing_form_parallel(l));
        CHECK_FALSE(find_jacobi_violation_serial(l));
        CHECK_FALSE(find_jacobi_violation_parallel(l));
    }
    // an invalid table bypassing validation is caught by both scans at the same triple
    const LieAlgebra bad = LieAlgebra::from_trusted(Field::rationals(), 3,
                                                    {{0, 1, vec({1, 0, 1})}, {0, 2, vec({0, -1, 0})}, {1, 2, vec({1, 0, 0})}});
    const auto s = find_jacobi_violation_serial(bad);
    const auto p = find_jacobi_violation_parallel(bad);
    REQUIRE(s);
    REQUIRE(p);
    CHECK(s->i == p->i);
    CHECK(s->j == p->j);
    CHECK(s->k == p->k);
}

TEST_CASE("Example 2.1 series and ideals") {
    const LieAlgebra l = fixture("example_2_1");
    CHECK(derived_dims(l) == std::vector<std::size_t>{4, 3, 1, 0});
    CHECK(lower_dims(l) == std::vector<std::size_t>{4, 3});
    CHECK(is_solvable(l));
    CHECK_FALSE(is_nilpotent(l));
    CHECK(radical(l).dim() == 4);
    CHECK(nilradical(l) == units(l, {2, 3, 4}));
    CHECK(center(l).dim() == 0);
    CHECK(asoc(l) == units(l, {4}));
}

TEST_CASE("Example 4.1 radical, nilradical and quotient") {
    const LieAlgebra l = fixture("example_4_1");
    const Subspace x = units(l, {4, 5, 6});
    CHECK(radical(l) == x);
    CHECK(nilradical(l) == x);
    CHECK(asoc(l) == units(l, {6}));
    CHECK(terminal_derived(l).dim() == 6);
    const QuotientMap q = quotient(l, x);
    CHECK(q.algebra.dim() == 3);
    CHECK(killing_nondegenerate(q.algebra));
    CHECK(q.preimage(zero_space(q.algebra)) == x);
}

TEST_CASE("Heisenberg algebra") {
    const LieAlgebra l = fixture("heisenberg");
    CHECK(center(l) == units(l, {3}));
    CHECK(lower_dims(l) == std::vector<std::size_t>{3, 1, 0});
    CHECK(nilradical(l).dim() == 3);
    const QuotientMap q = quotient(l, center(l));
    CHECK(q.algebra.is_abelian());
}

TEST_CASE("direct sums, scalar extension and basis change") {
    const LieAlgebra s = fixture("sl2");
    const LieAlgebra d = direct_sum(s, s);
    CHECK(d.dim() == 6);
    CHECK(radical(d).dim() == 0);
    CHECK(decompose_semisimple(d).size() == 2);
    const LieAlgebra f = fixture("sl2_sl2");
    CHECK(algebra_to_json(d)["brackets"] == algebra_to_json(f)["brackets"]);

    const LieAlgebra e = extend_scalars(fixture("example_2_1"), lsup::test::qi());
    CHECK(e.field() == lsup::test::qi());
    CHECK(nilradical(e).dim() == 3);

    Matrix p(Field::rationals(), 3, 3);
    p.set_row(0, vec({1, 1, 0}));
    p.set_row(1, vec({0, 1, 0}));
    p.set_row(2, vec({0, 2, 1}));
    const LieAlgebra c = change_basis(s, p);
    CHECK(killing_nondegenerate(c));
    CHECK(derived_algebra(c).dim() == 3);
    // determinant of the Killing form scales by det(p)^2 = 1
    CHECK(killing_form(c).determinant() == killing_form(s).determinant());
}

TEST_CASE("subalgebra checks") {
    const LieAlgebra l = fixture("sl2");
    CHECK(is_subalgebra(l, units(l, {2, 3})));
    CHECK_FALSE(is_subalgebra(l, units(l, {1, 3})));
    CHECK_FALSE(is_ideal(l, units(l, {2, 3})));
    CHECK_THROWS_AS(subalgebra_algebra(l, units(l, {1, 3})), NotSubalgebra);
    const LieAlgebra b = subalgebra_algebra(l, units(l, {2, 3}));
    CHECK(b.dim() == 2);
    CHECK(is_solvable(b));
    CHECK_FALSE(is_nilpotent(b));
}
