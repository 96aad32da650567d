#include <doctest.h>

#include "helpers.hpp"
#include "lsup/classify.hpp"
#include "lsup/error.hpp"
#include "lsup/structure.hpp"

using namespace lsup;
using lsup::test::fixture;
using lsup::test::units;
using lsup::test::vec;

namespace {

using V = VerdictValue;
constexpr auto kBase = DecisionMode::Base;
constexpr auto kClosure = DecisionMode::Closure;

Matrix diag3(long a, long b, long c) {
    Matrix m(Field::rationals(), 3, 3);
    m.set_row(0, vec({a, 0, 0}));
    m.set_row(1, vec({0, b, 0}));
    m.set_row(2, vec({0, 0, c}));
    return m;
}

FieldElement quad(const Matrix& a, const Vector& v) {
    FieldElement s(0);
    const Vector av = a.apply(v);
    for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * av[i];
    return s;
}

bool is_A1_basis(const LieAlgebra& l, const std::array<Vector, 3>& u) {
    return l.bracket(u[0], u[1]) == u[0] && l.bracket(u[0], u[2]) == u[1] && l.bracket(u[1], u[2]) == u[2];
}

}  // namespace

TEST_CASE("structural flags of Example 2.1") {
    const StructuralFlags f = structural_flags(fixture("example_2_1"));
    CHECK(f.solvable);
    CHECK_FALSE(f.nilpotent);
    CHECK(f.completely_solvable);
    CHECK_FALSE(f.metabelian);
    CHECK_FALSE(f.supersolvable_basefield);
    CHECK_FALSE(f.semisimple);
    // ad e1 has eigenvalues 1 +- i on span{e2, e3}: supersolvable once i is adjoined
    CHECK(is_supersolvable(fixture("example_2_1_qi")));
}

TEST_CASE("supersolvability") {
    CHECK(is_supersolvable(fixture("heisenberg")));
    CHECK(is_supersolvable(fixture("nonabelian_2")));
    CHECK_FALSE(is_supersolvable(fixture("sl2")));
    // rotation action: solvable, not supersolvable over Q
    const LieAlgebra r = parse_algebra_text(R"({"dim": 3, "brackets": [[1, 2, [0, 0, 1]], [1, 3, [0, -1, 0]]]})");
    CHECK(is_solvable(r));
    CHECK_FALSE(is_supersolvable(r));
    CHECK(is_supersolvable(extend_scalars(r, lsup::test::qi())));
}

TEST_CASE("isotropic vectors of ternary forms") {
    // x^2 + y^2 = 2 z^2 has (1, 1, 1)
    const Matrix a = diag3(1, 1, -2);
    const auto v = isotropic_vector(a);
    REQUIRE(v);
    CHECK_FALSE(is_zero(*v));
    CHECK(quad(a, *v).is_zero());
    // x^2 + y^2 = 3 z^2 has no rational solution (3 is not a sum of two rational squares)
    CHECK_FALSE(isotropic_vector(diag3(1, 1, -3)));
    CHECK_FALSE(isotropic_vector(diag3(1, 1, 1)));
    CHECK_FALSE(isotropic_vector(diag3(-2, -5, -7)));
    // whatever the search returns must be a genuine zero
    for (const auto& [p, q, r] : {std::tuple{5L, 11L, -19L}, std::tuple{3L, 5L, -7L}, std::tuple{1L, 7L, -11L},
                                  std::tuple{2L, 3L, -5L}, std::tuple{13L, -17L, 1L}}) {
        const Matrix m = diag3(p, q, r);
        const auto w = isotropic_vector(m);
        if (w) CHECK(quad(m, *w).is_zero());
        if (p == 2 && q == 3) CHECK(w);  // (1, 1, 1)
    }
    // zero on the diagonal after congruence
    Matrix hyp(Field::rationals(), 3, 3);
    hyp.set_row(0, vec({0, 1, 0}));
    hyp.set_row(1, vec({1, 0, 0}));
    hyp.set_row(2, vec({0, 0, 1}));
    const auto h = isotropic_vector(hyp);
    REQUIRE(h);
    CHECK(quad(hyp, *h).is_zero());
}

TEST_CASE("split three-dimensional simple algebras") {
    const LieAlgebra s = fixture("sl2");
    const auto u = split_A1_basis(s);
    REQUIRE(u);
    CHECK(is_A1_basis(s, *u));
    CHECK_FALSE(is_split_A1(fixture("so3_q")));
    CHECK(is_split_A1(extend_scalars(fixture("so3_q"), lsup::test::qi())));
    CHECK_FALSE(is_split_A1(fixture("heisenberg")));
    CHECK_FALSE(is_split_A1(fixture("sl2_sl2")));

    // a basis with no ad-semisimple basis vector: h, e + f, e - f (in u-coordinates)
    Matrix p(Field::rationals(), 3, 3);
    p.set_column(0, vec({0, 1, 0}));
    p.set_column(1, vec({-1, 0, 2}));
    p.set_column(2, vec({1, 0, 2}));
    const LieAlgebra c = change_basis(s, p);
    const auto uc = split_A1_basis(c);
    REQUIRE(uc);
    CHECK(is_A1_basis(c, *uc));

    // x^2 + y^2 - 2 z^2 type form: a split algebra with no rational eigenvalue on basis vectors
    const LieAlgebra t = parse_algebra_text(R"({"dim": 3, "brackets": [
        [1, 2, [0, 0, 1]], [1, 3, [0, -1, 0]], [2, 3, ["-1/2", 0, 0]]]})");
    REQUIRE(killing_nondegenerate(t));
    const auto ut = split_A1_basis(t);
    CHECK(ut);
    if (ut) CHECK(is_A1_basis(t, *ut));
}

TEST_CASE("class verdicts: Example 2.1") {
    const LieAlgebra l = fixture("example_2_1");
    CHECK(decide_MD_MN(l).value == V::Yes);
    CHECK(decide_MU(l).value == V::No);
    CHECK(decide_MA(l).value == V::Yes);
    CHECK(decide_MA(l, kBase).value == V::Unknown);
    CHECK(decide_MA(l, kBase).rule.empty());
    CHECK(decide_MO(l).value == V::No);
    CHECK(decide_MO(l).mode == kBase);
    CHECK(decide_MO(fixture("example_2_1_qi")).value == V::Yes);
}

TEST_CASE("class verdicts: Example 4.1") {
    const LieAlgebra l = fixture("example_4_1");
    CHECK(decide_MD_MN(l).value == V::Yes);
    CHECK(decide_MU(l).value == V::Yes);
    CHECK(decide_MA(l).value == V::Unknown);
    CHECK(decide_MU(l, kBase).value == V::Unknown);
    const Subspace m = units(l, {1, 2, 3, 6});
    CHECK(is_subalgebra(l, m));
    CHECK_FALSE(find_abelian_supplement(l, m));
}

TEST_CASE("class verdicts: sl2 and its relatives") {
    const LieAlgebra s = fixture("sl2");
    const Verdict mo = decide_MO(s);
    CHECK(mo.value == V::Yes);
    REQUIRE(mo.witness_basis.size() == 3);
    CHECK(mo.witness_basis[0] == vec({1, 0, 0}));
    CHECK(mo.witness_basis[1] == vec({0, 1, 0}));
    CHECK(mo.witness_basis[2] == vec({0, 0, 1}));
    for (auto d : {decide_MD_MN(s), decide_MU(s), decide_MA(s)}) CHECK(d.value == V::Yes);

    const LieAlgebra ss = fixture("sl2_sl2");
    CHECK(decide_MD_MN(ss).value == V::No);
    CHECK(decide_MU(ss).value == V::No);
    CHECK(decide_MA(ss).value == V::No);
    CHECK(decide_MO(ss).value == V::No);

    const LieAlgebra so3 = fixture("so3_q");
    CHECK(decide_MA(so3).value == V::Yes);
    CHECK(decide_MO(so3).value == V::No);
}

TEST_CASE("base-mode verdicts are field-independent statements") {
    CHECK(decide_MD_MN(fixture("sl2_sl2"), kBase).value == V::Unknown);
    CHECK(decide_MD_MN(fixture("sl2"), kBase).value == V::Yes);
    CHECK(decide_MU(fixture("nonabelian_2"), kBase).value == V::No);
    CHECK(decide_MU(fixture("heisenberg"), kBase).value == V::Yes);
    CHECK(decide_MA(fixture("heisenberg"), kBase).value == V::Yes);
    CHECK(to_string(kBase) == "base");
    CHECK(to_string(kClosure) == "closure");
    CHECK(to_string(V::Unknown) == "Unknown");
}

TEST_CASE("abelian supplements") {
    const LieAlgebra s = fixture("sl2");
    const Subspace borel = units(s, {2, 3});
    const auto u = find_abelian_supplement(s, borel);
    REQUIRE(u);
    CHECK(is_abelian(s, *u));
    CHECK(subspace_sum(borel, *u).dim() == 3);

    const LieAlgebra l = fixture("example_2_1");
    CHECK_FALSE(find_abelian_supplement(l, units(l, {1, 4})));
    const auto n = find_abelian_supplement(l, units(l, {2, 3, 4}));
    REQUIRE(n);
    CHECK(n->dim() == 1);
    CHECK_THROWS_AS(find_abelian_supplement(l, units(l, {1, 2})), NotSubalgebra);
    CHECK_THROWS_AS(find_abelian_supplement(l, units(l, {1, 2, 3, 4})), NotSubalgebra);
}
