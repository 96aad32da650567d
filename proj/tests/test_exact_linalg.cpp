#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "helpers.hpp"
#include "lsup/eigen.hpp"
#include "lsup/error.hpp"
#include "lsup/polynomial.hpp"

using namespace lsup;
using lsup::test::vec;

namespace {

Rational rq(long p, long q = 1) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    Matrix m(Field::rationals(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Vector row;
        for (std::size_t j = 0; j < n; ++j) row.push_back(FieldElement(rq(num(rng), den(rng))));
        m.set_row(i, row);
    }
    return m;
}

// Leibniz expansion over all permutations.
Rational leibniz_det(const Matrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    Rational total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
        Rational term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i) term *= m.row(i)[p[i]].rational();
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

// Faddeev-LeVerrier: coefficients of det(xI - M), low degree first.
std::vector<Rational> leverrier(const Matrix& m) {
    const std::size_t n = m.rows();
    const Field q = Field::rationals();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    Matrix mk = Matrix::identity(q, n).scaled(FieldElement(0));
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk + Matrix::identity(q, n).scaled(FieldElement(c[n - k + 1]));
        const Matrix am = m * mk;
        c[n - k] = -am.trace().rational() / static_cast<long>(k);
    }
    return c;
}

std::map<Integer, unsigned> trial_division(long n) {
    std::map<Integer, unsigned> out;
    for (long p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++out[Integer(p)];
            n /= p;
        }
    if (n > 1) ++out[Integer(n)];
    return out;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("-6/4") == rq(-3, 2));
    CHECK(parse_rational("7") == 7);
    CHECK(format_rational(rq(10, 4)) == "5/2");
    CHECK(format_rational(rq(-8, 4)) == "-2");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("Gaussian rationals") {
    const Field f = lsup::test::qi();
    const FieldElement i = FieldElement::generator(f);
    CHECK(i * i == FieldElement(-1).lifted(f));
    const FieldElement a = FieldElement(1).lifted(f) + i;
    const FieldElement b = FieldElement(1).lifted(f) - i;
    CHECK(a * b == FieldElement(2).lifted(f));
    CHECK(a.inverse() == FieldElement(rq(1, 2)).lifted(f) - FieldElement(rq(1, 2)).lifted(f) * i);
    CHECK(a.conjugate() == b);
    CHECK(Field::extension({1, 0, 1}, "i") == f);
}

TEST_CASE("cube root of two") {
    const Field f = Field::extension({-2, 0, 0, 1}, "c");
    const FieldElement c = FieldElement::generator(f);
    CHECK(c * c * c == FieldElement(2).lifted(f));
    CHECK(c.inverse() == c * c * FieldElement(rq(1, 2)));
    CHECK(f.degree() == 3);
}

TEST_CASE("a reducible minimal polynomial is caught at a zero divisor") {
    const Field f = Field::extension({-1, 0, 1}, "t");
    const FieldElement t = FieldElement::generator(f);
    CHECK_THROWS_AS((t - FieldElement(1).lifted(f)).inverse(), ReducibleMinpoly);
}

TEST_CASE("determinant agrees with the Leibniz expansion") {
    std::mt19937_64 rng(1);
    for (int k = 0; k < 30; ++k) {
        const Matrix m = random_matrix(rng, 1 + k % 5);
        CHECK(m.determinant().rational() == leibniz_det(m));
    }
}

TEST_CASE("rank-nullity and kernels") {
    std::mt19937_64 rng(2);
    for (int k = 0; k < 30; ++k) {
        Matrix m = random_matrix(rng, 5);
        // force a dependency
        m.set_row(4, add(m.row(0), scale(FieldElement(rq(2, 3)), m.row(1))));
        const Subspace ker = kernel(m);
        CHECK(m.rank() + ker.dim() == 5);
        for (const auto& v : ker.basis_vectors()) CHECK(is_zero(m.apply(v)));
        CHECK(image(m).dim() == m.rank());
    }
}

TEST_CASE("characteristic polynomial agrees with Faddeev-LeVerrier") {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 20; ++k) {
        const Matrix m = random_matrix(rng, 2 + k % 4);
        const Polynomial p = characteristic_polynomial(m);
        const auto c = leverrier(m);
        REQUIRE(p.degree() == static_cast<int>(c.size()) - 1);
        for (std::size_t j = 0; j < c.size(); ++j) CHECK(p.coeff(j).rational() == c[j]);
        // Cayley-Hamilton
        CHECK(p(m).is_zero());
    }
}

TEST_CASE("minimal polynomial and roots") {
    const Field q = Field::rationals();
    Matrix d(q, 3, 3);
    d.set_row(0, vec({1, 0, 0}));
    d.set_row(1, vec({0, 1, 0}));
    d.set_row(2, vec({0, 0, 2}));
    const Polynomial mp = minimal_polynomial(d);
    CHECK(mp == Polynomial::linear(q, FieldElement(1)) * Polynomial::linear(q, FieldElement(2)));

    const Polynomial p = Polynomial::linear(q, FieldElement(1)) * Polynomial::linear(q, FieldElement(-2)) *
                         Polynomial::linear(q, FieldElement(rq(1, 3)));
    const auto roots = roots_in_field(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == FieldElement(-2));
    CHECK(roots[1] == FieldElement(rq(1, 3)));
    CHECK(roots[2] == FieldElement(1));

    const Polynomial x2p1(q, {FieldElement(1), FieldElement(0), FieldElement(1)});
    CHECK(roots_in_field(x2p1).empty());
    const Field f = lsup::test::qi();
    const Polynomial over_i(f, {FieldElement(1).lifted(f), FieldElement(0).lifted(f), FieldElement(1).lifted(f)});
    CHECK(roots_in_field(over_i).size() == 2);
    CHECK(rational_quadratic_factors(x2p1 * Polynomial::linear(q, FieldElement(3))).size() == 1);
}

TEST_CASE("integer factorization agrees with trial division") {
    CHECK(factor_integer(Integer(360)) == std::map<Integer, unsigned>{{2, 3}, {3, 2}, {5, 1}});
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<long> d(2, 2000000);
    for (int k = 0; k < 200; ++k) {
        const long n = d(rng);
        CHECK(factor_integer(Integer(n)) == trial_division(n));
    }
}

TEST_CASE("subspaces are canonical") {
    const Field q = Field::rationals();
    const Subspace a = Subspace::span(q, 3, {vec({1, 1, 0}), vec({0, 1, 1})});
    const Subspace b = Subspace::span(q, 3, {vec({1, 2, 1}), vec({2, 1, -1}), vec({1, 0, -1})});
    CHECK(a == b);
    CHECK(a.basis_vector(0) == vec({1, 0, -1}));
    CHECK(a.basis_vector(1) == vec({0, 1, 1}));
    CHECK(a.complement_indices() == std::vector<std::size_t>{2});
    CHECK(a.coordinates(vec({3, 5, 2})) == vec({3, 5}));
    CHECK_THROWS(a.coordinates(vec({0, 0, 1})));
    const Subspace c = Subspace::span(q, 3, {vec({0, 0, 1})});
    CHECK(subspace_sum(a, c).dim() == 3);
    CHECK(subspace_intersect(a, Subspace::span(q, 3, {vec({1, 0, 0}), vec({0, 1, 0})})).dim() == 1);
}

TEST_CASE("eigendata of a rational matrix") {
    const Field q = Field::rationals();
    Matrix m(q, 3, 3);
    m.set_row(0, vec({2, 1, 0}));
    m.set_row(1, vec({0, 2, 0}));
    m.set_row(2, vec({0, 0, -1}));
    const auto e = rational_eigendata(m);
    REQUIRE(e.size() == 2);
    CHECK(e[0].value == FieldElement(-1));
    CHECK(e[0].space == Subspace::span(q, 3, {vec({0, 0, 1})}));
    CHECK(e[1].value == FieldElement(2));
    CHECK(e[1].space == Subspace::span(q, 3, {vec({1, 0, 0})}));

    Matrix rot(q, 2, 2);
    rot.set_row(0, vec({0, -1}));
    rot.set_row(1, vec({1, 0}));
    CHECK(rational_eigendata(rot).empty());
    CHECK(rational_eigendata(rot.lifted(lsup::test::qi())).size() == 2);
}
