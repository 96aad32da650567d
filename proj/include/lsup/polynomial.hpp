#ifndef LSUP_POLYNOMIAL_HPP
#define LSUP_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lsup/matrix.hpp"

namespace lsup {

/// Univariate polynomial over a Field; coefficients stored low degree first,
/// with no trailing zeros (the zero polynomial has no coefficients).
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(Field f, std::vector<FieldElement> coeffs);
    static Polynomial constant(Field f, const FieldElement& c);
    /// x - r
    static Polynomial linear(Field f, const FieldElement& r);
    static Polynomial x(Field f);

    Field field() const noexcept { return field_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }
    FieldElement coeff(std::size_t k) const;
    FieldElement leading() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const FieldElement& s) const;
    /// (quotient, remainder)
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
    Polynomial monic() const;
    Polynomial derivative() const;
    FieldElement operator()(const FieldElement& x) const;
    /// p(M)
    Matrix operator()(const Matrix& m) const;
    /// Coefficient-wise conjugation (quadratic extensions).
    Polynomial conjugate() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    std::string to_string() const;

private:
    void trim();
    Field field_;
    std::vector<FieldElement> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);
/// p / gcd(p, p'), monic.
Polynomial squarefree_part(const Polynomial& p);

/// det(xI - M), via Hessenberg reduction.
Polynomial characteristic_polynomial(const Matrix& m);
/// Monic generator of {p : p(M) = 0}.
Polynomial minimal_polynomial(const Matrix& m);

/// Distinct roots of p lying in its field, sorted by `compare`.
/// Supported fields: Q and quadratic extensions (Unsupported otherwise).
std::vector<FieldElement> roots_in_field(const Polynomial& p);

/// Prime factorization by trial division (probable-prime cofactor accepted);
/// throws Unsupported for large composite cofactors.
std::map<Integer, unsigned> factor_integer(Integer n);

/// Monic irreducible quadratic factors over Q of a rational polynomial.
std::vector<Polynomial> rational_quadratic_factors(const Polynomial& p);

}  // namespace lsup

#endif  // LSUP_POLYNOMIAL_HPP
