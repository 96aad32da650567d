#ifndef LSUP_FIELD_HPP
#define LSUP_FIELD_HPP

// Exact scalars: the rationals and simple extensions Q(theta) = Q[x]/(m(x)).

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace lsup {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(const std::string& text);
/// Prints "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& r);

namespace detail {
struct FieldData;
}

/// Which field the library is working over. Cheap to copy; extension fields
/// are interned so two handles with the same minimal polynomial compare equal.
class Field {
public:
    enum class Kind { Rationals, SimpleExtension };

    Field() = default;

    static Field rationals() { return Field{}; }
    /// `minpoly` lists c0, c1, ..., c_{d-1}, 1 (monic, degree d >= 2).
    /// Irreducibility is the caller's claim; arithmetic rejects zero divisors.
    static Field extension(std::vector<Rational> minpoly, std::string generator_name = "");

    Kind kind() const noexcept { return data_ == nullptr ? Kind::Rationals : Kind::SimpleExtension; }
    bool is_rationals() const noexcept { return data_ == nullptr; }
    std::size_t degree() const noexcept;
    /// Empty for Q.
    std::span<const Rational> minpoly() const noexcept;
    const std::string& generator_name() const noexcept;
    std::string to_string() const;

    friend bool operator==(const Field& a, const Field& b) noexcept { return a.data_ == b.data_; }

private:
    explicit Field(const detail::FieldData* d) : data_(d) {}
    const detail::FieldData* data_ = nullptr;
};

/// Element of Q or Q(theta), stored as coordinates in the power basis 1, theta, ...
/// A rational-valued element may carry the field Q and is promoted when it meets
/// an extension element.
class FieldElement {
public:
    using Coeffs = boost::container::small_vector<Rational, 1>;

    FieldElement() : coeffs_(1) {}
    FieldElement(const Rational& r) : coeffs_{r} {}  // NOLINT: implicit by intent
    FieldElement(long v) : coeffs_{Rational(v)} {}   // NOLINT
    FieldElement(int v) : coeffs_{Rational(v)} {}    // NOLINT
    FieldElement(Field f, Coeffs coeffs);

    static FieldElement zero(Field f);
    static FieldElement one(Field f);
    /// The generator theta of a simple extension.
    static FieldElement generator(Field f);

    const Field& field() const noexcept { return field_; }
    const Coeffs& coeffs() const noexcept { return coeffs_; }
    const Rational& coeff(std::size_t k) const;

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    bool is_rational() const noexcept;
    /// Requires is_rational().
    const Rational& rational() const;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);
    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

    FieldElement inverse() const;

    /// Coefficient-wise equality after promotion to a common field.
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    /// Total order used only for deterministic sorting (lexicographic on coordinates).
    friend std::strong_ordering compare(const FieldElement& a, const FieldElement& b);

    /// Embedding into an extension: (x, 0, ..., 0).
    FieldElement lifted(Field target) const;
    /// Image under theta -> theta' for a quadratic extension (the non-trivial automorphism).
    FieldElement conjugate() const;

    std::string to_string() const;

private:
    void promote_to(Field f);
    static Field common_field(const FieldElement& a, const FieldElement& b);

    Field field_;
    Coeffs coeffs_;
};

/// Canonical embedding of a rational into `target`.
FieldElement extension_lift(const FieldElement& x, Field target);

}  // namespace lsup

#endif  // LSUP_FIELD_HPP
