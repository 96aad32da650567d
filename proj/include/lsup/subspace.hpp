#ifndef LSUP_SUBSPACE_HPP
#define LSUP_SUBSPACE_HPP

#include <compare>
#include <cstddef>
#include <vector>

#include "lsup/matrix.hpp"

namespace lsup {

/// A subspace of F^n held as its reduced row echelon basis, so equal
/// subspaces have identical representations.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(Field f, std::size_t ambient);
    static Subspace full(Field f, std::size_t ambient);
    static Subspace span(Field f, std::size_t ambient, const std::vector<Vector>& vectors);
    /// Row space of `m`.
    static Subspace row_space(const Matrix& m);

    Field field() const noexcept { return basis_.field(); }
    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.rows(); }
    bool is_zero() const noexcept { return dim() == 0; }
    bool is_full() const noexcept { return dim() == ambient_; }

    const Matrix& basis() const noexcept { return basis_; }
    Vector basis_vector(std::size_t k) const { return basis_.row(k); }
    std::vector<Vector> basis_vectors() const;
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates of `v` in the echelon basis (entries of v at the pivot columns).
    /// Throws if v is not in the subspace.
    Vector coordinates(const Vector& v) const;
    /// Standard basis vectors at the non-pivot columns; they span a complement.
    std::vector<std::size_t> complement_indices() const;
    /// v minus its component along this subspace w.r.t. the standard complement.
    Vector reduce(const Vector& v) const;

    Subspace lifted(Field target) const;

    friend bool operator==(const Subspace& a, const Subspace& b);
    /// Canonical order: by dimension, then pivots, then entries.
    friend std::strong_ordering compare(const Subspace& a, const Subspace& b);
    friend bool operator<(const Subspace& a, const Subspace& b) { return compare(a, b) < 0; }

    std::string to_string() const;

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, const Vector& v);

/// Null space {x : M x = 0}, canonical.
Subspace kernel(const Matrix& m);
/// Column space of `m`.
Subspace image(const Matrix& m);

}  // namespace lsup

#endif  // LSUP_SUBSPACE_HPP
