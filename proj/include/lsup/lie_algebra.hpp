#ifndef LSUP_LIE_ALGEBRA_HPP
#define LSUP_LIE_ALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lsup/matrix.hpp"

namespace lsup {

struct Term {
    std::uint32_t index;
    FieldElement coeff;
};
/// Sparse coordinate vector, indices strictly increasing, no zero coefficients.
using SparseVector = std::vector<Term>;

SparseVector to_sparse(const Vector& v);
Vector to_dense(Field f, std::size_t n, const SparseVector& s);
/// acc += s * v, merging by index.
void sparse_axpy(SparseVector& acc, const FieldElement& s, const SparseVector& v);
std::string to_string(const SparseVector& v, const std::vector<std::string>& labels);

/// One nonzero product [b_i, b_j] = value (0-based, i != j).
struct BracketEntry {
    std::size_t i;
    std::size_t j;
    Vector value;
};

/// Finite-dimensional Lie algebra given by structure constants on a basis b_0..b_{n-1}.
/// Only [b_i, b_j] with i < j is stored; antisymmetry is implicit.
class LieAlgebra {
public:
    LieAlgebra() = default;

    Field field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::string label(std::size_t i) const;

    /// [b_i, b_j] in sparse form; zero when i == j.
    SparseVector basis_bracket(std::size_t i, std::size_t j) const;
    /// Stored product for i < j.
    const SparseVector& pair(std::size_t i, std::size_t j) const { return table_[pair_index(i, j)]; }

    Vector bracket(const Vector& x, const Vector& y) const;
    /// ad x as a matrix: column k holds [x, b_k].
    Matrix ad(const Vector& x) const;
    Matrix ad_basis(std::size_t i) const;
    /// Nonzero brackets, i < j, in row-major order.
    std::vector<BracketEntry> entries() const;
    bool is_abelian() const;

    /// Bypasses Jacobi validation; callers must guarantee a valid table.
    static LieAlgebra from_trusted(Field f, std::size_t dim, const std::vector<BracketEntry>& entries,
                                   std::vector<std::string> labels = {});

private:
    std::size_t pair_index(std::size_t i, std::size_t j) const noexcept {
        return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
    }

    Field field_;
    std::size_t dim_ = 0;
    std::vector<SparseVector> table_;
    std::vector<std::string> labels_;
};

/// Validated constructor: indices in range, entries with i > j are stored negated,
/// duplicate pairs rejected, and the Jacobi identity checked on every basis triple.
LieAlgebra build_algebra(Field f, std::size_t dim, const std::vector<BracketEntry>& entries,
                         std::vector<std::string> labels = {});

/// Jacobiator [b_i,[b_j,b_k]] + [b_j,[b_k,b_i]] + [b_k,[b_i,b_j]] in sparse form.
SparseVector jacobiator(const LieAlgebra& l, std::size_t i, std::size_t j, std::size_t k);

struct JacobiFailure {
    std::size_t i, j, k;
    SparseVector residual;
};

/// First failing triple in lexicographic order.
std::optional<JacobiFailure> find_jacobi_violation_serial(const LieAlgebra& l);
std::optional<JacobiFailure> find_jacobi_violation_parallel(const LieAlgebra& l);

/// Killing form K_ij = tr(ad b_i ad b_j), computed from the sparse table.
Matrix killing_form_serial(const LieAlgebra& l);
Matrix killing_form_parallel(const LieAlgebra& l);

}  // namespace lsup

#endif  // LSUP_LIE_ALGEBRA_HPP
