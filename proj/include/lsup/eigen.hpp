#ifndef LSUP_EIGEN_HPP
#define LSUP_EIGEN_HPP

#include <vector>

#include "lsup/polynomial.hpp"
#include "lsup/subspace.hpp"

namespace lsup {

struct EigenPair {
    FieldElement value;
    Subspace space;
};

/// Eigenvalues of M lying in its field with their eigenspaces, sorted by value.
std::vector<EigenPair> rational_eigendata(const Matrix& m);

/// Joint eigenspaces of a family of operators on F^n: each returned subspace is
/// a nonzero intersection of eigenspaces, one eigenvalue per operator. Every
/// common eigenvector lies in exactly one of them.
std::vector<Subspace> joint_eigenspaces(const std::vector<Matrix>& ops, Field f, std::size_t n);

}  // namespace lsup

#endif  // LSUP_EIGEN_HPP
