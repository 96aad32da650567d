#ifndef LSUP_MODULE_HPP
#define LSUP_MODULE_HPP

#include <vector>

#include "lsup/lie_algebra.hpp"
#include "lsup/subspace.hpp"

namespace lsup {

// Modules are given by operator families acting on F^n (column vectors).

/// Matrices of the operators restricted to an invariant subspace, in its echelon coordinates.
std::vector<Matrix> restrict_ops(const std::vector<Matrix>& ops, const Subspace& v);

/// Basis of the associative algebra (without identity) generated by `gens`.
std::vector<Matrix> envelope(const std::vector<Matrix>& gens);

/// {a in span(env) : tr(ab) = 0 for all b}: the radical in characteristic zero.
std::vector<Matrix> trace_radical(const std::vector<Matrix>& env);

/// Sum of the irreducible submodules of F^n.
Subspace module_socle(const std::vector<Matrix>& ops, Field f, std::size_t n);

/// {X : X A = A X for all A}
std::vector<Matrix> commutant(const std::vector<Matrix>& ops, Field f, std::size_t n);

/// Splits a completely reducible invariant subspace w into irreducible submodules.
/// One valid decomposition is returned, in canonical subspace order.
std::vector<Subspace> irreducible_decomposition(const std::vector<Matrix>& ops, Field f, const Subspace& w);

/// Sum of the minimal abelian ideals.
Subspace asoc(const LieAlgebra& l);
std::vector<Subspace> minimal_abelian_ideals(const LieAlgebra& l);

}  // namespace lsup

#endif  // LSUP_MODULE_HPP
