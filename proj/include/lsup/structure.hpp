#ifndef LSUP_STRUCTURE_HPP
#define LSUP_STRUCTURE_HPP

#include <optional>
#include <vector>

#include "lsup/lie_algebra.hpp"
#include "lsup/subspace.hpp"

namespace lsup {

Subspace full_space(const LieAlgebra& l);
Subspace zero_space(const LieAlgebra& l);

/// span{[a, b] : a in A, b in B}
Subspace product_space(const LieAlgebra& l, const Subspace& a, const Subspace& b);
Subspace derived_algebra(const LieAlgebra& l);

struct SeriesReport {
    std::vector<Subspace> derived;        // L = L^(0) > L^(1) > ... (stable term last)
    std::vector<Subspace> lower_central;  // L = L^1 > L^2 > ...
    bool is_solvable = false;
    bool is_nilpotent = false;
};
SeriesReport series(const LieAlgebra& l);
bool is_solvable(const LieAlgebra& l);
bool is_nilpotent(const LieAlgebra& l);

bool is_subalgebra(const LieAlgebra& l, const Subspace& s);
bool is_ideal(const LieAlgebra& l, const Subspace& s);
bool is_abelian(const LieAlgebra& l, const Subspace& s);
/// s must be a subalgebra.
bool is_nilpotent_subalgebra(const LieAlgebra& l, const Subspace& s);
bool is_solvable_subalgebra(const LieAlgebra& l, const Subspace& s);

/// C_L(A) = {x : [x, A] = 0}
Subspace centralizer(const LieAlgebra& l, const Subspace& a);
Subspace center(const LieAlgebra& l);

Matrix killing_form(const LieAlgebra& l);
/// True iff the Killing form has full rank.
bool killing_nondegenerate(const LieAlgebra& l);

/// Largest solvable ideal, as the Killing-orthogonal of L^2.
Subspace radical(const LieAlgebra& l);
/// Largest nilpotent ideal, via the trace radical of the associative envelope of ad L.
Subspace nilradical(const LieAlgebra& l);
/// Stable term of the derived series.
Subspace terminal_derived(const LieAlgebra& l);

/// Structure constants of a subalgebra in its echelon basis.
LieAlgebra subalgebra_algebra(const LieAlgebra& l, const Subspace& s);

/// L/I on the standard complement of I; `section[k]` is the basis index of L
/// lifting quotient basis element k.
struct QuotientMap {
    LieAlgebra algebra;
    Subspace ideal;
    std::vector<std::size_t> section;

    /// Coordinates in L/I of x in L.
    Vector project(const Vector& x) const;
    Subspace image(const Subspace& s) const;
    /// Full preimage in L of a subspace of L/I.
    Subspace preimage(const Subspace& s) const;
    Vector lift(const Vector& y) const;
};
QuotientMap quotient(const LieAlgebra& l, const Subspace& ideal);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);
/// Same structure constants over `target`.
LieAlgebra extend_scalars(const LieAlgebra& l, Field target);
/// Algebra in the basis given by the columns of the invertible matrix p.
LieAlgebra change_basis(const LieAlgebra& l, const Matrix& p);

/// Simple ideals of a semisimple algebra, in canonical order.
std::vector<Subspace> decompose_semisimple(const LieAlgebra& l);

/// Subspace with cached closure flags.
class SubalgebraHandle {
public:
    SubalgebraHandle(const LieAlgebra& l, Subspace s);
    const Subspace& space() const noexcept { return space_; }
    bool is_subalgebra() const;
    bool is_ideal() const;
    bool is_abelian() const;
    bool is_nilpotent_subalgebra() const;

private:
    const LieAlgebra* algebra_;
    Subspace space_;
    mutable std::optional<bool> subalgebra_, ideal_, abelian_, nilpotent_;
};

}  // namespace lsup

#endif  // LSUP_STRUCTURE_HPP
