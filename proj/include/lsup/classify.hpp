#ifndef LSUP_CLASSIFY_HPP
#define LSUP_CLASSIFY_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lsup/structure.hpp"

namespace lsup {

struct StructuralFlags {
    bool solvable = false;
    bool nilpotent = false;
    bool completely_solvable = false;
    bool metabelian = false;
    bool supersolvable_basefield = false;
    bool semisimple = false;
};
StructuralFlags structural_flags(const LieAlgebra& l);

/// Supersolvable over the base field: a flag of ideals with 1-dim factors.
bool is_supersolvable(const LieAlgebra& l);

/// Basis (u_{-1}, u_0, u_1) with [u_{-1}, u_0] = u_{-1}, [u_{-1}, u_1] = u_0,
/// [u_0, u_1] = u_1, if L is three-dimensional simple and split over its field.
/// Over a quadratic extension only small search vectors are tried (Unsupported
/// when that is inconclusive).
std::optional<std::array<Vector, 3>> split_A1_basis(const LieAlgebra& l);
bool is_split_A1(const LieAlgebra& l);

/// Nonzero v with v^T K v = 0 for a symmetric rational 3x3 form, or none.
std::optional<Vector> isotropic_vector(const Matrix& form);

enum class VerdictValue { Yes, No, Unknown };
enum class DecisionMode { Base, Closure };
std::string to_string(VerdictValue v);
std::string to_string(DecisionMode m);

struct Verdict {
    std::string cls;  // "MO", "MA", "MD_MN", "MU"
    VerdictValue value = VerdictValue::Unknown;
    std::string rule;  // empty for Unknown
    DecisionMode mode = DecisionMode::Closure;
    std::optional<Subspace> witness;
    std::vector<Vector> witness_basis;
};

Verdict decide_MD_MN(const LieAlgebra& l, DecisionMode mode = DecisionMode::Closure);
Verdict decide_MU(const LieAlgebra& l, DecisionMode mode = DecisionMode::Closure);
/// Always answers over the base field.
Verdict decide_MO(const LieAlgebra& l);
Verdict decide_MA(const LieAlgebra& l, DecisionMode mode = DecisionMode::Closure);

/// Heuristic search for an abelian subalgebra U with M + U = L. None is not a
/// proof that no supplement exists. M must be a proper subalgebra.
std::optional<Subspace> find_abelian_supplement(const LieAlgebra& l, const Subspace& m);

}  // namespace lsup

#endif  // LSUP_CLASSIFY_HPP
