#ifndef LSUP_FRATTINI_HPP
#define LSUP_FRATTINI_HPP

#include <optional>
#include <string>

#include "lsup/structure.hpp"

namespace lsup {

/// Subalgebra U with A + U = L and A ∩ U = 0, if one exists. A must be an abelian ideal.
std::optional<Subspace> has_complement(const LieAlgebra& l, const Subspace& a);

/// For solvable L: true iff Asoc L has a complement.
bool is_phi_free(const LieAlgebra& l);

struct FrattiniReport {
    enum class Method { Nilpotent, SolvableRecursive, Declared };
    Subspace phi;
    bool is_phi_free = false;
    Method method = Method::Declared;
};
std::string to_string(FrattiniReport::Method m);

/// phi(L) for solvable L (and phi = 0 for semisimple L); Unsupported otherwise.
FrattiniReport frattini_ideal(const LieAlgebra& l);

}  // namespace lsup

#endif  // LSUP_FRATTINI_HPP
