#ifndef LSUP_INVARIANTS_HPP
#define LSUP_INVARIANTS_HPP

#include <string>
#include <vector>

#include "lsup/fixtures.hpp"

namespace lsup {

struct PropertyResult {
    std::string module;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

/// Subalgebra generated by `gens`.
Subspace generated_subalgebra(const LieAlgebra& l, const std::vector<Vector>& gens);

/// Randomized A1 + A2 decomposition check over Q against Q(i); `pairs` pairs drawn from
/// the rational fixtures with a fixed seed.
PropertyResult lemma24_suite(const std::vector<Fixture>& fixtures, std::size_t pairs = 20);

/// decide_X(L) == decide_X(L / phi(L)) on every solvable fixture, X in {MD_MN, MU, MO}.
PropertyResult saturation_suite(const std::vector<Fixture>& fixtures);

/// Every module-level property over the corpus, in a fixed order.
std::vector<PropertyResult> run_invariants(const std::vector<Fixture>& fixtures);

}  // namespace lsup

#endif  // LSUP_INVARIANTS_HPP
