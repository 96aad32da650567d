#ifndef LSUP_TESTS_HELPERS_HPP
#define LSUP_TESTS_HELPERS_HPP

#include <string>
#include <vector>

#include "lsup/fixtures.hpp"
#include "lsup/io.hpp"

namespace lsup::test {

inline LieAlgebra fixture(const std::string& name) { return load_algebra(default_fixture_dir() + "/" + name + ".json"); }

inline Field qi() { return Field::extension({1, 0, 1}, "i"); }

inline Vector vec(std::initializer_list<long> xs) {
    Vector v;
    for (long x : xs) v.push_back(FieldElement(x));
    return v;
}

inline Vector vec(Field f, std::initializer_list<long> xs) {
    Vector v;
    for (long x : xs) v.push_back(FieldElement(x).lifted(f));
    return v;
}

inline Subspace span(const LieAlgebra& l, const std::vector<Vector>& vs) { return Subspace::span(l.field(), l.dim(), vs); }

inline Subspace units(const LieAlgebra& l, std::initializer_list<std::size_t> one_based) {
    std::vector<Vector> vs;
    for (std::size_t k : one_based) vs.push_back(unit_vector(l.field(), l.dim(), k - 1));
    return span(l, vs);
}

}  // namespace lsup::test

#endif  // LSUP_TESTS_HELPERS_HPP
