#ifndef LSUP_IO_HPP
#define LSUP_IO_HPP

#include <string>

#include <json.hpp>

#include "lsup/classify.hpp"
#include "lsup/lie_algebra.hpp"

namespace lsup {

using Json = nlohmann::ordered_json;

/// "Q" or {"minpoly": [c0, ..., 1], "name": "i"}.
Field parse_field(const Json& j);
Json field_to_json(Field f);

/// Integer, "p/q" string, or (extension fields) an array of such, low power first.
FieldElement parse_coeff(const Json& j, Field f);
Json coeff_to_json(const FieldElement& x);
Vector parse_vector(const Json& j, Field f, std::size_t n);
Json vector_to_json(const Vector& v);

/// Structure-constant document: field, dim, optional labels, 1-based brackets [i, j, [..]] with i < j.
/// Unknown keys are ignored. Throws ParseError, or JacobiViolation from the build.
LieAlgebra parse_algebra(const Json& doc);
LieAlgebra parse_algebra_text(const std::string& text);
Json read_json_file(const std::string& path);
LieAlgebra load_algebra(const std::string& path);
Json algebra_to_json(const LieAlgebra& l);

Json verdict_to_json(const Verdict& v);

}  // namespace lsup

#endif  // LSUP_IO_HPP
