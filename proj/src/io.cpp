#include "lsup/io.hpp"

#include <fstream>
#include <sstream>

#include "lsup/error.hpp"

namespace lsup {

namespace {

Rational parse_scalar(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("expected an integer or a \"p/q\" string, got " + j.dump());
}

Json scalar_to_json(const Rational& r) {
    if (r.get_den() == 1 && r.get_num().fits_slong_p()) return Json(r.get_num().get_si());
    return Json(format_rational(r));
}

std::size_t parse_index(const Json& j, std::size_t dim) {
    if (!j.is_number_integer()) throw ParseError("bracket index must be an integer, got " + j.dump());
    const long v = j.get<long>();
    if (v < 1 || static_cast<std::size_t>(v) > dim) {
        throw ParseError("bracket index " + std::to_string(v) + " out of range 1.." + std::to_string(dim));
    }
    return static_cast<std::size_t>(v - 1);
}

}  // namespace

Field parse_field(const Json& j) {
    if (j.is_null() || (j.is_string() && j.get<std::string>() == "Q")) return Field::rationals();
    if (j.is_object() && j.contains("minpoly")) {
        const Json& mp = j.at("minpoly");
        if (!mp.is_array() || mp.size() < 3) throw ParseError("minpoly must list at least c0, c1, 1");
        std::vector<Rational> coeffs;
        for (const auto& c : mp) coeffs.push_back(parse_scalar(c));
        if (coeffs.back() != 1) throw ParseError("minpoly must be monic");
        std::string name = j.contains("name") ? j.at("name").get<std::string>() : std::string("a");
        return Field::extension(std::move(coeffs), std::move(name));
    }
    throw ParseError("field must be \"Q\" or {\"minpoly\": [...]}, got " + j.dump());
}

Json field_to_json(Field f) {
    if (f.is_rationals()) return Json("Q");
    Json mp = Json::array();
    for (const auto& c : f.minpoly()) mp.push_back(scalar_to_json(c));
    Json out = Json::object();
    out["minpoly"] = mp;
    out["name"] = f.generator_name();
    return out;
}

FieldElement parse_coeff(const Json& j, Field f) {
    if (!j.is_array()) return FieldElement(parse_scalar(j)).lifted(f);
    if (f.is_rationals()) throw ParseError("array coefficient " + j.dump() + " over Q");
    if (j.size() > f.degree()) throw ParseError("coefficient " + j.dump() + " has too many components");
    FieldElement::Coeffs c(f.degree(), Rational(0));
    for (std::size_t k = 0; k < j.size(); ++k) c[k] = parse_scalar(j[k]);
    return FieldElement(f, std::move(c));
}

Json coeff_to_json(const FieldElement& x) {
    if (x.is_rational()) return scalar_to_json(x.rational());
    Json out = Json::array();
    for (const auto& c : x.coeffs()) out.push_back(scalar_to_json(c));
    return out;
}

Vector parse_vector(const Json& j, Field f, std::size_t n) {
    if (!j.is_array() || j.size() != n) {
        throw ParseError("expected a vector of length " + std::to_string(n) + ", got " + j.dump());
    }
    Vector v;
    v.reserve(n);
    for (const auto& c : j) v.push_back(parse_coeff(c, f));
    return v;
}

Json vector_to_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(coeff_to_json(x));
    return out;
}

LieAlgebra parse_algebra(const Json& doc) {
    if (!doc.is_object()) throw ParseError("structure-constant document must be a JSON object");
    const Field f = parse_field(doc.contains("field") ? doc.at("field") : Json());
    if (!doc.contains("dim") || !doc.at("dim").is_number_integer() || doc.at("dim").get<long>() < 0) {
        throw ParseError("missing or invalid \"dim\"");
    }
    const auto n = static_cast<std::size_t>(doc.at("dim").get<long>());
    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        for (const auto& s : doc.at("labels")) labels.push_back(s.get<std::string>());
        if (labels.size() != n) throw ParseError("labels must have length dim");
    }
    std::vector<BracketEntry> entries;
    if (doc.contains("brackets")) {
        for (const auto& b : doc.at("brackets")) {
            if (!b.is_array() || b.size() != 3) throw ParseError("bracket entries are [i, j, [c1, ..., cn]], got " + b.dump());
            const std::size_t i = parse_index(b[0], n);
            const std::size_t j = parse_index(b[1], n);
            if (i >= j) throw ParseError("bracket entry " + b.dump() + " needs i < j");
            entries.push_back({i, j, parse_vector(b[2], f, n)});
        }
    }
    try {
        return build_algebra(f, n, entries, std::move(labels));
    } catch (const JacobiViolation&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return Json::parse(ss.str());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

LieAlgebra parse_algebra_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
    return parse_algebra(doc);
}

LieAlgebra load_algebra(const std::string& path) { return parse_algebra(read_json_file(path)); }

Json algebra_to_json(const LieAlgebra& l) {
    Json out = Json::object();
    out["field"] = field_to_json(l.field());
    out["dim"] = l.dim();
    Json labels = Json::array();
    for (std::size_t i = 0; i < l.dim(); ++i) labels.push_back(l.label(i));
    out["labels"] = labels;
    Json br = Json::array();
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t j = i + 1; j < l.dim(); ++j) {
            const SparseVector& v = l.basis_bracket(i, j);
            if (v.empty()) continue;
            br.push_back(Json::array({i + 1, j + 1, vector_to_json(to_dense(l.field(), l.dim(), v))}));
        }
    out["brackets"] = br;
    return out;
}

Json verdict_to_json(const Verdict& v) {
    Json out = Json::object();
    out["class"] = v.cls;
    out["value"] = to_string(v.value);
    out["rule"] = v.rule.empty() ? Json() : Json(v.rule);
    out["mode"] = to_string(v.mode);
    if (v.witness) {
        Json w = Json::array();
        const auto& basis = v.witness_basis.empty() ? v.witness->basis_vectors() : v.witness_basis;
        for (const auto& x : basis) w.push_back(vector_to_json(x));
        out["witness"] = w;
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

}  // namespace lsup
