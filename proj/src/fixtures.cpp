#include "lsup/fixtures.hpp"

#include "lsup/error.hpp"

namespace lsup {

std::string default_fixture_dir() { return LSUP_FIXTURE_DIR; }

std::vector<Fixture> load_fixtures(const std::string& dir) {
    const Json manifest = read_json_file(dir + "/manifest.json");
    if (!manifest.contains("fixtures") || !manifest.at("fixtures").is_array()) {
        throw ParseError(dir + "/manifest.json: missing \"fixtures\" list");
    }
    std::vector<Fixture> out;
    for (const auto& entry : manifest.at("fixtures")) {
        Fixture fx;
        fx.file = entry.get<std::string>();
        fx.name = fx.file.substr(0, fx.file.rfind('.'));
        try {
            fx.meta = read_json_file(dir + "/" + fx.file);
            if (fx.meta.contains("name")) fx.name = fx.meta.at("name").get<std::string>();
            fx.algebra = parse_algebra(fx.meta);
        } catch (const Error& e) {
            fx.load_error = e.what();
        }
        out.push_back(std::move(fx));
    }
    return out;
}

Subspace meta_subspace(const LieAlgebra& l, const Json& basis) {
    std::vector<Vector> vs;
    for (const auto& v : basis) vs.push_back(parse_vector(v, l.field(), l.dim()));
    return Subspace::span(l.field(), l.dim(), vs);
}

}  // namespace lsup
