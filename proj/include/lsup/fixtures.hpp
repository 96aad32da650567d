#ifndef LSUP_FIXTURES_HPP
#define LSUP_FIXTURES_HPP

#include <optional>
#include <string>
#include <vector>

#include "lsup/io.hpp"

namespace lsup {

struct Fixture {
    std::string name;
    std::string file;
    std::optional<LieAlgebra> algebra;  // empty when loading failed
    std::string load_error;
    Json meta;  // the whole document; curated keys live under "expected" and "maximal_subalgebras"

    bool expects_load_error() const { return meta.contains("expect_load_error"); }
};

/// Directory compiled in at build time.
std::string default_fixture_dir();

/// Loads every file listed in `dir`/manifest.json, in manifest order. Load failures are
/// recorded on the fixture, not thrown.
std::vector<Fixture> load_fixtures(const std::string& dir);

/// Subspace of `l` spanned by a metadata basis list (each entry a coefficient vector).
Subspace meta_subspace(const LieAlgebra& l, const Json& basis);

}  // namespace lsup

#endif  // LSUP_FIXTURES_HPP
