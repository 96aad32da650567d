#include <doctest.h>

#include "lsup/error.hpp"
#include "lsup/rootsys.hpp"
#include "lsup/structure.hpp"

using namespace lsup;

namespace {

// Classical dimension formulas, written out independently of the library.
std::size_t classical_dim(RootType t, std::size_t n) {
    switch (t) {
        case RootType::A: return n * (n + 2);
        case RootType::B:
        case RootType::C: return n * (2 * n + 1);
        case RootType::D: return n * (2 * n - 1);
        case RootType::E: return n == 6 ? 78 : (n == 7 ? 133 : 248);
        case RootType::F: return 52;
        case RootType::G: return 14;
    }
    return 0;
}

std::vector<std::pair<RootType, std::size_t>> every_type(std::size_t max_rank) {
    std::vector<std::pair<RootType, std::size_t>> out;
    for (std::size_t r = 1; r <= max_rank; ++r) out.emplace_back(RootType::A, r);
    for (std::size_t r = 2; r <= max_rank; ++r) out.emplace_back(RootType::B, r);
    for (std::size_t r = 2; r <= max_rank; ++r) out.emplace_back(RootType::C, r);
    for (std::size_t r = 3; r <= max_rank; ++r) out.emplace_back(RootType::D, r);
    for (std::size_t r = 6; r <= std::min<std::size_t>(8, max_rank); ++r) out.emplace_back(RootType::E, r);
    out.emplace_back(RootType::F, 4);
    out.emplace_back(RootType::G, 2);
    return out;
}

}  // namespace

TEST_CASE("root counts match the classical dimensions") {
    for (const auto& [t, r] : every_type(8)) {
        const RootSystem rs = build_root_system(t, r);
        CAPTURE(rs.name());
        CHECK(rs.lie_dim() == classical_dim(t, r));
        CHECK(2 * rs.positive_roots.size() == classical_dim(t, r) - r);
        for (std::size_t k = 1; k < rs.positive_roots.size(); ++k) {
            CHECK(height(rs.positive_roots[k - 1]) <= height(rs.positive_roots[k]));
        }
    }
}

TEST_CASE("highest roots in Bourbaki numbering") {
    CHECK(build_root_system(RootType::E, 8).highest_root == Root{2, 3, 4, 6, 5, 4, 3, 2});
    CHECK(build_root_system(RootType::E, 7).highest_root == Root{2, 2, 3, 4, 3, 2, 1});
    CHECK(build_root_system(RootType::E, 6).highest_root == Root{1, 2, 2, 3, 2, 1});
    CHECK(build_root_system(RootType::F, 4).highest_root == Root{2, 3, 4, 2});
    CHECK(build_root_system(RootType::G, 2).highest_root == Root{3, 2});
    CHECK(build_root_system(RootType::B, 4).highest_root == Root{1, 2, 2, 2});
    CHECK(build_root_system(RootType::C, 4).highest_root == Root{2, 2, 2, 1});
    CHECK(build_root_system(RootType::D, 5).highest_root == Root{1, 2, 2, 1, 1});
}

TEST_CASE("Cartan matrices follow Bourbaki") {
    // G2: alpha1 short
    const RootSystem g = build_root_system(RootType::G, 2);
    CHECK(g.cartan == std::vector<std::vector<int>>{{2, -1}, {-3, 2}});
    // B2: alpha2 short; C2: alpha1 short
    CHECK(build_root_system(RootType::B, 2).cartan == std::vector<std::vector<int>>{{2, -2}, {-1, 2}});
    CHECK(build_root_system(RootType::C, 2).cartan == std::vector<std::vector<int>>{{2, -1}, {-2, 2}});
    // E6: alpha2 attached to alpha4
    const RootSystem e6 = build_root_system(RootType::E, 6);
    CHECK(e6.cartan[1][3] == -1);
    CHECK(e6.cartan[1][2] == 0);
    CHECK(e6.cartan[0][2] == -1);
}

TEST_CASE("rank validation") {
    CHECK_THROWS_AS(check_rank(RootType::B, 1), InvalidRank);
    CHECK_THROWS_AS(check_rank(RootType::D, 2), InvalidRank);
    CHECK_THROWS_AS(check_rank(RootType::E, 5), InvalidRank);
    CHECK_THROWS_AS(check_rank(RootType::F, 3), InvalidRank);
    CHECK_THROWS_AS(check_rank(RootType::G, 3), InvalidRank);
    CHECK_THROWS_AS(check_rank(RootType::A, 0), InvalidRank);
    CHECK_NOTHROW(check_rank(RootType::D, 3));
    CHECK_THROWS_AS(parse_root_type("H"), ParseError);
    CHECK(parse_root_type("e") == RootType::E);
}

TEST_CASE("Chevalley structure constants") {
    // |N_{a,b}| = p + 1 where b - p a is the start of the a-string through b
    for (const auto& [t, r] : every_type(4)) {
        const RootSystem rs = build_root_system(t, r);
        const ChevalleyTable table(rs);
        for (const auto& a : rs.roots)
            for (const auto& b : rs.roots) {
                Root s = a;
                for (std::size_t k = 0; k < s.size(); ++k) s[k] += b[k];
                if (!rs.is_root(s)) {
                    CHECK(table.n(a, b) == 0);
                    continue;
                }
                int p = 0;
                Root c = b;
                while (true) {
                    for (std::size_t k = 0; k < c.size(); ++k) c[k] -= a[k];
                    if (!rs.is_root(c)) break;
                    ++p;
                }
                CHECK(std::abs(table.n(a, b)) == p + 1);
                CHECK(table.n(a, b) == -table.n(b, a));
            }
    }
    const LieAlgebra g2 = chevalley_constants(build_root_system(RootType::G, 2));
    CHECK(g2.dim() == 14);
    CHECK(killing_nondegenerate(g2));
    CHECK(g2.label(0) == "h1");
    CHECK(g2.label(2) == "e(1,0)");
}

TEST_CASE("abelian nilradicals of maximal parabolics") {
    CHECK(classify_abelian_parabolics(RootType::D, 5) == std::vector<std::size_t>{1, 4, 5});
    CHECK(classify_abelian_parabolics(RootType::E, 7) == std::vector<std::size_t>{7});
    CHECK(classify_abelian_parabolics(RootType::E, 6) == std::vector<std::size_t>{1, 6});
    CHECK(classify_abelian_parabolics(RootType::F, 4).empty());
    CHECK(classify_abelian_parabolics(RootType::G, 2).empty());
    CHECK(classify_abelian_parabolics(RootType::C, 3) == std::vector<std::size_t>{3});
    CHECK(classify_abelian_parabolics(RootType::B, 3) == std::vector<std::size_t>{1});
    CHECK(classify_abelian_parabolics(RootType::A, 3) == std::vector<std::size_t>{1, 2, 3});

    const RootSystem a3 = build_root_system(RootType::A, 3);
    const ParabolicDatum p = parabolic(a3, {2});
    CHECK(p.dim_nilradical == 4);
    CHECK(p.dim_levi == 7);
    CHECK(p.dim_P == 11);
    CHECK(p.dim_P + p.dim_opposite_nilradical == a3.lie_dim());
    CHECK_THROWS_AS(parabolic(a3, {}), EmptySigma1);
    CHECK_THROWS_AS(parabolic(a3, {4}), InvalidNode);
}

TEST_CASE("extended diagram node removal") {
    const RootSystem g2 = build_root_system(RootType::G, 2);
    CHECK(remove_node(g2, 1).label() == "A2");
    CHECK(remove_node(g2, 2).label() == "A1+A1");
    const RootSystem b2 = build_root_system(RootType::B, 2);
    CHECK(remove_node(b2, 2).label() == "A1+A1");
    CHECK(remove_node(b2, 2).dim == 6);
    CHECK(remove_node(b2, 1).label() == "B2");
    const RootSystem e8 = build_root_system(RootType::E, 8);
    CHECK(remove_node(e8, 1).label() == "D8");
    CHECK(remove_node(e8, 2).label() == "A8");
    CHECK(remove_node(e8, 8).label() == "A1+E7");
    CHECK(remove_node(e8, 8).dim == 136);
    const RootSystem f4 = build_root_system(RootType::F, 4);
    CHECK(remove_node(f4, 1).label() == "A1+C3");
    CHECK(remove_node(f4, 4).label() == "B4");
    CHECK(remove_node(build_root_system(RootType::B, 5), 3).label() == "A3+B2");  // D3 = A3
    CHECK_THROWS_AS(remove_node(g2, 3), InvalidNode);
}

TEST_CASE("Table 1 rows") {
    const auto rows = table1(4);
    CHECK(rows.size() == 34);
    auto find = [&](const std::string& alg) {
        for (const auto& r : rows)
            if (r.algebra == alg) return r;
        FAIL("missing row " << alg);
        return rows.front();
    };
    const Table1Row g2 = find("G2");
    CHECK(g2.M_dim == 3);
    CHECK(g2.alpha == 3);
    CHECK(g2.gamma == 6);
    CHECK(g2.pass());
    const Table1Row e7 = find("E7");
    CHECK(e7.M_dim == 3);
    CHECK(e7.alpha == 27);
    CHECK(e7.gamma == 63);
    CHECK(e7.pass());
    // D_{2n+1}: the true dimension is (2n+1)(4n+1) = 8n^2 + 6n + 1
    for (long n = 2; n <= 4; ++n) {
        const Table1Row d = find("D" + std::to_string(2 * n + 1));
        CHECK(d.L_dim == 8 * n * n + 6 * n + 1);
        CHECK(d.gamma == 4 * n * n + 2 * n);
        CHECK(d.table_L_dim == 8 * n * n + 6 * n + 3);
        CHECK(d.alpha_ineq);
        CHECK(d.gamma_ineq);
        CHECK(d.M_match);
    }
    for (const auto& r : rows) {
        CAPTURE(r.algebra);
        CHECK(r.alpha_ineq);
        CHECK(r.gamma_ineq);
        CHECK(r.M_match);
        CHECK_FALSE(r.alpha_note.empty());
        if (r.type != RootType::D || r.type_rank % 2 == 0) CHECK(r.pass());
    }
    CHECK_THROWS(table1(1));
}
