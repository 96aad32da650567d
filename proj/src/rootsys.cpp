#include "lsup/rootsys.hpp"

#include <algorithm>
#include <cctype>

#include "lsup/error.hpp"

namespace lsup {

char type_letter(RootType t) { return static_cast<char>('A' + static_cast<int>(t)); }

RootType parse_root_type(const std::string& s) {
    if (s.size() != 1) throw ParseError("root type must be one of A-G, got '" + s + "'");
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (c < 'A' || c > 'G') throw ParseError("root type must be one of A-G, got '" + s + "'");
    return static_cast<RootType>(c - 'A');
}

void check_rank(RootType t, std::size_t r) {
    bool ok = false;
    switch (t) {
        case RootType::A: ok = r >= 1; break;
        case RootType::B: ok = r >= 2; break;
        case RootType::C: ok = r >= 2; break;
        case RootType::D: ok = r >= 3; break;
        case RootType::E: ok = r >= 6 && r <= 8; break;
        case RootType::F: ok = r == 4; break;
        case RootType::G: ok = r == 2; break;
    }
    if (!ok) throw InvalidRank(std::string("no simple type ") + type_letter(t) + std::to_string(r));
}

std::size_t simple_lie_dimension(RootType t, std::size_t n) {
    switch (t) {
        case RootType::A: return n * (n + 2);
        case RootType::B:
        case RootType::C: return n * (2 * n + 1);
        case RootType::D: return n * (2 * n - 1);
        case RootType::E: return n == 6 ? 78 : n == 7 ? 133 : 248;
        case RootType::F: return 52;
        case RootType::G: return 14;
    }
    return 0;
}

std::string type_name(RootType t, std::size_t rank) { return std::string(1, type_letter(t)) + std::to_string(rank); }

int height(const Root& r) {
    int h = 0;
    for (int c : r) h += c;
    return h;
}

Rational RootSystem::inner(const Root& a, const Root& b) const {
    Rational s = 0;
    for (std::size_t i = 0; i < rank; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < rank; ++j) {
            if (b[j] != 0) s += gram[i][j] * a[i] * b[j];
        }
    }
    return s;
}

long RootSystem::index_of(const Root& r) const {
    const auto it = index.find(r);
    return it == index.end() ? -1 : static_cast<long>(it->second);
}

namespace {

using EVec = std::vector<Rational>;

EVec unit(std::size_t dim, std::size_t i, Rational c = 1) {
    EVec v(dim, Rational(0));
    v[i] = c;
    return v;
}

EVec plus(const EVec& a, const EVec& b) {
    EVec v = a;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += b[i];
    return v;
}

Rational dot(const EVec& a, const EVec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

struct Euclidean {
    std::vector<EVec> simple;
    std::vector<EVec> roots;
};

/// +-e_i +- e_j for i < j
void add_pm_pairs(std::vector<EVec>& out, std::size_t dim, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (int s : {1, -1})
                for (int t : {1, -1}) out.push_back(plus(unit(dim, i, s), unit(dim, j, t)));
}

Euclidean e8_model() {
    Euclidean m;
    const std::size_t d = 8;
    EVec a1(d, Rational(-1, 2));
    a1[0] = Rational(1, 2);
    a1[7] = Rational(1, 2);
    m.simple.push_back(a1);
    m.simple.push_back(plus(unit(d, 0), unit(d, 1)));
    for (std::size_t i = 1; i < 7; ++i) m.simple.push_back(plus(unit(d, i), unit(d, i - 1, -1)));
    add_pm_pairs(m.roots, d, d);
    for (unsigned mask = 0; mask < 256; ++mask) {
        if (__builtin_popcount(mask) % 2 != 0) continue;
        EVec v(d);
        for (std::size_t i = 0; i < d; ++i) v[i] = (mask >> i & 1u) ? Rational(-1, 2) : Rational(1, 2);
        m.roots.push_back(v);
    }
    return m;
}

Euclidean euclidean_model(RootType t, std::size_t n) {
    Euclidean m;
    switch (t) {
        case RootType::A: {
            const std::size_t d = n + 1;
            for (std::size_t i = 0; i < n; ++i) m.simple.push_back(plus(unit(d, i), unit(d, i + 1, -1)));
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    if (i != j) m.roots.push_back(plus(unit(d, i), unit(d, j, -1)));
            break;
        }
        case RootType::B:
        case RootType::C:
        case RootType::D: {
            for (std::size_t i = 0; i + 1 < n; ++i) m.simple.push_back(plus(unit(n, i), unit(n, i + 1, -1)));
            if (t == RootType::B) m.simple.push_back(unit(n, n - 1));
            if (t == RootType::C) m.simple.push_back(unit(n, n - 1, 2));
            if (t == RootType::D) m.simple.push_back(plus(unit(n, n - 2), unit(n, n - 1)));
            add_pm_pairs(m.roots, n, n);
            if (t != RootType::D) {
                const Rational c = t == RootType::B ? 1 : 2;
                for (std::size_t i = 0; i < n; ++i) {
                    m.roots.push_back(unit(n, i, c));
                    m.roots.push_back(unit(n, i, -c));
                }
            }
            break;
        }
        case RootType::G: {
            const std::size_t d = 3;
            m.simple.push_back(plus(unit(d, 0), unit(d, 1, -1)));
            m.simple.push_back(plus(plus(unit(d, 0, -2), unit(d, 1)), unit(d, 2)));
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) {
                    if (i == j) continue;
                    m.roots.push_back(plus(unit(d, i), unit(d, j, -1)));
                }
            for (std::size_t i = 0; i < d; ++i)
                for (int s : {1, -1}) {
                    EVec v(d, Rational(-s));
                    v[i] = 2 * s;
                    m.roots.push_back(v);
                }
            break;
        }
        case RootType::F: {
            const std::size_t d = 4;
            m.simple.push_back(plus(unit(d, 1), unit(d, 2, -1)));
            m.simple.push_back(plus(unit(d, 2), unit(d, 3, -1)));
            m.simple.push_back(unit(d, 3));
            m.simple.push_back(EVec{Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)});
            for (std::size_t i = 0; i < d; ++i) {
                m.roots.push_back(unit(d, i));
                m.roots.push_back(unit(d, i, -1));
            }
            add_pm_pairs(m.roots, d, d);
            for (unsigned mask = 0; mask < 16; ++mask) {
                EVec v(d);
                for (std::size_t i = 0; i < d; ++i) v[i] = (mask >> i & 1u) ? Rational(-1, 2) : Rational(1, 2);
                m.roots.push_back(v);
            }
            break;
        }
        case RootType::E:
            m = e8_model();
            break;
    }
    return m;
}

/// Exact Gauss-Jordan inverse of a Gram matrix.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> g) {
    const std::size_t n = g.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (g[p][c] == 0) ++p;
        std::swap(g[p], g[c]);
        std::swap(inv[p], inv[c]);
        const Rational s = 1 / Rational(g[c][c]);
        for (std::size_t k = 0; k < n; ++k) {
            g[c][k] *= s;
            inv[c][k] *= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || g[r][c] == 0) continue;
            const Rational t = g[r][c];
            for (std::size_t k = 0; k < n; ++k) {
                g[r][k] -= t * g[c][k];
                inv[r][k] -= t * inv[c][k];
            }
        }
    }
    return inv;
}

}  // namespace

RootSystem build_root_system(RootType t, std::size_t rank) {
    check_rank(t, rank);
    const Euclidean m = euclidean_model(t, rank);
    const std::size_t full = m.simple.size();  // 8 for E-types
    std::vector<std::vector<Rational>> g(full, std::vector<Rational>(full));
    for (std::size_t i = 0; i < full; ++i)
        for (std::size_t j = 0; j < full; ++j) g[i][j] = dot(m.simple[i], m.simple[j]);
    const auto ginv = invert(g);

    RootSystem rs;
    rs.type = t;
    rs.rank = rank;
    std::vector<Root> pos;
    for (const auto& r : m.roots) {
        std::vector<Rational> b(full);
        for (std::size_t j = 0; j < full; ++j) b[j] = dot(r, m.simple[j]);
        Root c(full);
        bool keep = true;
        for (std::size_t i = 0; i < full; ++i) {
            Rational ci = 0;
            for (std::size_t j = 0; j < full; ++j) ci += ginv[i][j] * b[j];
            if (ci.get_den() != 1) throw InternalInconsistency("non-integral root coordinate in " + type_name(t, rank));
            c[i] = static_cast<int>(ci.get_num().get_si());
            if (i >= rank && c[i] != 0) keep = false;
        }
        if (!keep) continue;
        c.resize(rank);
        bool nonneg = true;
        bool nonpos = true;
        for (int x : c) {
            nonneg = nonneg && x >= 0;
            nonpos = nonpos && x <= 0;
        }
        if (!nonneg && !nonpos) throw InternalInconsistency("root with mixed-sign coordinates in " + type_name(t, rank));
        if (nonneg) pos.push_back(c);
    }
    std::sort(pos.begin(), pos.end(), [](const Root& a, const Root& b) {
        if (height(a) != height(b)) return height(a) < height(b);
        return a > b;
    });
    rs.positive_roots = pos;
    rs.roots = pos;
    for (const auto& r : pos) {
        Root neg = r;
        for (auto& x : neg) x = -x;
        rs.roots.push_back(neg);
    }
    for (std::size_t i = 0; i < rs.roots.size(); ++i) rs.index[rs.roots[i]] = i;
    if (rs.index.size() != rs.roots.size()) throw InternalInconsistency("duplicate roots in " + type_name(t, rank));

    rs.gram.assign(rank, std::vector<Rational>(rank));
    rs.cartan.assign(rank, std::vector<int>(rank));
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) rs.gram[i][j] = g[i][j];
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) {
            const Rational a = 2 * rs.gram[i][j] / rs.gram[j][j];
            rs.cartan[i][j] = static_cast<int>(a.get_num().get_si());
        }
    rs.highest_root = pos.back();
    for (const auto& r : pos) {
        if (height(r) == height(rs.highest_root) && r != rs.highest_root) {
            throw InternalInconsistency("highest root not unique in " + type_name(t, rank));
        }
    }
    if (rs.lie_dim() != simple_lie_dimension(t, rank)) {
        throw InternalInconsistency("root count mismatch for " + type_name(t, rank));
    }
    return rs;
}

ParabolicDatum parabolic(const RootSystem& rs, const std::vector<std::size_t>& sigma1) {
    if (sigma1.empty()) throw EmptySigma1("Sigma_1 must be non-empty");
    ParabolicDatum pd;
    pd.system = rs;
    pd.sigma1 = sigma1;
    std::sort(pd.sigma1.begin(), pd.sigma1.end());
    pd.sigma1.erase(std::unique(pd.sigma1.begin(), pd.sigma1.end()), pd.sigma1.end());
    for (std::size_t i : pd.sigma1) {
        if (i < 1 || i > rs.rank) {
            throw InvalidNode("simple root index " + std::to_string(i) + " out of range for " + rs.name());
        }
    }
    auto off_sigma1 = [&](const Root& r) {
        for (std::size_t i : pd.sigma1) {
            if (r[i - 1] != 0) return false;
        }
        return true;
    };
    for (const auto& r : rs.roots) {
        if (off_sigma1(r)) pd.delta1.push_back(r);
    }
    for (const auto& r : rs.positive_roots) {
        if (!off_sigma1(r)) pd.delta2_plus.push_back(r);
    }
    pd.dim_nilradical = pd.delta2_plus.size();
    pd.dim_opposite_nilradical = pd.delta2_plus.size();
    pd.dim_levi = rs.rank + pd.delta1.size();
    pd.dim_P = rs.rank + pd.delta1.size() + pd.delta2_plus.size();
    return pd;
}

bool nilradical_abelian(const ParabolicDatum& pd) {
    const auto& d = pd.delta2_plus;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i; j < d.size(); ++j) {
            Root s = d[i];
            for (std::size_t k = 0; k < s.size(); ++k) s[k] += d[j][k];
            if (pd.system.is_root(s)) return false;
        }
    return true;
}

std::vector<std::size_t> classify_abelian_parabolics(RootType t, std::size_t rank) {
    const RootSystem rs = build_root_system(t, rank);
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i <= rank; ++i) {
        if (nilradical_abelian(parabolic(rs, {i}))) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> expected_abelian_parabolics(RootType t, std::size_t n) {
    check_rank(t, n);
    std::vector<std::size_t> out;
    switch (t) {
        case RootType::A:
            for (std::size_t i = 1; i <= n; ++i) out.push_back(i);
            break;
        case RootType::B: out = {1}; break;
        case RootType::C: out = {n}; break;
        case RootType::D: out = {1, n - 1, n}; break;
        case RootType::E:
            if (n == 6) out = {1, 6};
            if (n == 7) out = {7};
            break;
        case RootType::F:
        case RootType::G: break;
    }
    return out;
}

std::string NodeRemoval::label() const {
    if (components.empty()) return "0";
    std::string s;
    for (const auto& c : components) {
        if (!s.empty()) s += "+";
        s += type_name(c.type, c.rank);
    }
    return s;
}

DiagramComponent identify_diagram(const std::vector<std::vector<int>>& a) {
    const std::size_t n = a.size();
    if (n == 1) return {RootType::A, 1};
    std::vector<std::vector<std::size_t>> adj(n);
    int max_bond = 1;
    std::pair<std::size_t, std::size_t> multi{0, 0};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || a[i][j] == 0) continue;
            adj[i].push_back(j);
            const int bond = a[i][j] * a[j][i];
            if (bond > max_bond) {
                max_bond = bond;
                multi = {i, j};
            }
        }
    std::size_t edges = 0;
    for (const auto& v : adj) edges += v.size();
    if (edges / 2 != n - 1) throw InternalInconsistency("Dynkin diagram is not a tree");
    if (max_bond == 3) return {RootType::G, 2};
    if (max_bond == 2) {
        if (n == 2) return {RootType::B, 2};
        if (n == 4 && adj[multi.first].size() == 2 && adj[multi.second].size() == 2) return {RootType::F, 4};
        // |a_ij| = 2 when i is the long end of the double bond; B_n has a single short node.
        const std::size_t short_node = std::abs(a[multi.first][multi.second]) == 2 ? multi.second : multi.first;
        return {adj[short_node].size() == 1 ? RootType::B : RootType::C, n};
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (adj[v].size() < 3) continue;
        std::vector<std::size_t> arms;
        for (std::size_t start : adj[v]) {
            std::size_t len = 0;
            std::size_t prev = v;
            std::size_t cur = start;
            while (true) {
                ++len;
                std::size_t next = n;
                for (std::size_t w : adj[cur]) {
                    if (w != prev) next = w;
                }
                if (next == n) break;
                prev = cur;
                cur = next;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1) return {RootType::D, n};
        if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return {RootType::E, n};
        throw InternalInconsistency("unrecognized branched diagram");
    }
    return {RootType::A, n};
}

NodeRemoval remove_node(const RootSystem& rs, std::size_t node) {
    if (node > rs.rank) throw InvalidNode("extended diagram of " + rs.name() + " has nodes 0.." + std::to_string(rs.rank));
    // Extended node set: 0 = lowest root, i = alpha_i.
    std::vector<Root> nodes;
    Root lowest = rs.highest_root;
    for (auto& x : lowest) x = -x;
    nodes.push_back(lowest);
    for (std::size_t i = 0; i < rs.rank; ++i) {
        Root e(rs.rank, 0);
        e[i] = 1;
        nodes.push_back(e);
    }
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i <= rs.rank; ++i) {
        if (i != node) keep.push_back(i);
    }
    std::vector<bool> seen(keep.size(), false);
    NodeRemoval out;
    std::size_t total_rank = 0;
    for (std::size_t s = 0; s < keep.size(); ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> comp{s};
        seen[s] = true;
        for (std::size_t q = 0; q < comp.size(); ++q)
            for (std::size_t t = 0; t < keep.size(); ++t) {
                if (seen[t] || rs.inner(nodes[keep[comp[q]]], nodes[keep[t]]) == 0) continue;
                seen[t] = true;
                comp.push_back(t);
            }
        std::vector<std::vector<int>> a(comp.size(), std::vector<int>(comp.size()));
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (std::size_t j = 0; j < comp.size(); ++j) {
                const Root& x = nodes[keep[comp[i]]];
                const Root& y = nodes[keep[comp[j]]];
                const Rational c = 2 * rs.inner(x, y) / rs.inner(y, y);
                a[i][j] = static_cast<int>(c.get_num().get_si());
            }
        const DiagramComponent d = identify_diagram(a);
        out.components.push_back(d);
        out.dim += simple_lie_dimension(d.type, d.rank);
        total_rank += d.rank;
    }
    std::sort(out.components.begin(), out.components.end(), [](const DiagramComponent& x, const DiagramComponent& y) {
        if (x.type != y.type) return x.type < y.type;
        return x.rank < y.rank;
    });
    out.torus_dim = rs.rank - total_rank;
    return out;
}

}  // namespace lsup
