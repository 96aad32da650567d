#include "lsup/error.hpp"
#include "lsup/rootsys.hpp"

namespace lsup {

namespace {

Root neg(const Root& r) {
    Root out = r;
    for (auto& x : out) x = -x;
    return out;
}

Root sum(const Root& a, const Root& b) {
    Root out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

int to_int(const Rational& q, const char* what) {
    if (q.get_den() != 1) throw InternalInconsistency(std::string("non-integral ") + what);
    return static_cast<int>(q.get_num().get_si());
}

}  // namespace

ChevalleyTable::ChevalleyTable(const RootSystem& rs) : rs_(&rs) {
    const auto& pos = rs.positive_roots;
    const std::size_t np = pos.size();
    // Positive roots are ordered by height, so every summand of xi precedes it.
    for (std::size_t x = 0; x < np; ++x) {
        const Root& xi = pos[x];
        bool have_extra = false;
        std::size_t g = 0;
        std::size_t d = 0;
        for (std::size_t a = 0; a < x; ++a) {
            Root rest = xi;
            for (std::size_t k = 0; k < rest.size(); ++k) rest[k] -= pos[a][k];
            const long bl = rs.index_of(rest);
            if (bl < 0 || static_cast<std::size_t>(bl) >= np || static_cast<std::size_t>(bl) <= a) continue;
            const std::size_t b = static_cast<std::size_t>(bl);
            if (!have_extra) {
                // extraspecial: smallest alpha; N = +(p + 1)
                have_extra = true;
                g = a;
                d = b;
                extra_[x] = {a, b};
                int p = 0;
                Root t = pos[b];
                while (true) {
                    for (std::size_t k = 0; k < t.size(); ++k) t[k] -= pos[a][k];
                    if (!rs.is_root(t)) break;
                    ++p;
                }
                pos_[{a, b}] = p + 1;
                continue;
            }
            const Root& alpha = pos[a];
            const Root& beta = pos[b];
            const Root& gamma = pos[g];
            const Root& delta = pos[d];
            Rational acc = 0;
            const Root bg = sum(beta, neg(gamma));
            if (rs.is_root(bg)) acc += Rational(n(beta, neg(gamma)) * n(alpha, neg(delta))) / rs.inner(bg, bg);
            const Root ag = sum(alpha, neg(gamma));
            if (rs.is_root(ag)) acc += Rational(n(neg(gamma), alpha) * n(beta, neg(delta))) / rs.inner(ag, ag);
            const Rational val = rs.inner(xi, xi) * acc / pos_.at({g, d});
            pos_[{a, b}] = to_int(val, "structure constant");
        }
    }
}

int ChevalleyTable::positive_pair(std::size_t a, std::size_t b) const {
    if (a < b) return pos_.at({a, b});
    return -pos_.at({b, a});
}

int ChevalleyTable::n(const Root& a, const Root& b) const {
    const RootSystem& rs = *rs_;
    const Root s = sum(a, b);
    if (!rs.is_root(s)) return 0;
    const long ia = rs.index_of(a);
    const long ib = rs.index_of(b);
    if (ia < 0 || ib < 0) throw InternalInconsistency("structure constant requested for a non-root");
    const std::size_t np = rs.positive_roots.size();
    const bool pa = static_cast<std::size_t>(ia) < np;
    const bool pb = static_cast<std::size_t>(ib) < np;
    if (pa && pb) return positive_pair(static_cast<std::size_t>(ia), static_cast<std::size_t>(ib));
    if (!pa && !pb) return -n(neg(a), neg(b));
    if (!pa) return -n(b, a);
    // a positive, b negative; a + b + c = 0 with c = -s.
    if (height(s) > 0) {
        const Rational v = -rs.inner(s, s) / rs.inner(a, a) * n(neg(b), s);
        return to_int(v, "structure constant");
    }
    const Rational v = rs.inner(s, s) / rs.inner(b, b) * n(neg(s), a);
    return to_int(v, "structure constant");
}

LieAlgebra chevalley_constants(const RootSystem& rs) {
    const ChevalleyTable table(rs);
    const std::size_t r = rs.rank;
    const std::size_t nr = rs.roots.size();
    const std::size_t dim = r + nr;
    const Field q = Field::rationals();
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < r; ++i) labels.push_back("h" + std::to_string(i + 1));
    for (const auto& root : rs.roots) {
        std::string s = "e(";
        for (std::size_t i = 0; i < root.size(); ++i) s += (i ? "," : "") + std::to_string(root[i]);
        labels.push_back(s + ")");
    }
    std::vector<BracketEntry> entries;
    // [h_i, e_alpha] = <alpha, alpha_i^vee> e_alpha
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < nr; ++k) {
            long c = 0;
            for (std::size_t j = 0; j < r; ++j) c += static_cast<long>(rs.roots[k][j]) * rs.cartan[j][i];
            if (c == 0) continue;
            Vector v = zero_vector(q, dim);
            v[r + k] = FieldElement(c);
            entries.push_back({i, r + k, std::move(v)});
        }
    for (std::size_t k = 0; k < nr; ++k)
        for (std::size_t m = k + 1; m < nr; ++m) {
            const Root& a = rs.roots[k];
            const Root& b = rs.roots[m];
            const Root s = sum(a, b);
            Vector v = zero_vector(q, dim);
            bool nonzero = false;
            if (std::all_of(s.begin(), s.end(), [](int x) { return x == 0; })) {
                // [e_a, e_-a] = h_a = sum_j c_j (a_j, a_j)/(a, a) h_j
                const Rational aa = rs.inner(a, a);
                for (std::size_t j = 0; j < r; ++j) {
                    if (a[j] == 0) continue;
                    v[j] = FieldElement(Rational(rs.gram[j][j] * a[j] / aa));
                    nonzero = true;
                }
            } else if (const long idx = rs.index_of(s); idx >= 0) {
                v[r + static_cast<std::size_t>(idx)] = FieldElement(static_cast<long>(table.n(a, b)));
                nonzero = true;
            }
            if (nonzero) entries.push_back({r + k, r + m, std::move(v)});
        }
    return build_algebra(q, dim, entries, std::move(labels));
}

}  // namespace lsup
