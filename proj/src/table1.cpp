#include <functional>

#include "lsup/error.hpp"
#include "lsup/rootsys.hpp"

namespace lsup {

namespace {

struct FamilySpec {
    std::string family;
    RootType type;
    int n_min;  // 0: single row without parameter
    std::function<std::size_t(long)> type_rank;
    std::function<std::string(long)> M_label;
    std::string M_nil_label;
    std::function<long(long)> L_dim, M_dim, rank, alpha, gamma;
    long M_nil_dim = 0;  // 0: lower entry absent
    /// Node of the extended diagram whose removal gives the top M (0: not regular).
    std::function<std::size_t(long)> regular_node;
};

std::string sum_label(const std::string& a, const std::string& b) { return a + "+" + b; }
std::string tn(char t, long k) { return std::string(1, t) + std::to_string(k); }

std::vector<FamilySpec> families() {
    auto none = [](long) -> std::size_t { return 0; };
    auto k = [](long v) { return [v](long) { return v; }; };
    std::vector<FamilySpec> f;
    f.push_back({"A_2", RootType::A, 0, [](long) { return 2; }, [](long) { return std::string("A1"); }, "", k(8), k(3), k(2),
                 k(2), k(3), 0, none});
    f.push_back({"A_{2n}", RootType::A, 2, [](long n) { return 2 * n; }, [](long n) { return tn('B', n); }, "",
                 [](long n) { return 4 * n * n + 4 * n; }, [](long n) { return 2 * n * n + n; },
                 [](long n) { return 2 * n; }, [](long n) { return n * n + n; }, [](long n) { return 2 * n * n + n; },
                 0, none});
    f.push_back({"A_{2n+1}", RootType::A, 1, [](long n) { return 2 * n + 1; }, [](long n) { return tn('D', n + 1); },
                 "", [](long n) { return 4 * n * n + 8 * n + 3; }, [](long n) { return 2 * n * n + 3 * n + 1; },
                 [](long n) { return 2 * n + 1; }, [](long n) { return n * n + 2 * n + 1; },
                 [](long n) { return 2 * n * n + 3 * n + 1; }, 0, none});
    f.push_back({"B_2", RootType::B, 0, [](long) { return 2; }, [](long) { return std::string("A1+A1"); }, "A1^10", k(10),
                 k(6), k(2), k(3), k(4), 3, [](long) -> std::size_t { return 2; }});
    f.push_back({"B_3", RootType::B, 0, [](long) { return 3; }, [](long) { return std::string("A1+A1+A1"); }, "", k(21),
                 k(9), k(3), k(5), k(9), 0, [](long) -> std::size_t { return 2; }});
    f.push_back({"B_{2n}", RootType::B, 2, [](long n) { return 2 * n; },
                 [](long n) { return sum_label(tn('B', n), tn('D', n)); }, "",
                 [](long n) { return 8 * n * n + 2 * n; }, [](long n) { return 4 * n * n; },
                 [](long n) { return 2 * n; }, [](long n) { return 2 * n * n - n + 1; },
                 [](long n) { return 4 * n * n; }, 0, [](long n) { return static_cast<std::size_t>(n); }});
    f.push_back({"B_{2n+1}", RootType::B, 2, [](long n) { return 2 * n + 1; },
                 [](long n) { return sum_label(tn('B', n), tn('D', n + 1)); }, "",
                 [](long n) { return 8 * n * n + 10 * n + 3; }, [](long n) { return 4 * n * n + 4 * n + 1; },
                 [](long n) { return 2 * n + 1; }, [](long n) { return 2 * n * n + n + 1; },
                 [](long n) { return 4 * n * n + 4 * n + 1; }, 0,
                 [](long n) { return static_cast<std::size_t>(n + 1); }});
    f.push_back({"C_{2n}", RootType::C, 2, [](long n) { return 2 * n; },
                 [](long n) { return sum_label(tn('C', n), tn('C', n)); }, "A1",
                 [](long n) { return 8 * n * n + 2 * n; }, [](long n) { return 4 * n * n + 2 * n; },
                 [](long n) { return 2 * n; }, [](long n) { return 2 * n * n + n; },
                 [](long n) { return 4 * n * n; }, 3, [](long n) { return static_cast<std::size_t>(n); }});
    f.push_back({"C_{2n+1}", RootType::C, 1, [](long n) { return 2 * n + 1; },
                 [](long n) { return sum_label(tn('C', n), tn('C', n + 1)); }, "A1",
                 [](long n) { return 8 * n * n + 10 * n + 3; }, [](long n) { return 4 * n * n + 6 * n + 3; },
                 [](long n) { return 2 * n + 1; }, [](long n) { return 2 * n * n + 3 * n + 1; },
                 [](long n) { return 4 * n * n + 4 * n + 1; }, 3, [](long n) { return static_cast<std::size_t>(n); }});
    f.push_back({"D_{2n}", RootType::D, 2, [](long n) { return 2 * n; },
                 [](long n) { return sum_label(tn('D', n), tn('D', n)); }, "",
                 [](long n) { return 8 * n * n - 2 * n; }, [](long n) { return 4 * n * n - 2 * n; },
                 [](long n) { return 2 * n; }, [](long n) { return 2 * n * n - n; },
                 [](long n) { return 4 * n * n - 2 * n; }, 0, [](long n) { return static_cast<std::size_t>(n); }});
    f.push_back({"D_{2n+1}", RootType::D, 2, [](long n) { return 2 * n + 1; },
                 [](long n) { return sum_label(tn('D', n), tn('D', n + 1)); }, "",
                 [](long n) { return 8 * n * n + 6 * n + 3; }, [](long n) { return 4 * n * n + 2 * n + 1; },
                 [](long n) { return 2 * n + 1; }, [](long n) { return 2 * n * n + n; },
                 [](long n) { return 4 * n * n + 2 * n + 1; }, 0, [](long n) { return static_cast<std::size_t>(n); }});
    f.push_back({"E_6", RootType::E, 0, [](long) { return 6; }, [](long) { return std::string("A2^9"); }, "", k(78), k(8),
                 k(6), k(16), k(36), 0, none});
    f.push_back({"E_7", RootType::E, 0, [](long) { return 7; }, [](long) { return std::string("A1^231, A1^399"); }, "",
                 k(133), k(3), k(7), k(27), k(63), 0, none});
    f.push_back({"E_8", RootType::E, 0, [](long) { return 8; },
                 [](long) { return std::string("A1^520, A1^760, A1^1240"); }, "", k(248), k(3), k(8), k(36), k(120), 0,
                 none});
    f.push_back({"F_4", RootType::F, 0, [](long) { return 4; }, [](long) { return std::string("A1^156"); }, "", k(52),
                 k(3), k(4), k(9), k(24), 0, none});
    f.push_back({"G_2", RootType::G, 0, [](long) { return 2; }, [](long) { return std::string("A1^28"); }, "", k(14), k(3),
                 k(2), k(3), k(6), 0, none});
    return f;
}

/// Maximal abelian subalgebra dimension from the classical closed forms.
std::optional<long> malcev_alpha(RootType t, long m) {
    switch (t) {
        case RootType::A: return (m + 1) * (m + 1) / 4;
        case RootType::B:
            if (m == 2) return 3;
            if (m == 3) return 5;
            return m * (m - 1) / 2 + 1;
        case RootType::C: return m * (m + 1) / 2;
        case RootType::D:
            if (m < 4) return std::nullopt;
            return m * (m - 1) / 2;
        default: return std::nullopt;
    }
}

/// Largest abelian nilradical of a maximal parabolic: a lower bound for alpha.
long parabolic_alpha_bound(const RootSystem& rs) {
    long best = 0;
    for (std::size_t i = 1; i <= rs.rank; ++i) {
        const ParabolicDatum pd = parabolic(rs, {i});
        if (nilradical_abelian(pd)) best = std::max(best, static_cast<long>(pd.dim_nilradical));
    }
    return best;
}

}  // namespace

std::vector<Table1Row> table1(std::size_t max_n) {
    if (max_n < 2) throw Error("table1 needs max_n >= 2");
    std::vector<Table1Row> rows;
    for (const auto& fam : families()) {
        const long lo = fam.n_min == 0 ? 0 : fam.n_min;
        const long hi = fam.n_min == 0 ? 0 : static_cast<long>(max_n);
        for (long n = lo; n <= hi; ++n) {
            Table1Row r;
            r.family = fam.family;
            r.n = static_cast<int>(n);
            r.type = fam.type;
            r.type_rank = fam.type_rank(n);
            r.algebra = type_name(r.type, r.type_rank);
            r.table_L_dim = fam.L_dim(n);
            r.table_rank = fam.rank(n);
            r.M_label = fam.M_label(n);
            r.M_dim = fam.M_dim(n);
            r.M_nil_label = fam.M_nil_label.empty() ? r.M_label : fam.M_nil_label;
            r.M_nil_dim = fam.M_nil_dim != 0 ? fam.M_nil_dim : r.M_dim;
            r.alpha = fam.alpha(n);
            r.table_gamma = fam.gamma(n);

            const RootSystem rs = build_root_system(r.type, r.type_rank);
            r.L_dim = static_cast<long>(rs.lie_dim());
            r.rank = static_cast<long>(rs.rank);
            r.gamma = static_cast<long>(rs.positive_roots.size());
            if ((r.L_dim - r.rank) / 2 != r.gamma) throw InternalInconsistency("positive root count is not (dim - rank)/2");
            if (const std::size_t node = fam.regular_node(n); node != 0) {
                r.M_dim_regular = static_cast<long>(remove_node(rs, node).dim);
                r.M_match = *r.M_dim_regular == r.M_dim;
            }
            r.dims_match = r.L_dim == r.table_L_dim && r.rank == r.table_rank;
            r.gamma_match = r.gamma == r.table_gamma;
            r.alpha_ineq = r.M_dim + r.alpha < r.L_dim;
            r.gamma_ineq = r.M_nil_dim + r.gamma < r.L_dim;

            const long bound = parabolic_alpha_bound(rs);
            std::string note = "abelian parabolic nilradical dim " + std::to_string(bound) +
                               (bound <= r.alpha ? " <= alpha" : " > alpha (table alpha too small)");
            if (const auto m = malcev_alpha(r.type, static_cast<long>(r.type_rank))) {
                note += "; closed form " + std::to_string(*m) + (*m == r.alpha ? " agrees" : " differs");
            }
            r.alpha_note = note;
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

}  // namespace lsup
