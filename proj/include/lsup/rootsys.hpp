#ifndef LSUP_ROOTSYS_HPP
#define LSUP_ROOTSYS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lsup/field.hpp"
#include "lsup/lie_algebra.hpp"

namespace lsup {

enum class RootType { A, B, C, D, E, F, G };
char type_letter(RootType t);
/// Accepts "A".."G" (case-insensitive).
RootType parse_root_type(const std::string& s);
/// Throws InvalidRank unless (t, rank) names a simple type: A>=1, B>=2, C>=2, D>=3, E6-8, F4, G2.
void check_rank(RootType t, std::size_t rank);
/// dim of the simple Lie algebra of this type, from the classical formulas.
std::size_t simple_lie_dimension(RootType t, std::size_t rank);
std::string type_name(RootType t, std::size_t rank);

/// Integer coordinates in the basis of simple roots.
using Root = std::vector<int>;

struct RootSystem {
    RootType type = RootType::A;
    std::size_t rank = 0;
    /// Positive roots ordered by height, ties by descending coordinates; then their negatives.
    std::vector<Root> roots;
    std::vector<Root> positive_roots;
    /// a_ij = <alpha_i, alpha_j^vee> (Bourbaki convention)
    std::vector<std::vector<int>> cartan;
    /// (alpha_i, alpha_j) from the Euclidean model
    std::vector<std::vector<Rational>> gram;
    Root highest_root;

    std::size_t lie_dim() const noexcept { return rank + roots.size(); }
    std::string name() const { return type_name(type, rank); }
    Rational inner(const Root& a, const Root& b) const;
    /// Position in `roots`, or -1.
    long index_of(const Root& r) const;
    bool is_root(const Root& r) const { return index_of(r) >= 0; }

    std::map<Root, std::size_t> index;
};

RootSystem build_root_system(RootType t, std::size_t rank);
int height(const Root& r);

/// Chevalley basis h_1..h_rank, then e_alpha in `roots` order.
LieAlgebra chevalley_constants(const RootSystem& rs);
/// N_{alpha,beta} with [e_alpha, e_beta] = N e_{alpha+beta}; 0 when alpha+beta is not a root.
class ChevalleyTable {
public:
    explicit ChevalleyTable(const RootSystem& rs);
    int n(const Root& a, const Root& b) const;
    /// The extraspecial pair (as indices into positive_roots) for each non-simple positive root.
    const std::map<std::size_t, std::pair<std::size_t, std::size_t>>& extraspecial() const noexcept { return extra_; }

private:
    const RootSystem* rs_;
    std::map<std::pair<std::size_t, std::size_t>, int> pos_;  // alpha < beta, both positive
    std::map<std::size_t, std::pair<std::size_t, std::size_t>> extra_;
    int positive_pair(std::size_t a, std::size_t b) const;
};

struct ParabolicDatum {
    RootSystem system;
    std::vector<std::size_t> sigma1;  // 1-based Bourbaki indices
    std::vector<Root> delta1;
    std::vector<Root> delta2_plus;
    std::size_t dim_P = 0;
    std::size_t dim_levi = 0;
    std::size_t dim_nilradical = 0;
    std::size_t dim_opposite_nilradical = 0;
};

/// Standard parabolic for a non-empty set of 1-based simple-root indices.
ParabolicDatum parabolic(const RootSystem& rs, const std::vector<std::size_t>& sigma1);
/// True iff no two (possibly equal) roots of Delta_2^+ sum to a root.
bool nilradical_abelian(const ParabolicDatum& pd);
/// 1-based indices i whose maximal parabolic ({alpha_i}) has abelian nilradical.
std::vector<std::size_t> classify_abelian_parabolics(RootType t, std::size_t rank);
/// The known list: A_n all, B_n {1}, C_n {n}, D_n {1, n-1, n}, E6 {1, 6}, E7 {7}, else none.
std::vector<std::size_t> expected_abelian_parabolics(RootType t, std::size_t rank);

struct DiagramComponent {
    RootType type;
    std::size_t rank;
};
struct NodeRemoval {
    std::vector<DiagramComponent> components;  // sorted by (type, rank)
    std::size_t dim = 0;                       // sum of component dimensions
    std::size_t torus_dim = 0;                 // rank deficit
    std::string label() const;                 // e.g. "A1+A1+B2"
};
/// Remove node `node` of the extended diagram: 0 is the lowest root, 1..rank the simple roots.
NodeRemoval remove_node(const RootSystem& rs, std::size_t node);
/// Type of a connected Dynkin diagram given by its Cartan matrix.
DiagramComponent identify_diagram(const std::vector<std::vector<int>>& cartan);

struct Table1Row {
    std::string family;  // e.g. "B_{2n}"
    int n = 0;           // 0 for rows without a parameter
    RootType type = RootType::A;
    std::size_t type_rank = 0;
    std::string algebra;  // e.g. "B4"

    // closed forms as printed in the table
    long table_L_dim = 0;
    long table_rank = 0;
    std::string M_label;
    long M_dim = 0;
    std::string M_nil_label;  // lower entry of column 2, if any
    long M_nil_dim = 0;       // M used against gamma (lower entry, else M_dim)
    long alpha = 0;
    long table_gamma = 0;

    // computed from the root system
    long L_dim = 0;
    long rank = 0;
    long gamma = 0;
    std::optional<long> M_dim_regular;  // top entry rebuilt by node removal when regular

    bool dims_match = false;   // L_dim and rank equal the closed forms
    bool gamma_match = false;  // computed gamma equals the table's lower entry
    bool alpha_ineq = false;   // M_dim + alpha < L_dim
    bool gamma_ineq = false;   // M_nil_dim + gamma < L_dim
    bool M_match = true;       // M_dim_regular, when present, equals M_dim
    std::string alpha_note;    // informational comparison of alpha with other sources

    bool pass() const { return dims_match && gamma_match && alpha_ineq && gamma_ineq && M_match; }
};
std::vector<Table1Row> table1(std::size_t max_n);

}  // namespace lsup

#endif  // LSUP_ROOTSYS_HPP
