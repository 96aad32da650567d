#include "lsup/structure.hpp"

#include "lsup/error.hpp"
#include "lsup/module.hpp"

namespace lsup {

Subspace full_space(const LieAlgebra& l) { return Subspace::full(l.field(), l.dim()); }
Subspace zero_space(const LieAlgebra& l) { return Subspace::zero(l.field(), l.dim()); }

Subspace product_space(const LieAlgebra& l, const Subspace& a, const Subspace& b) {
    const std::size_t n = l.dim();
    EchelonBasis span(l.field(), n);
    if (a.is_full() && b.is_full()) {
        for (const auto& e : l.entries()) {
            span.insert(e.value);
            if (span.size() == n) break;
        }
    } else {
        for (std::size_t i = 0; i < a.dim() && span.size() < n; ++i) {
            const Matrix ad = l.ad(a.basis_vector(i));
            for (std::size_t j = 0; j < b.dim(); ++j) {
                Vector v = ad.apply(b.basis_vector(j));
                if (!is_zero(v)) span.insert(std::move(v));
            }
        }
    }
    return Subspace::span(l.field(), n, span.rows());
}

Subspace derived_algebra(const LieAlgebra& l) {
    const Subspace full = full_space(l);
    return product_space(l, full, full);
}

SeriesReport series(const LieAlgebra& l) {
    SeriesReport r;
    const Subspace full = full_space(l);
    r.derived.push_back(full);
    while (!r.derived.back().is_zero()) {
        Subspace next = product_space(l, r.derived.back(), r.derived.back());
        if (next.dim() == r.derived.back().dim()) break;
        r.derived.push_back(std::move(next));
    }
    r.lower_central.push_back(full);
    while (!r.lower_central.back().is_zero()) {
        Subspace next = product_space(l, full, r.lower_central.back());
        if (next.dim() == r.lower_central.back().dim()) break;
        r.lower_central.push_back(std::move(next));
    }
    r.is_solvable = r.derived.back().is_zero();
    r.is_nilpotent = r.lower_central.back().is_zero();
    return r;
}

bool is_solvable(const LieAlgebra& l) { return series(l).is_solvable; }
bool is_nilpotent(const LieAlgebra& l) { return series(l).is_nilpotent; }

bool is_subalgebra(const LieAlgebra& l, const Subspace& s) {
    for (std::size_t i = 0; i < s.dim(); ++i) {
        const Matrix ad = l.ad(s.basis_vector(i));
        for (std::size_t j = i + 1; j < s.dim(); ++j) {
            if (!s.contains(ad.apply(s.basis_vector(j)))) return false;
        }
    }
    return true;
}

bool is_ideal(const LieAlgebra& l, const Subspace& s) {
    for (std::size_t i = 0; i < l.dim(); ++i) {
        const Matrix ad = l.ad_basis(i);
        for (std::size_t j = 0; j < s.dim(); ++j) {
            if (!s.contains(ad.apply(s.basis_vector(j)))) return false;
        }
    }
    return true;
}

bool is_abelian(const LieAlgebra& l, const Subspace& s) {
    for (std::size_t i = 0; i < s.dim(); ++i) {
        const Matrix ad = l.ad(s.basis_vector(i));
        for (std::size_t j = i + 1; j < s.dim(); ++j) {
            if (!is_zero(ad.apply(s.basis_vector(j)))) return false;
        }
    }
    return true;
}

bool is_nilpotent_subalgebra(const LieAlgebra& l, const Subspace& s) {
    Subspace c = s;
    while (!c.is_zero()) {
        Subspace next = product_space(l, s, c);
        if (next.dim() == c.dim()) return false;
        c = std::move(next);
    }
    return true;
}

bool is_solvable_subalgebra(const LieAlgebra& l, const Subspace& s) {
    Subspace d = s;
    while (!d.is_zero()) {
        Subspace next = product_space(l, d, d);
        if (next.dim() == d.dim()) return false;
        d = std::move(next);
    }
    return true;
}

Subspace centralizer(const LieAlgebra& l, const Subspace& a) {
    const std::size_t n = l.dim();
    Matrix system(l.field(), 0, n);
    for (std::size_t k = 0; k < a.dim(); ++k) {
        const Matrix ad = l.ad(a.basis_vector(k));  // [a, x] = 0
        for (std::size_t r = 0; r < n; ++r) system.append_row(ad.row(r));
    }
    return kernel(system);
}

Subspace center(const LieAlgebra& l) { return centralizer(l, full_space(l)); }

Matrix killing_form(const LieAlgebra& l) { return killing_form_parallel(l); }

bool killing_nondegenerate(const LieAlgebra& l) { return killing_form(l).rank() == l.dim(); }

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw InternalInconsistency(what);
}

}  // namespace

Subspace radical(const LieAlgebra& l) {
    const Matrix k = killing_form(l);
    if (k.rank() == l.dim()) return zero_space(l);  // Cartan's criterion
    const Subspace d = derived_algebra(l);
    const Matrix system = d.basis() * k;
    Subspace r = kernel(system);
    require(is_ideal(l, r), "computed radical is not an ideal");
    require(is_solvable_subalgebra(l, r), "computed radical is not solvable");
    if (!r.is_full()) {
        require(killing_nondegenerate(quotient(l, r).algebra), "quotient by the computed radical is not semisimple");
    }
    return r;
}

Subspace nilradical(const LieAlgebra& l) {
    const Subspace r = radical(l);
    if (r.is_zero()) return r;
    const std::size_t n = l.dim();
    std::vector<Matrix> ads;
    for (std::size_t i = 0; i < n; ++i) ads.push_back(l.ad_basis(i));
    const std::vector<Matrix> env = envelope(ads);
    // tr(ad x . B) = sum_i x_i tr(ad b_i . B)
    Matrix system(l.field(), env.size(), n);
    for (std::size_t b = 0; b < env.size(); ++b)
        for (std::size_t i = 0; i < n; ++i) system(b, i) = (ads[i] * env[b]).trace();
    Subspace nil = subspace_intersect(kernel(system), r);
    require(is_ideal(l, nil), "computed nilradical is not an ideal");
    require(is_nilpotent_subalgebra(l, nil), "computed nilradical is not nilpotent");
    require(nil.contains(product_space(l, full_space(l), r)), "computed nilradical does not contain [L, R]");
    return nil;
}

Subspace terminal_derived(const LieAlgebra& l) { return series(l).derived.back(); }

LieAlgebra subalgebra_algebra(const LieAlgebra& l, const Subspace& s) {
    if (!is_subalgebra(l, s)) throw NotSubalgebra("subspace " + s.to_string() + " is not a subalgebra");
    std::vector<BracketEntry> entries;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        const Matrix ad = l.ad(s.basis_vector(i));
        for (std::size_t j = i + 1; j < s.dim(); ++j) {
            const Vector v = ad.apply(s.basis_vector(j));
            if (!is_zero(v)) entries.push_back({i, j, s.coordinates(v)});
        }
    }
    return LieAlgebra::from_trusted(l.field(), s.dim(), entries);
}

// ---------------------------------------------------------------------------

Vector QuotientMap::project(const Vector& x) const {
    const Vector r = ideal.reduce(x);
    Vector y;
    y.reserve(section.size());
    for (auto k : section) y.push_back(r[k]);
    return y;
}

Subspace QuotientMap::image(const Subspace& s) const {
    std::vector<Vector> rows;
    for (std::size_t k = 0; k < s.dim(); ++k) rows.push_back(project(s.basis_vector(k)));
    return Subspace::span(algebra.field(), section.size(), rows);
}

Vector QuotientMap::lift(const Vector& y) const {
    Vector x = zero_vector(algebra.field(), ideal.ambient_dim());
    for (std::size_t k = 0; k < section.size(); ++k) x[section[k]] = y[k];
    return x;
}

Subspace QuotientMap::preimage(const Subspace& s) const {
    std::vector<Vector> rows = ideal.basis_vectors();
    for (std::size_t k = 0; k < s.dim(); ++k) rows.push_back(lift(s.basis_vector(k)));
    return Subspace::span(algebra.field(), ideal.ambient_dim(), rows);
}

QuotientMap quotient(const LieAlgebra& l, const Subspace& ideal) {
    if (!is_ideal(l, ideal)) throw NotAnIdeal("subspace " + ideal.to_string() + " is not an ideal");
    QuotientMap q;
    q.ideal = ideal;
    q.section = ideal.complement_indices();
    const std::size_t m = q.section.size();
    std::vector<BracketEntry> entries;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            const Vector v = to_dense(l.field(), l.dim(), l.basis_bracket(q.section[a], q.section[b]));
            Vector y = q.project(v);
            if (!is_zero(y)) entries.push_back({a, b, std::move(y)});
        }
    std::vector<std::string> labels;
    if (!l.labels().empty()) {
        for (auto k : q.section) labels.push_back(l.labels()[k]);
    }
    q.algebra = LieAlgebra::from_trusted(l.field(), m, entries, std::move(labels));
    return q;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    Field f = a.field();
    if (!(a.field() == b.field())) {
        if (a.field().is_rationals()) {
            f = b.field();
        } else if (!b.field().is_rationals()) {
            throw FieldMismatch("direct sum of algebras over different fields");
        }
    }
    const std::size_t n = a.dim() + b.dim();
    std::vector<BracketEntry> entries;
    for (const auto& e : a.entries()) {
        Vector v = zero_vector(f, n);
        for (std::size_t k = 0; k < a.dim(); ++k) v[k] = e.value[k];
        entries.push_back({e.i, e.j, std::move(v)});
    }
    for (const auto& e : b.entries()) {
        Vector v = zero_vector(f, n);
        for (std::size_t k = 0; k < b.dim(); ++k) v[a.dim() + k] = e.value[k];
        entries.push_back({a.dim() + e.i, a.dim() + e.j, std::move(v)});
    }
    std::vector<std::string> labels;
    if (!a.labels().empty() || !b.labels().empty()) {
        for (std::size_t k = 0; k < a.dim(); ++k) labels.push_back(a.label(k));
        for (std::size_t k = 0; k < b.dim(); ++k) labels.push_back(b.label(k) + "'");
    }
    return LieAlgebra::from_trusted(f, n, entries, std::move(labels));
}

LieAlgebra extend_scalars(const LieAlgebra& l, Field target) {
    if (l.field() == target) return l;
    if (!l.field().is_rationals()) throw FieldMismatch("scalar extension starts from Q");
    std::vector<BracketEntry> entries = l.entries();
    for (auto& e : entries)
        for (auto& c : e.value) c = c.lifted(target);
    return LieAlgebra::from_trusted(target, l.dim(), entries, l.labels());
}

LieAlgebra change_basis(const LieAlgebra& l, const Matrix& p) {
    const std::size_t n = l.dim();
    if (p.rows() != n || p.cols() != n) throw DimensionMismatch("change of basis must be n x n");
    if (p.rank() != n) throw Error("change of basis matrix is singular");
    std::vector<Vector> cols;
    for (std::size_t k = 0; k < n; ++k) cols.push_back(p.column(k));
    std::vector<BracketEntry> entries;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            const Vector v = l.bracket(cols[a], cols[b]);
            if (is_zero(v)) continue;
            auto y = solve_linear(p, v);
            if (!y) throw InternalInconsistency("change of basis: bracket outside the span");
            entries.push_back({a, b, std::move(*y)});
        }
    return build_algebra(l.field(), n, entries);
}

std::vector<Subspace> decompose_semisimple(const LieAlgebra& l) {
    if (!radical(l).is_zero()) throw NotSemisimple("algebra has a nonzero radical");
    if (l.dim() == 0) return {};
    std::vector<Matrix> ads;
    for (std::size_t i = 0; i < l.dim(); ++i) ads.push_back(l.ad_basis(i));
    std::vector<Subspace> parts = irreducible_decomposition(ads, l.field(), full_space(l));
    for (const auto& p : parts) {
        if (!is_ideal(l, p)) throw InternalInconsistency("simple summand is not an ideal");
    }
    return parts;
}

// ---------------------------------------------------------------------------

SubalgebraHandle::SubalgebraHandle(const LieAlgebra& l, Subspace s) : algebra_(&l), space_(std::move(s)) {}

bool SubalgebraHandle::is_subalgebra() const {
    if (!subalgebra_) subalgebra_ = lsup::is_subalgebra(*algebra_, space_);
    return *subalgebra_;
}

bool SubalgebraHandle::is_ideal() const {
    if (!ideal_) ideal_ = lsup::is_ideal(*algebra_, space_);
    return *ideal_;
}

bool SubalgebraHandle::is_abelian() const {
    if (!abelian_) abelian_ = lsup::is_abelian(*algebra_, space_);
    return *abelian_;
}

bool SubalgebraHandle::is_nilpotent_subalgebra() const {
    if (!nilpotent_) nilpotent_ = is_subalgebra() && lsup::is_nilpotent_subalgebra(*algebra_, space_);
    return *nilpotent_;
}

}  // namespace lsup
