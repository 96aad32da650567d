#include "lsup/subspace.hpp"

#include "lsup/error.hpp"

namespace lsup {

Subspace Subspace::zero(Field f, std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix(f, 0, ambient);
    return s;
}

Subspace Subspace::full(Field f, std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix::identity(f, ambient);
    for (std::size_t k = 0; k < ambient; ++k) s.pivots_.push_back(k);
    return s;
}

Subspace Subspace::row_space(const Matrix& m) {
    Subspace s;
    s.ambient_ = m.cols();
    s.basis_ = m;
    s.pivots_ = s.basis_.rref_in_place();
    return s;
}

Subspace Subspace::span(Field f, std::size_t ambient, const std::vector<Vector>& vectors) {
    return row_space(Matrix::from_rows(f, ambient, vectors));
}

std::vector<Vector> Subspace::basis_vectors() const {
    std::vector<Vector> out;
    out.reserve(dim());
    for (std::size_t k = 0; k < dim(); ++k) out.push_back(basis_.row(k));
    return out;
}

Vector Subspace::reduce(const Vector& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector length " + std::to_string(v.size()) +
                                                      " in ambient dimension " + std::to_string(ambient_));
    Vector r = v;
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        const FieldElement t = r[pivots_[k]];
        if (t.is_zero()) continue;
        for (std::size_t c = 0; c < ambient_; ++c) {
            const FieldElement& b = basis_(k, c);
            if (!b.is_zero()) r[c] -= t * b;
        }
    }
    return r;
}

bool Subspace::contains(const Vector& v) const { return lsup::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("ambient dimensions differ");
    for (std::size_t k = 0; k < other.dim(); ++k) {
        if (!contains(other.basis_.row(k))) return false;
    }
    return true;
}

Vector Subspace::coordinates(const Vector& v) const {
    if (!contains(v)) throw Error("vector " + lsup::to_string(v) + " is not in the subspace");
    Vector c;
    c.reserve(dim());
    for (auto p : pivots_) c.push_back(v[p]);
    return c;
}

std::vector<std::size_t> Subspace::complement_indices() const {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t c = 0; c < ambient_; ++c) {
        if (k < pivots_.size() && pivots_[k] == c) {
            ++k;
        } else {
            out.push_back(c);
        }
    }
    return out;
}

Subspace Subspace::lifted(Field target) const {
    Subspace s = *this;
    s.basis_ = basis_.lifted(target);
    return s;
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
}

std::strong_ordering compare(const Subspace& a, const Subspace& b) {
    if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
    if (auto c = a.dim() <=> b.dim(); c != 0) return c;
    if (auto c = a.pivots_ <=> b.pivots_; c != 0) return c;
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.ambient_; ++c) {
            if (auto o = compare(a.basis_(r, c), b.basis_(r, c)); o != 0) return o;
        }
    return std::strong_ordering::equal;
}

std::string Subspace::to_string() const {
    std::string out = "span{";
    for (std::size_t k = 0; k < dim(); ++k) {
        if (k) out += ", ";
        out += lsup::to_string(basis_.row(k));
    }
    return out + "}";
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspace sum: ambient dimensions differ");
    Matrix m = a.basis();
    for (std::size_t k = 0; k < b.dim(); ++k) m.append_row(b.basis().row(k));
    return Subspace::row_space(m);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspace intersection: ambient dimensions differ");
    // Zassenhaus: rows (a | a) and (b | 0); rows with zero left half span the intersection.
    const std::size_t n = a.ambient_dim();
    const Field f = a.field() == b.field() ? a.field() : (a.field().is_rationals() ? b.field() : a.field());
    Matrix z(f, a.dim() + b.dim(), 2 * n);
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < n; ++c) {
            z(r, c) = a.basis()(r, c);
            z(r, n + c) = a.basis()(r, c);
        }
    for (std::size_t r = 0; r < b.dim(); ++r)
        for (std::size_t c = 0; c < n; ++c) z(a.dim() + r, c) = b.basis()(r, c);
    const auto pivots = z.rref_in_place();
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] < n) continue;
        Vector v;
        v.reserve(n);
        for (std::size_t c = 0; c < n; ++c) v.push_back(z(r, n + c));
        rows.push_back(std::move(v));
    }
    return Subspace::span(f, n, rows);
}

bool contains(const Subspace& a, const Vector& v) { return a.contains(v); }

Subspace kernel(const Matrix& m) {
    Matrix r = m;
    const auto pivots = r.rref_in_place();
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vector v = zero_vector(m.field(), n);
        v[free] = FieldElement::one(m.field());
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
        basis.push_back(std::move(v));
    }
    return Subspace::span(m.field(), n, basis);
}

Subspace image(const Matrix& m) { return Subspace::row_space(m.transpose()); }

}  // namespace lsup
