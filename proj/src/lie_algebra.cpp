#include "lsup/lie_algebra.hpp"

#include <algorithm>

#include "lsup/error.hpp"

namespace lsup {

SparseVector to_sparse(const Vector& v) {
    SparseVector s;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (!v[k].is_zero()) s.push_back({static_cast<std::uint32_t>(k), v[k]});
    }
    return s;
}

Vector to_dense(Field f, std::size_t n, const SparseVector& s) {
    Vector v = zero_vector(f, n);
    for (const auto& t : s) v[t.index] = t.coeff.lifted(f);
    return v;
}

void sparse_axpy(SparseVector& acc, const FieldElement& s, const SparseVector& v) {
    if (s.is_zero() || v.empty()) return;
    SparseVector out;
    out.reserve(acc.size() + v.size());
    std::size_t a = 0;
    std::size_t b = 0;
    while (a < acc.size() || b < v.size()) {
        if (b == v.size() || (a < acc.size() && acc[a].index < v[b].index)) {
            out.push_back(std::move(acc[a++]));
        } else if (a == acc.size() || v[b].index < acc[a].index) {
            out.push_back({v[b].index, s * v[b].coeff});
            ++b;
        } else {
            FieldElement c = acc[a].coeff + s * v[b].coeff;
            if (!c.is_zero()) out.push_back({acc[a].index, std::move(c)});
            ++a;
            ++b;
        }
    }
    acc = std::move(out);
}

std::string to_string(const SparseVector& v, const std::vector<std::string>& labels) {
    if (v.empty()) return "0";
    std::string out;
    for (const auto& t : v) {
        std::string c = t.coeff.to_string();
        if (!t.coeff.is_rational()) c = "(" + c + ")";
        if (!out.empty()) out += " + ";
        const std::string name = t.index < labels.size() ? labels[t.index] : "b" + std::to_string(t.index + 1);
        out += (t.coeff.is_one() ? "" : c + "*") + name;
    }
    return out;
}

std::string LieAlgebra::label(std::size_t i) const {
    if (i < labels_.size()) return labels_[i];
    return "b" + std::to_string(i + 1);
}

SparseVector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
    if (i == j) return {};
    if (i < j) return pair(i, j);
    SparseVector s = pair(j, i);
    for (auto& t : s) t.coeff = -t.coeff;
    return s;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("bracket arguments must have length dim L");
    Vector out = zero_vector(field_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (i == j || y[j].is_zero()) continue;
            const FieldElement s = x[i] * y[j];
            const SparseVector& p = i < j ? pair(i, j) : pair(j, i);
            for (const auto& t : p) {
                if (i < j) {
                    out[t.index] += s * t.coeff;
                } else {
                    out[t.index] -= s * t.coeff;
                }
            }
        }
    }
    return out;
}

Matrix LieAlgebra::ad(const Vector& x) const {
    if (x.size() != dim_) throw DimensionMismatch("ad argument must have length dim L");
    Matrix m(field_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t k = 0; k < dim_; ++k) {
            if (k == i) continue;
            const bool forward = i < k;
            for (const auto& t : forward ? pair(i, k) : pair(k, i)) {
                if (forward) {
                    m(t.index, k) += x[i] * t.coeff;
                } else {
                    m(t.index, k) -= x[i] * t.coeff;
                }
            }
        }
    }
    return m;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const { return ad(unit_vector(field_, dim_, i)); }

std::vector<BracketEntry> LieAlgebra::entries() const {
    std::vector<BracketEntry> out;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j) {
            const SparseVector& p = pair(i, j);
            if (!p.empty()) out.push_back({i, j, to_dense(field_, dim_, p)});
        }
    return out;
}

bool LieAlgebra::is_abelian() const {
    for (const auto& p : table_) {
        if (!p.empty()) return false;
    }
    return true;
}

LieAlgebra LieAlgebra::from_trusted(Field f, std::size_t dim, const std::vector<BracketEntry>& entries,
                                    std::vector<std::string> labels) {
    LieAlgebra l;
    l.field_ = f;
    l.dim_ = dim;
    l.table_.assign(dim * (dim > 0 ? dim - 1 : 0) / 2, SparseVector{});
    std::vector<bool> seen(l.table_.size(), false);
    for (const auto& e : entries) {
        if (e.i >= dim || e.j >= dim) {
            throw IndexError("bracket index (" + std::to_string(e.i + 1) + ", " + std::to_string(e.j + 1) +
                             ") out of range for dimension " + std::to_string(dim));
        }
        if (e.value.size() != dim) {
            throw DimensionMismatch("bracket value for (" + std::to_string(e.i + 1) + ", " + std::to_string(e.j + 1) +
                                    ") has " + std::to_string(e.value.size()) + " coordinates, expected " +
                                    std::to_string(dim));
        }
        if (e.i == e.j) {
            if (!is_zero(e.value)) throw Error("[b, b] must vanish (index " + std::to_string(e.i + 1) + ")");
            continue;
        }
        const std::size_t a = std::min(e.i, e.j);
        const std::size_t b = std::max(e.i, e.j);
        const std::size_t idx = l.pair_index(a, b);
        if (seen[idx]) {
            throw Error("bracket (" + std::to_string(a + 1) + ", " + std::to_string(b + 1) + ") given twice");
        }
        seen[idx] = true;
        Vector v;
        v.reserve(dim);
        for (const auto& c : e.value) v.push_back(c.lifted(f));
        SparseVector s = to_sparse(v);
        if (e.i > e.j) {
            for (auto& t : s) t.coeff = -t.coeff;
        }
        l.table_[idx] = std::move(s);
    }
    if (!labels.empty() && labels.size() != dim) throw DimensionMismatch("label count differs from dimension");
    l.labels_ = std::move(labels);
    return l;
}

LieAlgebra build_algebra(Field f, std::size_t dim, const std::vector<BracketEntry>& entries,
                         std::vector<std::string> labels) {
    LieAlgebra l = LieAlgebra::from_trusted(f, dim, entries, std::move(labels));
    if (auto bad = find_jacobi_violation_parallel(l)) {
        throw JacobiViolation(bad->i, bad->j, bad->k, to_string(bad->residual, l.labels()));
    }
    return l;
}

namespace {

/// acc += s * [b_i, v]
void add_bracket_with(const LieAlgebra& l, SparseVector& acc, const FieldElement& s, std::size_t i,
                      const SparseVector& v) {
    for (const auto& t : v) {
        if (t.index == i) continue;
        if (i < t.index) {
            sparse_axpy(acc, s * t.coeff, l.pair(i, t.index));
        } else {
            sparse_axpy(acc, -(s * t.coeff), l.pair(t.index, i));
        }
    }
}

}  // namespace

SparseVector jacobiator(const LieAlgebra& l, std::size_t i, std::size_t j, std::size_t k) {
    const FieldElement one = FieldElement::one(l.field());
    const FieldElement minus_one = -one;
    auto term = [&](SparseVector& acc, std::size_t a, std::size_t b, std::size_t c) {
        // acc += [b_a, [b_b, b_c]]
        if (b == c) return;
        const SparseVector& inner = b < c ? l.pair(b, c) : l.pair(c, b);
        add_bracket_with(l, acc, b < c ? one : minus_one, a, inner);
    };
    SparseVector acc;
    term(acc, i, j, k);
    term(acc, j, k, i);
    term(acc, k, i, j);
    return acc;
}

}  // namespace lsup
