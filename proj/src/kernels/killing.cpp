#include <algorithm>

#include "lsup/lie_algebra.hpp"

namespace lsup {

namespace {

/// cols[i][l] = [b_i, b_l]
std::vector<std::vector<SparseVector>> ad_columns(const LieAlgebra& l) {
    const std::size_t n = l.dim();
    std::vector<std::vector<SparseVector>> cols(n);
    for (std::size_t i = 0; i < n; ++i) {
        cols[i].reserve(n);
        for (std::size_t c = 0; c < n; ++c) cols[i].push_back(l.basis_bracket(i, c));
    }
    return cols;
}

const FieldElement* lookup(const SparseVector& v, std::size_t index) {
    auto it = std::lower_bound(v.begin(), v.end(), index,
                               [](const Term& t, std::size_t x) { return t.index < x; });
    if (it == v.end() || it->index != index) return nullptr;
    return &it->coeff;
}

// K_ij = sum_l sum_{(k, v) in [b_j, b_l]} v * <b_l-coefficient of [b_i, b_k]>
FieldElement killing_entry(const std::vector<std::vector<SparseVector>>& cols, Field f, std::size_t i,
                           std::size_t j) {
    FieldElement acc = FieldElement::zero(f);
    const std::size_t n = cols.size();
    for (std::size_t l = 0; l < n; ++l) {
        for (const auto& t : cols[j][l]) {
            if (const FieldElement* c = lookup(cols[i][t.index], l)) acc += t.coeff * *c;
        }
    }
    return acc;
}

}  // namespace

Matrix killing_form_serial(const LieAlgebra& l) {
    const auto cols = ad_columns(l);
    const std::size_t n = l.dim();
    Matrix k(l.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            k(i, j) = killing_entry(cols, l.field(), i, j);
            k(j, i) = k(i, j);
        }
    return k;
}

Matrix killing_form_parallel(const LieAlgebra& l) {
    const auto cols = ad_columns(l);
    const long n = static_cast<long>(l.dim());
    Matrix k(l.field(), l.dim(), l.dim());
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        for (std::size_t j = ui; j < l.dim(); ++j) k(ui, j) = killing_entry(cols, l.field(), ui, j);
    }
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t j = 0; j < i; ++j) k(i, j) = k(j, i);
    return k;
}

}  // namespace lsup
