#include "lsup/eigen.hpp"

#include "lsup/error.hpp"

namespace lsup {

namespace {

Matrix shifted(const Matrix& m, const FieldElement& lambda) {
    Matrix s = m;
    for (std::size_t k = 0; k < m.rows(); ++k) s(k, k) -= lambda;
    return s;
}

}  // namespace

std::vector<EigenPair> rational_eigendata(const Matrix& m) {
    if (!m.is_square()) throw DimensionMismatch("eigendata of a non-square matrix");
    std::vector<EigenPair> out;
    for (const auto& lambda : roots_in_field(characteristic_polynomial(m))) {
        out.push_back({lambda, kernel(shifted(m, lambda))});
    }
    return out;
}

std::vector<Subspace> joint_eigenspaces(const std::vector<Matrix>& ops, Field f, std::size_t n) {
    std::vector<Subspace> current{Subspace::full(f, n)};
    for (const auto& op : ops) {
        if (op.is_zero()) continue;
        std::vector<Subspace> next;
        const auto eig = rational_eigendata(op);
        for (const auto& s : current) {
            for (const auto& e : eig) {
                Subspace w = subspace_intersect(s, e.space);
                if (!w.is_zero()) next.push_back(std::move(w));
            }
        }
        current = std::move(next);
        if (current.empty()) break;
    }
    return current;
}

}  // namespace lsup
