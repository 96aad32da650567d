#include <atomic>
#include <limits>

#include "lsup/lie_algebra.hpp"

namespace lsup {

// Jacobiator is alternating, so triples i < j < k suffice.

std::optional<JacobiFailure> find_jacobi_violation_serial(const LieAlgebra& l) {
    const std::size_t n = l.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                SparseVector r = jacobiator(l, i, j, k);
                if (!r.empty()) return JacobiFailure{i, j, k, std::move(r)};
            }
    return std::nullopt;
}

std::optional<JacobiFailure> find_jacobi_violation_parallel(const LieAlgebra& l) {
    const long n = static_cast<long>(l.dim());
    if (n < 3) return std::nullopt;
    std::vector<std::optional<JacobiFailure>> first(static_cast<std::size_t>(n));
    std::atomic<long> best{std::numeric_limits<long>::max()};
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) {
        if (i > best.load(std::memory_order_relaxed)) continue;
        const auto ui = static_cast<std::size_t>(i);
        bool found = false;
        for (std::size_t j = ui + 1; j < l.dim() && !found; ++j)
            for (std::size_t k = j + 1; k < l.dim(); ++k) {
                SparseVector r = jacobiator(l, ui, j, k);
                if (r.empty()) continue;
                first[ui] = JacobiFailure{ui, j, k, std::move(r)};
                found = true;
                long cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
                break;
            }
    }
    for (auto& f : first) {
        if (f) return f;
    }
    return std::nullopt;
}

}  // namespace lsup
