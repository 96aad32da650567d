#include "lsup/module.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include "lsup/eigen.hpp"
#include "lsup/error.hpp"
#include "lsup/structure.hpp"

namespace lsup {

std::vector<Matrix> restrict_ops(const std::vector<Matrix>& ops, const Subspace& v) {
    std::vector<Matrix> out;
    out.reserve(ops.size());
    for (const auto& op : ops) {
        Matrix m(v.field(), v.dim(), v.dim());
        for (std::size_t k = 0; k < v.dim(); ++k) {
            const Vector img = op.apply(v.basis_vector(k));
            if (!v.contains(img)) throw Error("subspace " + v.to_string() + " is not invariant");
            m.set_column(k, v.coordinates(img));
        }
        out.push_back(std::move(m));
    }
    return out;
}

namespace {

/// Linearly independent nonzero members of `ops`.
std::vector<Matrix> independent(const std::vector<Matrix>& ops) {
    std::vector<Matrix> out;
    if (ops.empty()) return out;
    EchelonBasis seen(ops.front().field(), ops.front().rows() * ops.front().cols());
    for (const auto& op : ops) {
        if (seen.insert(op.flatten())) out.push_back(op);
    }
    return out;
}

Subspace embed(const Subspace& local, const Subspace& w) {
    std::vector<Vector> rows;
    for (std::size_t k = 0; k < local.dim(); ++k) {
        const Vector y = local.basis_vector(k);
        Vector x = zero_vector(w.field(), w.ambient_dim());
        for (std::size_t j = 0; j < y.size(); ++j) axpy(x, y[j], w.basis_vector(j));
        rows.push_back(std::move(x));
    }
    return Subspace::span(w.field(), w.ambient_dim(), rows);
}

}  // namespace

std::vector<Matrix> envelope(const std::vector<Matrix>& gens) {
    const std::vector<Matrix> g = independent(gens);
    if (g.empty()) return {};
    const std::size_t n = g.front().rows();
    EchelonBasis span(g.front().field(), n * n);
    std::vector<Matrix> basis;
    for (const auto& m : g) {
        span.insert(m.flatten());
        basis.push_back(m);
    }
    for (std::size_t q = 0; q < basis.size() && basis.size() < n * n; ++q) {
        for (const auto& m : g) {
            Matrix prod = m * basis[q];
            if (span.insert(prod.flatten())) basis.push_back(std::move(prod));
        }
    }
    return basis;
}

std::vector<Matrix> trace_radical(const std::vector<Matrix>& env) {
    if (env.empty()) return {};
    const Field f = env.front().field();
    const std::size_t d = env.size();
    Matrix gram(f, d, d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a; b < d; ++b) {
            gram(a, b) = (env[a] * env[b]).trace();
            gram(b, a) = gram(a, b);
        }
    const Subspace coeffs = kernel(gram);
    std::vector<Matrix> out;
    for (std::size_t k = 0; k < coeffs.dim(); ++k) {
        const Vector c = coeffs.basis_vector(k);
        Matrix m(f, env.front().rows(), env.front().cols());
        for (std::size_t a = 0; a < d; ++a) {
            if (!c[a].is_zero()) m = m + env[a].scaled(c[a]);
        }
        out.push_back(std::move(m));
    }
    return out;
}

Subspace module_socle(const std::vector<Matrix>& ops, Field f, std::size_t n) {
    const std::vector<Matrix> rad = trace_radical(envelope(ops));
    Matrix system(f, 0, n);
    for (const auto& r : rad)
        for (std::size_t k = 0; k < n; ++k) system.append_row(r.row(k));
    return kernel(system);
}

std::vector<Matrix> commutant(const std::vector<Matrix>& ops, Field f, std::size_t n) {
    const std::vector<Matrix> g = independent(ops);
    // Unknown X stored row-major: x[r*n + c].
    Matrix system(f, 0, n * n);
    for (const auto& a : g) {
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                Vector row = zero_vector(f, n * n);
                for (std::size_t k = 0; k < n; ++k) {
                    row[r * n + k] += a(k, c);  // (XA)_rc
                    row[k * n + c] -= a(r, k);  // (AX)_rc
                }
                if (!is_zero(row)) system.append_row(row);
            }
    }
    const Subspace sol = kernel(system);
    std::vector<Matrix> out;
    for (std::size_t k = 0; k < sol.dim(); ++k) out.push_back(Matrix::unflatten(f, n, n, sol.basis_vector(k)));
    return out;
}

namespace {

/// Invariant complement of the submodule u in F^m (completely reducible case).
Subspace invariant_complement(const std::vector<Matrix>& ops, Field f, std::size_t m, const Subspace& u) {
    const std::vector<Matrix> g = independent(ops);
    const std::size_t unknowns = m * m;
    Matrix system(f, 0, unknowns);
    Vector rhs;
    auto add_row = [&](Vector row, FieldElement b) {
        system.append_row(row);
        rhs.push_back(std::move(b));
    };
    for (const auto& a : g)
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c) {
                Vector row = zero_vector(f, unknowns);
                for (std::size_t k = 0; k < m; ++k) {
                    row[r * m + k] += a(k, c);
                    row[k * m + c] -= a(r, k);
                }
                if (!is_zero(row)) add_row(std::move(row), FieldElement::zero(f));
            }
    // P u = u
    for (std::size_t k = 0; k < u.dim(); ++k) {
        const Vector uk = u.basis_vector(k);
        for (std::size_t r = 0; r < m; ++r) {
            Vector row = zero_vector(f, unknowns);
            for (std::size_t c = 0; c < m; ++c) row[r * m + c] = uk[c];
            add_row(std::move(row), uk[r]);
        }
    }
    // y^T P = 0 for y orthogonal to u, so the image lies in u.
    const Subspace perp = kernel(u.basis());
    for (std::size_t k = 0; k < perp.dim(); ++k) {
        const Vector y = perp.basis_vector(k);
        for (std::size_t c = 0; c < m; ++c) {
            Vector row = zero_vector(f, unknowns);
            for (std::size_t r = 0; r < m; ++r) row[r * m + c] = y[r];
            add_row(std::move(row), FieldElement::zero(f));
        }
    }
    auto p = solve_linear(system, rhs);
    if (!p) throw InternalInconsistency("submodule has no invariant complement; module is not completely reducible");
    return kernel(Matrix::unflatten(f, m, m, *p));
}

bool has_small_factor(const Polynomial& p, Field f, std::optional<Polynomial>& factor) {
    const auto roots = roots_in_field(p);
    if (!roots.empty()) {
        factor = Polynomial::linear(f, roots.front());
        return true;
    }
    if (f.is_rationals() && p.degree() > 2) {
        const auto quads = rational_quadratic_factors(p);
        if (!quads.empty()) {
            factor = quads.front();
            return true;
        }
    }
    return false;
}

/// Degree bound up to which "no small factor" proves irreducibility.
int irreducibility_bound(Field f) { return f.is_rationals() ? 5 : 3; }

std::optional<Subspace> proper_submodule(const std::vector<Matrix>& ops, Field f, std::size_t m) {
    const auto joint = joint_eigenspaces(ops, f, m);
    if (!joint.empty()) return Subspace::span(f, m, {joint.front().basis_vector(0)});

    const std::vector<Matrix> comm = commutant(ops, f, m);
    if (comm.size() <= 1) return std::nullopt;

    std::vector<Matrix> candidates = comm;
    std::mt19937 rng(20240611u);
    for (int t = 0; t < 24; ++t) {
        Matrix x(f, m, m);
        for (const auto& c : comm) {
            const long coef = static_cast<long>(rng() % 7) - 3;
            if (coef != 0) x = x + c.scaled(FieldElement(coef));
        }
        candidates.push_back(std::move(x));
    }
    for (const auto& x : candidates) {
        if (x.is_scalar()) continue;
        const Polynomial p = minimal_polynomial(x);
        std::optional<Polynomial> factor;
        if (has_small_factor(p, f, factor)) {
            Subspace u = kernel((*factor)(x));
            if (!u.is_zero() && !u.is_full()) return u;
            continue;
        }
        if (p.degree() <= irreducibility_bound(f) && static_cast<std::size_t>(p.degree()) == comm.size()) {
            return std::nullopt;  // the commutant is the field F[x]
        }
    }
    throw Unsupported("could not split a module of dimension " + std::to_string(m) +
                      " with commutant of dimension " + std::to_string(comm.size()));
}

std::vector<Subspace> split_local(const std::vector<Matrix>& ops, Field f, std::size_t m) {
    if (m == 0) return {};
    const Subspace whole = Subspace::full(f, m);
    if (m == 1) return {whole};
    const auto u = proper_submodule(ops, f, m);
    if (!u) return {whole};
    const Subspace k = invariant_complement(ops, f, m, *u);
    std::vector<Subspace> out;
    for (const Subspace* part : {&*u, &k}) {
        for (const auto& piece : split_local(restrict_ops(ops, *part), f, part->dim())) {
            out.push_back(embed(piece, *part));
        }
    }
    return out;
}

}  // namespace

std::vector<Subspace> irreducible_decomposition(const std::vector<Matrix>& ops, Field f, const Subspace& w) {
    std::vector<Subspace> out;
    for (const auto& piece : split_local(restrict_ops(ops, w), f, w.dim())) out.push_back(embed(piece, w));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct SocleData {
    Subspace socle;
    std::vector<Matrix> ads;
};

SocleData socle_of_center_of_nilradical(const LieAlgebra& l) {
    SocleData d;
    const Subspace n = nilradical(l);
    if (n.is_zero()) {
        d.socle = n;
        return d;
    }
    const Subspace z = subspace_intersect(centralizer(l, n), n);
    for (std::size_t i = 0; i < l.dim(); ++i) d.ads.push_back(l.ad_basis(i));
    const Subspace local = module_socle(restrict_ops(d.ads, z), l.field(), z.dim());
    d.socle = embed(local, z);
    return d;
}

}  // namespace

Subspace asoc(const LieAlgebra& l) { return socle_of_center_of_nilradical(l).socle; }

std::vector<Subspace> minimal_abelian_ideals(const LieAlgebra& l) {
    const SocleData d = socle_of_center_of_nilradical(l);
    if (d.socle.is_zero()) return {};
    return irreducible_decomposition(d.ads, l.field(), d.socle);
}

}  // namespace lsup
