#include "lsup/frattini.hpp"

#include "lsup/error.hpp"
#include "lsup/module.hpp"

namespace lsup {

std::optional<Subspace> has_complement(const LieAlgebra& l, const Subspace& a) {
    if (!is_ideal(l, a) || !is_abelian(l, a)) {
        throw NotAbelianIdeal("subspace " + a.to_string() + " is not an abelian ideal");
    }
    const Field f = l.field();
    const std::size_t n = l.dim();
    const std::size_t da = a.dim();
    const std::vector<std::size_t> cidx = a.complement_indices();
    const std::size_t k = cidx.size();
    if (k == 0) return zero_space(l);
    if (da == 0) return full_space(l);

    // Section x_p -> b_{cidx[p]}; unknown mu_p = sum_q m[p][q] a_q, index p*da + q.
    std::vector<std::vector<Vector>> act(k);  // act[p][q] = coordA([c_p, a_q])
    for (std::size_t p = 0; p < k; ++p) {
        const Matrix ad = l.ad_basis(cidx[p]);
        for (std::size_t q = 0; q < da; ++q) act[p].push_back(a.coordinates(ad.apply(a.basis_vector(q))));
    }
    const std::size_t unknowns = k * da;
    Matrix system(f, 0, unknowns);
    Vector rhs;
    for (std::size_t p = 0; p < k; ++p)
        for (std::size_t r = p + 1; r < k; ++r) {
            const Vector v = to_dense(f, n, l.basis_bracket(cidx[p], cidx[r]));
            const Vector red = a.reduce(v);
            const Vector alpha = a.coordinates(sub(v, red));
            // alpha + [c_p, mu_r] - [c_r, mu_p] - sum_s pi_s mu_s = 0
            for (std::size_t t = 0; t < da; ++t) {
                Vector row = zero_vector(f, unknowns);
                for (std::size_t q = 0; q < da; ++q) {
                    row[r * da + q] += act[p][q][t];
                    row[p * da + q] -= act[r][q][t];
                }
                for (std::size_t s = 0; s < k; ++s) {
                    const FieldElement& pi = red[cidx[s]];
                    if (!pi.is_zero()) row[s * da + t] -= pi;
                }
                system.append_row(row);
                rhs.push_back(-alpha[t]);
            }
        }
    std::optional<Vector> m;
    if (system.rows() == 0) {
        m = zero_vector(f, unknowns);
    } else {
        m = solve_linear(system, rhs);
    }
    if (!m) return std::nullopt;
    std::vector<Vector> rows;
    for (std::size_t p = 0; p < k; ++p) {
        Vector u = unit_vector(f, n, cidx[p]);
        for (std::size_t q = 0; q < da; ++q) axpy(u, (*m)[p * da + q], a.basis_vector(q));
        rows.push_back(std::move(u));
    }
    Subspace u = Subspace::span(f, n, rows);
    if (!is_subalgebra(l, u) || !subspace_intersect(u, a).is_zero() || !subspace_sum(u, a).is_full()) {
        throw InternalInconsistency("complement solver produced an invalid complement");
    }
    return u;
}

bool is_phi_free(const LieAlgebra& l) {
    if (!is_solvable(l)) throw NotSolvable("phi-free test needs a solvable algebra");
    return has_complement(l, asoc(l)).has_value();
}

std::string to_string(FrattiniReport::Method m) {
    switch (m) {
        case FrattiniReport::Method::Nilpotent: return "nilpotent";
        case FrattiniReport::Method::SolvableRecursive: return "solvable-recursive";
        case FrattiniReport::Method::Declared: return "declared";
    }
    return "?";
}

namespace {

/// Module maps h: A_i -> A_j commuting with the action (local coordinates).
std::vector<Matrix> module_homs(const std::vector<Matrix>& ri, const std::vector<Matrix>& rj, Field f,
                                std::size_t di, std::size_t dj) {
    // h is dj x di, unknown h[r][c] at r*di + c; equations h Ri - Rj h = 0.
    Matrix system(f, 0, dj * di);
    for (std::size_t o = 0; o < ri.size(); ++o)
        for (std::size_t r = 0; r < dj; ++r)
            for (std::size_t c = 0; c < di; ++c) {
                Vector row = zero_vector(f, dj * di);
                for (std::size_t k = 0; k < di; ++k) row[r * di + k] += ri[o](k, c);
                for (std::size_t k = 0; k < dj; ++k) row[k * di + c] -= rj[o](r, k);
                if (!is_zero(row)) system.append_row(row);
            }
    const Subspace sol = kernel(system);
    std::vector<Matrix> out;
    for (std::size_t k = 0; k < sol.dim(); ++k) out.push_back(Matrix::unflatten(f, dj, di, sol.basis_vector(k)));
    return out;
}

std::optional<Subspace> non_complemented_minimal_ideal(const LieAlgebra& l) {
    const Field f = l.field();
    std::vector<Matrix> ads;
    for (std::size_t i = 0; i < l.dim(); ++i) ads.push_back(l.ad_basis(i));
    // Minimal ideals inside phi(L) lie in Asoc ∩ L^2.
    const Subspace w = subspace_intersect(asoc(l), derived_algebra(l));
    if (w.is_zero()) return std::nullopt;
    const std::vector<Subspace> pieces = irreducible_decomposition(ads, f, w);
    for (const auto& p : pieces) {
        if (!has_complement(l, p)) return p;
    }
    // Isomorphic summands admit other decompositions: try graphs of module maps.
    for (std::size_t i = 0; i < pieces.size(); ++i)
        for (std::size_t j = 0; j < pieces.size(); ++j) {
            if (i == j || pieces[i].dim() != pieces[j].dim()) continue;
            const auto ri = restrict_ops(ads, pieces[i]);
            const auto rj = restrict_ops(ads, pieces[j]);
            for (const auto& h : module_homs(ri, rj, f, pieces[i].dim(), pieces[j].dim())) {
                for (long sign : {1L, -1L}) {
                    std::vector<Vector> rows;
                    for (std::size_t c = 0; c < pieces[i].dim(); ++c) {
                        Vector x = pieces[i].basis_vector(c);
                        for (std::size_t r = 0; r < pieces[j].dim(); ++r)
                            axpy(x, h(r, c) * FieldElement(sign), pieces[j].basis_vector(r));
                        rows.push_back(std::move(x));
                    }
                    const Subspace g = Subspace::span(f, l.dim(), rows);
                    if (!has_complement(l, g)) return g;
                }
            }
        }
    return std::nullopt;
}

Subspace solvable_phi(const LieAlgebra& l) {
    if (l.dim() == 0 || is_phi_free(l)) return zero_space(l);
    if (is_nilpotent(l)) return derived_algebra(l);
    const auto a = non_complemented_minimal_ideal(l);
    if (!a) {
        throw Unsupported("no non-complemented minimal ideal found in Asoc ∩ L^2 for a non-phi-free algebra");
    }
    const QuotientMap q = quotient(l, *a);
    return q.preimage(solvable_phi(q.algebra));
}

}  // namespace

FrattiniReport frattini_ideal(const LieAlgebra& l) {
    FrattiniReport r;
    const SeriesReport s = series(l);
    if (s.is_nilpotent) {
        r.phi = s.derived.size() > 1 ? s.derived[1] : zero_space(l);
        r.method = FrattiniReport::Method::Nilpotent;
    } else if (s.is_solvable) {
        r.phi = solvable_phi(l);
        r.method = FrattiniReport::Method::SolvableRecursive;
        if (!r.phi.is_zero() && !is_phi_free(quotient(l, r.phi).algebra)) {
            throw InternalInconsistency("L/phi(L) is not phi-free");
        }
    } else if (radical(l).is_zero()) {
        r.phi = zero_space(l);  // semisimple algebras are phi-free in characteristic zero
        r.method = FrattiniReport::Method::Declared;
    } else {
        throw Unsupported("Frattini ideal of a non-solvable, non-semisimple algebra");
    }
    if (!is_ideal(l, r.phi)) throw InternalInconsistency("computed Frattini ideal is not an ideal");
    r.is_phi_free = r.phi.is_zero();
    return r;
}

}  // namespace lsup
