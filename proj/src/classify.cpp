#include "lsup/classify.hpp"

#include <algorithm>
#include <functional>

#include "lsup/eigen.hpp"
#include "lsup/error.hpp"
#include "lsup/frattini.hpp"
#include "lsup/module.hpp"
#include "lsup/polynomial.hpp"

namespace lsup {

namespace {

/// Some common eigenvector of ad L over the base field, if any.
std::optional<Vector> common_eigenvector(const LieAlgebra& l) {
    std::vector<Matrix> ads;
    for (std::size_t i = 0; i < l.dim(); ++i) ads.push_back(l.ad_basis(i));
    const auto spaces = joint_eigenspaces(ads, l.field(), l.dim());
    if (spaces.empty()) return std::nullopt;
    return spaces.front().basis_vector(0);
}

}  // namespace

bool is_supersolvable(const LieAlgebra& l) {
    if (l.dim() <= 1) return true;
    if (!is_solvable(l)) return false;
    const auto v = common_eigenvector(l);
    if (!v) return false;
    return is_supersolvable(quotient(l, Subspace::span(l.field(), l.dim(), {*v})).algebra);
}

StructuralFlags structural_flags(const LieAlgebra& l) {
    StructuralFlags f;
    const SeriesReport s = series(l);
    f.solvable = s.is_solvable;
    f.nilpotent = s.is_nilpotent;
    const Subspace d = derived_algebra(l);
    f.completely_solvable = is_nilpotent_subalgebra(l, d);
    f.metabelian = product_space(l, d, d).is_zero();
    f.supersolvable_basefield = f.solvable && is_supersolvable(l);
    f.semisimple = radical(l).is_zero();
    return f;
}

namespace {

bool check_A1_basis(const LieAlgebra& l, const std::array<Vector, 3>& u) {
    if (!Subspace::span(l.field(), l.dim(), {u[0], u[1], u[2]}).is_full()) return false;
    return l.bracket(u[0], u[1]) == u[0] && l.bracket(u[0], u[2]) == u[1] && l.bracket(u[1], u[2]) == u[2];
}

/// Basis from x with ad x eigenvalues {c, 0, -c}.
std::optional<std::array<Vector, 3>> from_semisimple(const LieAlgebra& l, const Vector& x) {
    const auto eig = rational_eigendata(l.ad(x));
    if (eig.size() != 3) return std::nullopt;
    const EigenPair* plus = nullptr;
    const EigenPair* minus = nullptr;
    bool has_zero = false;
    for (const auto& e : eig) {
        if (e.value.is_zero()) has_zero = true;
    }
    if (!has_zero) return std::nullopt;
    for (const auto& e : eig) {
        if (e.value.is_zero()) continue;
        if (!plus) {
            plus = &e;
        } else {
            minus = &e;
        }
    }
    if (minus->value.is_one()) std::swap(plus, minus);  // keep u_0 = x when possible
    if (!(plus->value + minus->value).is_zero()) return std::nullopt;
    const FieldElement c = plus->value;
    const Vector u0 = scale(c.inverse(), x);
    const Vector p = plus->space.basis_vector(0);
    const Vector q = minus->space.basis_vector(0);
    const Vector br = l.bracket(q, p);
    std::size_t k = 0;
    while (u0[k].is_zero()) ++k;
    const FieldElement t = br[k] / u0[k];
    if (t.is_zero() || !(br == scale(t, u0))) return std::nullopt;
    std::array<Vector, 3> u{scale(t.inverse(), q), u0, p};
    if (!check_A1_basis(l, u)) return std::nullopt;
    return u;
}

/// Basis from a nonzero nilpotent e: complete to an sl2-triple (e, h, f).
std::optional<std::array<Vector, 3>> from_nilpotent(const LieAlgebra& l, const Vector& e) {
    const Field f = l.field();
    const std::size_t n = l.dim();
    const Matrix ade = l.ad(e);
    const auto f0 = solve_linear((ade * ade).scaled(FieldElement(-1)), scale(FieldElement(2), e));
    if (!f0) return std::nullopt;
    const Vector h = ade.apply(*f0);
    const Matrix adh = l.ad(h);
    Matrix system(f, 0, n);
    Vector rhs;
    for (std::size_t r = 0; r < n; ++r) {
        system.append_row(ade.row(r));
        rhs.push_back(h[r]);
    }
    const Matrix shifted = adh + Matrix::identity(f, n).scaled(FieldElement(2));
    for (std::size_t r = 0; r < n; ++r) {
        system.append_row(shifted.row(r));
        rhs.push_back(FieldElement::zero(f));
    }
    const auto ff = solve_linear(system, rhs);
    if (!ff) return std::nullopt;
    const FieldElement half(Rational(1, 2));
    std::array<Vector, 3> u{scale(-half, *ff), scale(half, h), e};
    if (!check_A1_basis(l, u)) return std::nullopt;
    return u;
}

std::vector<Vector> search_vectors(const LieAlgebra& l) {
    const Field f = l.field();
    const std::size_t n = l.dim();
    std::vector<Vector> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(unit_vector(f, n, i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            out.push_back(add(unit_vector(f, n, i), unit_vector(f, n, j)));
            out.push_back(sub(unit_vector(f, n, i), unit_vector(f, n, j)));
            if (!f.is_rationals()) {
                out.push_back(add(unit_vector(f, n, i), scale(FieldElement::generator(f), unit_vector(f, n, j))));
            }
        }
    return out;
}

Integer isqrt(const Integer& a) { return sqrt(a); }

bool perfect_square(const Integer& a) { return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0; }

/// Symmetric congruence diagonalization: returns P with P^T A P diagonal.
std::pair<Matrix, std::vector<Rational>> diagonalize_form(const Matrix& form) {
    const Field f = form.field();
    const std::size_t n = form.rows();
    Matrix a = form;
    Matrix p = Matrix::identity(f, n);
    auto add_multiple = [&](std::size_t dst, std::size_t src, const FieldElement& t) {
        // basis change b_dst += t b_src
        for (std::size_t r = 0; r < n; ++r) p(r, dst) += t * p(r, src);
        for (std::size_t c = 0; c < n; ++c) a(dst, c) += t * a(src, c);
        for (std::size_t r = 0; r < n; ++r) a(r, dst) += t * a(r, src);
    };
    for (std::size_t i = 0; i < n; ++i) {
        if (a(i, i).is_zero()) {
            std::size_t j = i + 1;
            while (j < n && a(j, j).is_zero()) ++j;
            if (j < n) {
                a.swap_rows(i, j);
                for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
                for (std::size_t r = 0; r < n; ++r) std::swap(p(r, i), p(r, j));
            } else {
                j = i + 1;
                while (j < n && a(i, j).is_zero()) ++j;
                if (j == n) continue;
                add_multiple(i, j, FieldElement::one(f));
            }
        }
        const FieldElement inv = a(i, i).inverse();
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!a(i, j).is_zero()) add_multiple(j, i, -(a(i, j) * inv));
        }
    }
    std::vector<Rational> d;
    for (std::size_t i = 0; i < n; ++i) d.push_back(a(i, i).rational());
    return {p, d};
}

}  // namespace

std::optional<Vector> isotropic_vector(const Matrix& form) {
    if (form.rows() != 3 || form.cols() != 3) throw DimensionMismatch("isotropic_vector expects a 3x3 form");
    if (!form.field().is_rationals()) throw Unsupported("isotropic_vector over an extension field");
    const auto [p, d] = diagonalize_form(form);
    for (std::size_t i = 0; i < 3; ++i) {
        if (d[i] == 0) return p.column(i);
    }
    // Integral, squarefree, pairwise coprime: sum a_i Y_i^2 = 0 with x_i = scale_i Y_i.
    std::array<Integer, 3> a;
    std::array<Rational, 3> sc;
    for (std::size_t i = 0; i < 3; ++i) {
        a[i] = d[i].get_num() * d[i].get_den();
        sc[i] = Rational(d[i].get_den());
    }
    auto make_squarefree = [&](std::size_t i) {
        Integer s = 1;
        for (const auto& [q, e] : factor_integer(abs(a[i]))) {
            for (unsigned k = 0; k + 1 < e; k += 2) s *= q;
        }
        a[i] /= s * s;
        sc[i] /= s;
    };
    for (std::size_t i = 0; i < 3; ++i) make_squarefree(i);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < 3 && !changed; ++i)
            for (std::size_t j = i + 1; j < 3 && !changed; ++j) {
                Integer g = gcd(a[i], a[j]);
                if (g == 1) continue;
                const std::size_t k = 3 - i - j;
                a[i] /= g;
                a[j] /= g;
                a[k] *= g;
                sc[i] /= g;
                sc[j] /= g;
                make_squarefree(k);
                changed = true;
            }
    }
    if ((sgn(a[0]) > 0) == (sgn(a[1]) > 0) && (sgn(a[1]) > 0) == (sgn(a[2]) > 0)) return std::nullopt;
    // Search the Holzer box, looping over the two coordinates with the smaller bounds.
    std::array<std::size_t, 3> ord{0, 1, 2};
    std::sort(ord.begin(), ord.end(), [&](std::size_t x, std::size_t y) { return abs(a[x]) > abs(a[y]); });
    const Integer& a1 = a[ord[0]];
    const Integer& a2 = a[ord[1]];
    const Integer& a3 = a[ord[2]];
    const Integer b1 = isqrt(abs(a2 * a3));
    const Integer b2 = isqrt(abs(a1 * a3));
    if ((b1 + 1) * (b2 + 1) > 20000000) throw Unsupported("ternary form coefficients too large for the box search");
    for (Integer y1 = 0; y1 <= b1; ++y1)
        for (Integer y2 = 0; y2 <= b2; ++y2) {
            if (y1 == 0 && y2 == 0) continue;
            const Integer num = -(a1 * y1 * y1 + a2 * y2 * y2);
            if (num % a3 != 0) continue;
            const Integer sq = num / a3;
            if (!perfect_square(sq)) continue;
            std::array<Integer, 3> y;
            y[ord[0]] = y1;
            y[ord[1]] = y2;
            y[ord[2]] = isqrt(sq);
            Vector v = zero_vector(form.field(), 3);
            for (std::size_t i = 0; i < 3; ++i) axpy(v, FieldElement(Rational(sc[i] * y[i])), p.column(i));
            return v;
        }
    // Holzer: a nontrivial zero, if any, has a representative inside the box
    return std::nullopt;
}

std::optional<std::array<Vector, 3>> split_A1_basis(const LieAlgebra& l) {
    if (l.dim() != 3 || is_solvable(l)) return std::nullopt;
    for (const auto& x : search_vectors(l)) {
        if (auto u = from_semisimple(l, x)) return u;
    }
    if (!l.field().is_rationals()) {
        throw Unsupported("split test over an extension field found no split element among search vectors");
    }
    const auto e = isotropic_vector(killing_form(l));
    if (!e) return std::nullopt;
    auto u = from_nilpotent(l, *e);
    if (!u) throw InternalInconsistency("isotropic Killing vector did not extend to an sl2-triple");
    return u;
}

bool is_split_A1(const LieAlgebra& l) { return split_A1_basis(l).has_value(); }

std::string to_string(VerdictValue v) {
    switch (v) {
        case VerdictValue::Yes: return "Yes";
        case VerdictValue::No: return "No";
        case VerdictValue::Unknown: return "Unknown";
    }
    return "?";
}

std::string to_string(DecisionMode m) { return m == DecisionMode::Base ? "base" : "closure"; }

namespace {

Verdict make(std::string cls, DecisionMode mode, VerdictValue v, std::string rule) {
    Verdict out;
    out.cls = std::move(cls);
    out.mode = mode;
    out.value = v;
    out.rule = std::move(rule);
    return out;
}

}  // namespace

Verdict decide_MD_MN(const LieAlgebra& l, DecisionMode mode) {
    if (is_solvable(l)) return make("MD_MN", mode, VerdictValue::Yes, "solvable");
    if (mode == DecisionMode::Closure) {
        if (l.dim() - radical(l).dim() == 3) return make("MD_MN", mode, VerdictValue::Yes, "dim L/R = 3");
        return make("MD_MN", mode, VerdictValue::No, "not solvable, dim L/R != 3");
    }
    if (decide_MO(l).value == VerdictValue::Yes) return make("MD_MN", mode, VerdictValue::Yes, "in MO");
    return make("MD_MN", mode, VerdictValue::Unknown, "");
}

Verdict decide_MU(const LieAlgebra& l, DecisionMode mode) {
    const SeriesReport s = series(l);
    if (s.is_nilpotent) return make("MU", mode, VerdictValue::Yes, "nilpotent");
    if (is_nilpotent_subalgebra(l, derived_algebra(l))) {
        return make("MU", mode, VerdictValue::No, "completely solvable, not nilpotent");
    }
    if (mode == DecisionMode::Base) return make("MU", mode, VerdictValue::Unknown, "");
    if (s.is_solvable) return make("MU", mode, VerdictValue::No, "solvable, not nilpotent");
    const Subspace n = nilradical(l);
    if (l.dim() - n.dim() == 3 && !is_solvable(quotient(l, n).algebra)) {
        return make("MU", mode, VerdictValue::Yes, "L/N three-dimensional simple");
    }
    return make("MU", mode, VerdictValue::No, "L/N not three-dimensional simple");
}

Verdict decide_MO(const LieAlgebra& l) {
    const DecisionMode mode = DecisionMode::Base;
    try {
        if (is_solvable(l)) {
            const FrattiniReport fr = frattini_ideal(l);
            const LieAlgebra q = quotient(l, fr.phi).algebra;
            if (is_supersolvable(q)) return make("MO", mode, VerdictValue::Yes, "L/phi(L) supersolvable and phi-free");
            return make("MO", mode, VerdictValue::No, "L/phi(L) not supersolvable");
        }
        const Subspace r = radical(l);
        const Subspace t = terminal_derived(l);
        if (!subspace_intersect(r, t).is_zero() || r.dim() + t.dim() != l.dim() || !product_space(l, r, t).is_zero()) {
            return make("MO", mode, VerdictValue::Unknown, "");
        }
        if (!r.is_zero() && !is_supersolvable(quotient(subalgebra_algebra(l, r), frattini_ideal(subalgebra_algebra(l, r)).phi).algebra)) {
            return make("MO", mode, VerdictValue::No, "R/phi(R) not supersolvable");
        }
        const auto u = split_A1_basis(subalgebra_algebra(l, t));
        if (!u) return make("MO", mode, VerdictValue::No, "semisimple part not split three-dimensional simple");
        Verdict v = make("MO", mode, VerdictValue::Yes, "R/phi(R) supersolvable, semisimple part split three-dimensional simple");
        v.witness = t;
        for (const auto& x : *u) {
            Vector y = zero_vector(l.field(), l.dim());
            for (std::size_t k = 0; k < 3; ++k) axpy(y, x[k], t.basis_vector(k));
            v.witness_basis.push_back(std::move(y));
        }
        return v;
    } catch (const Unsupported&) {
        return make("MO", mode, VerdictValue::Unknown, "");
    }
}

Verdict decide_MA(const LieAlgebra& l, DecisionMode mode) {
    const StructuralFlags f = structural_flags(l);
    if (f.supersolvable_basefield) return make("MA", mode, VerdictValue::Yes, "supersolvable");
    if (f.metabelian) return make("MA", mode, VerdictValue::Yes, "metabelian");
    if (mode == DecisionMode::Base) {
        if (decide_MO(l).value == VerdictValue::Yes) return make("MA", mode, VerdictValue::Yes, "in MO");
        return make("MA", mode, VerdictValue::Unknown, "");
    }
    if (f.solvable) return make("MA", mode, VerdictValue::Yes, "solvable");
    if (f.semisimple) {
        if (l.dim() == 3) return make("MA", mode, VerdictValue::Yes, "three-dimensional simple");
        return make("MA", mode, VerdictValue::No, "semisimple, not three-dimensional simple");
    }
    if (l.dim() - radical(l).dim() != 3) return make("MA", mode, VerdictValue::No, "not in MD = MN");
    return make("MA", mode, VerdictValue::Unknown, "");
}

std::optional<Subspace> find_abelian_supplement(const LieAlgebra& l, const Subspace& m) {
    if (!is_subalgebra(l, m) || m.is_full()) throw NotSubalgebra("supplement search needs a proper subalgebra");
    const Field f = l.field();
    const std::size_t n = l.dim();
    auto works = [&](const Subspace& u) { return is_abelian(l, u) && is_subalgebra(l, u) && subspace_sum(m, u).is_full(); };

    std::vector<Subspace> spaces = series(l).derived;
    spaces.push_back(asoc(l));
    spaces.push_back(center(l));
    std::vector<Vector> pool;
    for (std::size_t i = 0; i < n; ++i) pool.push_back(unit_vector(f, n, i));
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& e : rational_eigendata(l.ad_basis(i))) {
            spaces.push_back(e.space);
            for (std::size_t k = 0; k < e.space.dim(); ++k) pool.push_back(e.space.basis_vector(k));
        }
    }
    for (const auto& s : spaces) {
        if (!s.is_zero() && works(s)) return s;
    }

    // Distinct lines only.
    std::vector<Vector> lines;
    {
        std::vector<Subspace> seen;
        for (const auto& v : pool) {
            Subspace s = Subspace::span(f, n, {v});
            if (std::find(seen.begin(), seen.end(), s) != seen.end()) continue;
            seen.push_back(s);
            lines.push_back(s.basis_vector(0));
        }
    }
    const std::size_t k = n - m.dim();
    const std::size_t p = lines.size();
    std::vector<std::vector<bool>> commute(p, std::vector<bool>(p, true));
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i + 1; j < p; ++j) commute[i][j] = commute[j][i] = lsup::is_zero(l.bracket(lines[i], lines[j]));

    std::size_t budget = 200000;
    std::vector<std::size_t> pick;
    std::optional<Subspace> found;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (found || budget == 0) return;
        if (pick.size() == k) {
            --budget;
            std::vector<Vector> rows;
            for (auto i : pick) rows.push_back(lines[i]);
            Subspace u = Subspace::span(f, n, rows);
            if (subspace_sum(m, u).is_full()) found = u;
            return;
        }
        for (std::size_t i = start; i < p && !found; ++i) {
            if (m.contains(lines[i])) continue;
            bool ok = true;
            for (auto j : pick) ok = ok && commute[i][j];
            if (!ok) continue;
            pick.push_back(i);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    if (found && !works(*found)) throw InternalInconsistency("supplement search returned an invalid witness");
    return found;
}

}  // namespace lsup
