#include "lsup/polynomial.hpp"

#include <algorithm>
#include <map>

#include "lsup/error.hpp"

namespace lsup {

Polynomial::Polynomial(Field f, std::vector<FieldElement> coeffs) : field_(f), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c = c.lifted(f);
    trim();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(Field f, const FieldElement& c) { return Polynomial(f, {c}); }

Polynomial Polynomial::linear(Field f, const FieldElement& r) { return Polynomial(f, {-r, FieldElement::one(f)}); }

Polynomial Polynomial::x(Field f) { return Polynomial(f, {FieldElement::zero(f), FieldElement::one(f)}); }

FieldElement Polynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : FieldElement::zero(field_);
}

FieldElement Polynomial::leading() const {
    if (coeffs_.empty()) return FieldElement::zero(field_);
    return coeffs_.back();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<FieldElement> c(std::max(coeffs_.size(), o.coeffs_.size()), FieldElement::zero(field_));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) c[k] += o.coeffs_[k];
    return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<FieldElement> c(std::max(coeffs_.size(), o.coeffs_.size()), FieldElement::zero(field_));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) c[k] -= o.coeffs_[k];
    return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial(field_, {});
    std::vector<FieldElement> c(coeffs_.size() + o.coeffs_.size() - 1, FieldElement::zero(field_));
    for (std::size_t a = 0; a < coeffs_.size(); ++a) {
        if (coeffs_[a].is_zero()) continue;
        for (std::size_t b = 0; b < o.coeffs_.size(); ++b) c[a + b] += coeffs_[a] * o.coeffs_[b];
    }
    return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::scaled(const FieldElement& s) const {
    std::vector<FieldElement> c = coeffs_;
    for (auto& x : c) x *= s;
    return Polynomial(field_, std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
    if (d.is_zero()) throw Error("polynomial division by zero");
    if (degree() < d.degree()) return {Polynomial(field_, {}), *this};
    std::vector<FieldElement> r = coeffs_;
    std::vector<FieldElement> q(coeffs_.size() - d.coeffs_.size() + 1, FieldElement::zero(field_));
    const FieldElement inv = d.leading().inverse();
    const std::size_t dd = d.coeffs_.size() - 1;
    for (std::size_t k = r.size(); k-- > dd;) {
        if (r[k].is_zero()) continue;
        const FieldElement t = r[k] * inv;
        q[k - dd] = t;
        for (std::size_t i = 0; i <= dd; ++i) r[k - dd + i] -= t * d.coeffs_[i];
    }
    return {Polynomial(field_, std::move(q)), Polynomial(field_, std::move(r))};
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial(field_, {});
    std::vector<FieldElement> c;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) c.push_back(coeffs_[k] * FieldElement(static_cast<long>(k)));
    return Polynomial(field_, std::move(c));
}

FieldElement Polynomial::operator()(const FieldElement& x) const {
    FieldElement acc = FieldElement::zero(field_);
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
}

Matrix Polynomial::operator()(const Matrix& m) const {
    Matrix acc(m.field(), m.rows(), m.cols());
    const Matrix id = Matrix::identity(m.field(), m.rows());
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * m + id.scaled(coeffs_[k]);
    return acc;
}

Polynomial Polynomial::conjugate() const {
    std::vector<FieldElement> c;
    for (const auto& x : coeffs_) c.push_back(x.conjugate());
    return Polynomial(field_, std::move(c));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
        if (!(a.coeffs_[k] == b.coeffs_[k])) return false;
    }
    return true;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string c = coeffs_[k].to_string();
        if (!coeffs_[k].is_rational()) c = "(" + c + ")";
        if (k == 0) {
            out += c;
        } else {
            if (!coeffs_[k].is_one()) out += c + "*";
            out += k == 1 ? "x" : "x^" + std::to_string(k);
        }
    }
    return out;
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.degree() <= 0) return p.monic();
    const Polynomial g = gcd(p, p.derivative());
    return p.divmod(g).first.monic();
}

Polynomial characteristic_polynomial(const Matrix& m) {
    if (!m.is_square()) throw DimensionMismatch("characteristic polynomial of a non-square matrix");
    const Field f = m.field();
    const std::size_t n = m.rows();
    Matrix h = m;
    // Similarity transform to upper Hessenberg form.
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t p = j + 1;
        while (p < n && h(p, j).is_zero()) ++p;
        if (p == n) continue;
        if (p != j + 1) {
            h.swap_rows(p, j + 1);
            for (std::size_t r = 0; r < n; ++r) std::swap(h(r, p), h(r, j + 1));
        }
        const FieldElement inv = h(j + 1, j).inverse();
        for (std::size_t k = j + 2; k < n; ++k) {
            if (h(k, j).is_zero()) continue;
            const FieldElement t = h(k, j) * inv;
            for (std::size_t c = 0; c < n; ++c) {
                if (!h(j + 1, c).is_zero()) h(k, c) -= t * h(j + 1, c);
            }
            for (std::size_t r = 0; r < n; ++r) {
                if (!h(r, k).is_zero()) h(r, j + 1) += t * h(r, k);
            }
        }
    }
    // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{m=i+1..k} h_{m,m-1}) p_{i-1}
    std::vector<Polynomial> ps;
    ps.push_back(Polynomial::constant(f, FieldElement::one(f)));
    for (std::size_t k = 0; k < n; ++k) {
        Polynomial pk = (Polynomial::x(f) - Polynomial::constant(f, h(k, k))) * ps[k];
        FieldElement prod = FieldElement::one(f);
        for (std::size_t i = k; i-- > 0;) {
            prod *= h(i + 1, i);
            if (prod.is_zero()) break;
            const FieldElement coef = h(i, k) * prod;
            if (!coef.is_zero()) pk = pk - ps[i].scaled(coef);
        }
        ps.push_back(std::move(pk));
    }
    return ps.back();
}

Polynomial minimal_polynomial(const Matrix& m) {
    if (!m.is_square()) throw DimensionMismatch("minimal polynomial of a non-square matrix");
    const Field f = m.field();
    const std::size_t n = m.rows();
    std::vector<Vector> powers;
    Matrix pw = Matrix::identity(f, n);
    for (std::size_t k = 0; k <= n; ++k) {
        const Vector v = pw.flatten();
        if (!powers.empty()) {
            const Matrix cols = Matrix::from_columns(f, n * n, powers);
            if (auto sol = solve_linear(cols, v)) {
                std::vector<FieldElement> c;
                for (auto& x : *sol) c.push_back(-x);
                c.push_back(FieldElement::one(f));
                return Polynomial(f, std::move(c));
            }
        } else if (n == 0) {
            break;
        }
        powers.push_back(v);
        pw = pw * m;
    }
    return Polynomial::constant(f, FieldElement::one(f));
}

// ---------------------------------------------------------------------------
// Root finding.

namespace {

using IntPoly = std::vector<Integer>;  // low degree first

Integer eval_int(const IntPoly& g, const Integer& t) {
    Integer acc = 0;
    for (std::size_t k = g.size(); k-- > 0;) acc = acc * t + g[k];
    return acc;
}

/// Monic rational polynomial of degree d -> integer monic g with g(Lx) = L^d p(x).
IntPoly integral_monic(const Polynomial& p, Integer& scale) {
    const std::size_t d = static_cast<std::size_t>(p.degree());
    Integer l = 1;
    for (const auto& c : p.coeffs()) {
        const Integer den = c.rational().get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    IntPoly g(d + 1);
    Integer lp = 1;  // L^{d-k}, built from the top
    for (std::size_t k = d + 1; k-- > 0;) {
        const Rational v = p.coeffs()[k].rational() * Rational(lp);
        g[k] = v.get_num();  // integral by choice of L
        lp *= l;
    }
    scale = l;
    return g;
}

int sign_at(const Polynomial& s, const Integer& t) {
    const FieldElement v = s(FieldElement(Rational(t)));
    return sgn(v.rational());
}

int variations(const std::vector<Polynomial>& sturm, const Integer& t) {
    int count = 0;
    int last = 0;
    for (const auto& s : sturm) {
        const int v = sign_at(s, t);
        if (v == 0) continue;
        if (last != 0 && v != last) ++count;
        last = v;
    }
    return count;
}

void isolate(const std::vector<Polynomial>& sturm, const IntPoly& g, const Integer& a, const Integer& b, int va,
             int vb, std::vector<Integer>& out) {
    if (va - vb <= 0) return;
    if (b - a == 1) {
        if (eval_int(g, b) == 0) out.push_back(b);
        return;
    }
    Integer mid = a + (b - a) / 2;
    const int vm = variations(sturm, mid);
    isolate(sturm, g, a, mid, va, vm, out);
    isolate(sturm, g, mid, b, vm, vb, out);
}

/// Integer roots of a squarefree monic integer polynomial with g(0) != 0.
std::vector<Integer> integer_roots(const IntPoly& g) {
    Field q = Field::rationals();
    std::vector<FieldElement> c;
    for (const auto& x : g) c.emplace_back(Rational(x));
    Polynomial s0(q, c);
    std::vector<Polynomial> sturm{s0, s0.derivative()};
    while (sturm.back().degree() > 0) {
        Polynomial r = sturm[sturm.size() - 2].divmod(sturm.back()).second;
        if (r.is_zero()) break;
        sturm.push_back(r.scaled(FieldElement(-1)));
    }
    Integer bound = 1;
    for (const auto& x : g) bound = std::max(bound, Integer(abs(x)));
    bound += 1;
    std::vector<Integer> out;
    const Integer lo = -bound;
    isolate(sturm, g, lo, bound, variations(sturm, lo), variations(sturm, bound), out);
    return out;
}

bool is_rational_square(const Rational& r, Rational& root) {
    if (sgn(r) < 0) return false;
    const Integer& n = r.get_num();
    const Integer& d = r.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    root = Rational(sn, sd);
    root.canonicalize();
    return true;
}

/// Distinct rational roots of a rational polynomial.
std::vector<Rational> rational_roots(const Polynomial& p) {
    std::vector<Rational> out;
    if (p.degree() <= 0) return out;
    Polynomial r = squarefree_part(p);
    if (r.coeff(0).is_zero()) {
        out.push_back(0);
        r = r.divmod(Polynomial::x(r.field())).first;
    }
    if (r.degree() >= 1) {
        Integer l;
        const IntPoly g = integral_monic(r, l);
        for (const auto& y : integer_roots(g)) out.push_back(Rational(y, l));
    }
    for (auto& x : out) x.canonicalize();
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Integer> signed_divisors(const Integer& n) {
    std::vector<Integer> divs{1};
    for (const auto& [p, e] : factor_integer(n)) {
        const std::size_t base = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    const std::size_t m = divs.size();
    for (std::size_t i = 0; i < m; ++i) divs.push_back(-divs[i]);
    return divs;
}

Polynomial from_rationals(const std::vector<Rational>& c) {
    std::vector<FieldElement> e;
    for (const auto& x : c) e.emplace_back(x);
    return Polynomial(Field::rationals(), std::move(e));
}

bool all_rational(const Polynomial& p) {
    return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const FieldElement& c) { return c.is_rational(); });
}

Polynomial to_rationals(const Polynomial& p) {
    std::vector<Rational> c;
    for (const auto& x : p.coeffs()) c.push_back(x.rational());
    return from_rationals(c);
}

}  // namespace

std::map<Integer, unsigned> factor_integer(Integer n) {
    std::map<Integer, unsigned> out;
    n = abs(n);
    if (n <= 1) return out;
    for (unsigned long p = 2; p <= 100000; ++p) {
        if (n == 1) break;
        const Integer pz = p;
        if (pz * pz > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[pz];
            n /= pz;
        }
    }
    if (n > 1) {
        if (n > Integer(100000) * Integer(100000) && mpz_probab_prime_p(n.get_mpz_t(), 40) == 0) {
            throw Unsupported("integer " + n.get_str() + " too large to factor for the quadratic-factor search");
        }
        ++out[n];
    }
    return out;
}

std::vector<Polynomial> rational_quadratic_factors(const Polynomial& p) {
    if (!all_rational(p)) throw Unsupported("quadratic factor search needs rational coefficients");
    std::vector<Polynomial> out;
    Polynomial r = squarefree_part(to_rationals(p));
    for (const auto& root : rational_roots(r)) r = r.divmod(Polynomial::linear(r.field(), FieldElement(root))).first;
    if (r.degree() < 2) return out;
    Integer l;
    const IntPoly g = integral_monic(r.monic(), l);
    // Kronecker: a monic integer quadratic factor q has q(t0) | g(t0), q(t0+1) | g(t0+1).
    Integer t0 = 0;
    Integer best = -1;
    for (long t = -8; t <= 8; ++t) {
        const Integer v = abs(eval_int(g, t)) * abs(eval_int(g, t + 1));
        if (best < 0 || v < best) {
            best = v;
            t0 = t;
        }
    }
    const Integer t1 = t0 + 1;
    const auto d0s = signed_divisors(eval_int(g, t0));
    const auto d1s = signed_divisors(eval_int(g, t1));
    const Polynomial gq = from_rationals(std::vector<Rational>(g.begin(), g.end()));
    for (const auto& d0 : d0s) {
        for (const auto& d1 : d1s) {
            const Integer s = d1 - d0 - (2 * t0 + 1);
            const Integer c = d0 - t0 * t0 - s * t0;
            Rational sq;
            if (is_rational_square(Rational(s * s - 4 * c), sq)) continue;
            const Polynomial q = from_rationals({Rational(c), Rational(s), Rational(1)});
            if (!gq.divmod(q).second.is_zero()) continue;
            // back to x: q(Lx)/L^2
            Rational cs(s, l), cc(c, l * l);
            cs.canonicalize();
            cc.canonicalize();
            Polynomial qx = from_rationals({cc, cs, Rational(1)});
            if (std::find(out.begin(), out.end(), qx) == out.end()) out.push_back(std::move(qx));
        }
    }
    std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
        for (std::size_t k = 0; k < 2; ++k) {
            if (auto c = compare(a.coeff(k), b.coeff(k)); c != 0) return c < 0;
        }
        return false;
    });
    return out;
}

std::vector<FieldElement> roots_in_field(const Polynomial& p) {
    const Field f = p.field();
    std::vector<FieldElement> out;
    if (p.degree() <= 0) return out;
    if (f.is_rationals()) {
        for (const auto& r : rational_roots(p)) out.emplace_back(r);
        return out;
    }
    if (f.degree() != 2) throw Unsupported("root finding over extensions of degree > 2");

    const Polynomial sf = squarefree_part(p);
    const Polynomial norm = all_rational(sf) ? to_rationals(sf) : to_rationals(sf * sf.conjugate());
    auto accept = [&](const FieldElement& r) {
        if (!sf(r).is_zero()) return;
        for (const auto& x : out) {
            if (x == r) return;
        }
        out.push_back(r);
    };
    for (const auto& r : rational_roots(norm)) accept(FieldElement(r).lifted(f));
    const Rational big_p = -f.minpoly()[1];
    const Rational big_q = -f.minpoly()[0];
    const Rational delta = big_p * big_p / 4 + big_q;  // (theta - P/2)^2
    const FieldElement sqrt_delta = FieldElement::generator(f) - FieldElement(Rational(big_p / 2));
    for (const auto& q : rational_quadratic_factors(norm)) {
        const Rational s = q.coeff(1).rational();
        const Rational c = q.coeff(0).rational();
        const Rational disc = s * s - 4 * c;
        Rational ratio_root;
        if (!is_rational_square(disc / delta, ratio_root)) continue;
        const FieldElement sq = sqrt_delta * FieldElement(ratio_root);
        const FieldElement half(Rational(1, 2));
        accept((FieldElement(Rational(-s)) + sq) * half);
        accept((FieldElement(Rational(-s)) - sq) * half);
    }
    std::sort(out.begin(), out.end(), [](const FieldElement& a, const FieldElement& b) { return compare(a, b) < 0; });
    return out;
}

}  // namespace lsup
