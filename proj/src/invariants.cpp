#include "lsup/invariants.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

#include "lsup/eigen.hpp"
#include "lsup/error.hpp"
#include "lsup/frattini.hpp"
#include "lsup/module.hpp"
#include "lsup/rootsys.hpp"
#include "lsup/structure.hpp"

namespace lsup {

namespace {

using Rng = std::mt19937_64;

/// Collects the first failure and counts checks.
struct Acc {
    bool ok = true;
    std::string first;
    std::size_t checks = 0;
    std::size_t skipped = 0;
    std::string note;

    void expect(bool cond, const std::string& what) {
        ++checks;
        if (!cond && ok) {
            ok = false;
            first = what;
        }
    }
    std::string detail() const {
        if (!ok) return first;
        std::string s = std::to_string(checks) + " checks";
        if (skipped) s += ", " + std::to_string(skipped) + " skipped";
        if (!note.empty()) s += "; " + note;
        return s;
    }
};

PropertyResult run(const std::string& module, const std::string& name, const std::function<void(Acc&)>& body) {
    PropertyResult r;
    r.module = module;
    r.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    Acc acc;
    try {
        body(acc);
        r.pass = acc.ok;
        r.detail = acc.detail();
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

Rational rand_rational(Rng& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

FieldElement rand_element(Rng& rng, Field f) {
    FieldElement::Coeffs c(f.degree(), Rational(0));
    for (auto& x : c) x = rand_rational(rng);
    return FieldElement(f, std::move(c));
}

/// Small, often sparse integer vector.
Vector rand_sparse_vector(Rng& rng, Field f, std::size_t n) {
    static const int pool[] = {-1, 0, 0, 0, 1, 1, 2};
    std::uniform_int_distribution<int> pick(0, 6);
    Vector v = zero_vector(f, n);
    for (auto& x : v) x = FieldElement(pool[pick(rng)]).lifted(f);
    return v;
}

Vector rand_vector(Rng& rng, Field f, std::size_t n) {
    Vector v = zero_vector(f, n);
    for (auto& x : v) x = rand_element(rng, f);
    return v;
}

Matrix rand_invertible(Rng& rng, Field f, std::size_t n) {
    while (true) {
        Matrix p(f, n, n);
        for (std::size_t i = 0; i < n; ++i) p.set_row(i, rand_sparse_vector(rng, f, n));
        if (p.rank() == n) return p;
    }
}

std::vector<const Fixture*> loaded(const std::vector<Fixture>& fixtures) {
    std::vector<const Fixture*> out;
    for (const auto& f : fixtures)
        if (f.algebra) out.push_back(&f);
    return out;
}

Vector embed(const Subspace& s, const Vector& coords) {
    Vector v = zero_vector(s.field(), s.ambient_dim());
    for (std::size_t k = 0; k < coords.size(); ++k) axpy(v, coords[k], s.basis_vector(k));
    return v;
}

Subspace embed(const Subspace& s, const Subspace& inner) {
    std::vector<Vector> vs;
    for (const auto& c : inner.basis_vectors()) vs.push_back(embed(s, c));
    return Subspace::span(s.field(), s.ambient_dim(), vs);
}

Subspace derived_term(const SeriesReport& sr, std::size_t k) {
    return sr.derived[std::min(k, sr.derived.size() - 1)];
}

Subspace lower_term(const SeriesReport& sr, std::size_t k) {
    return sr.lower_central[std::min(k, sr.lower_central.size() - 1)];
}

Verdict decide(const std::string& cls, const LieAlgebra& l, DecisionMode mode) {
    if (cls == "MD_MN") return decide_MD_MN(l, mode);
    if (cls == "MU") return decide_MU(l, mode);
    if (cls == "MA") return decide_MA(l, mode);
    return decide_MO(l);
}

bool check_A1_triple(const LieAlgebra& l, const std::vector<Vector>& u) {
    if (u.size() != 3) return false;
    return l.bracket(u[0], u[1]) == u[0] && l.bracket(u[0], u[2]) == u[1] && l.bracket(u[1], u[2]) == u[2];
}

bool flag_value(const StructuralFlags& f, const std::string& key, bool& out) {
    if (key == "solvable") out = f.solvable;
    else if (key == "nilpotent") out = f.nilpotent;
    else if (key == "completely_solvable") out = f.completely_solvable;
    else if (key == "metabelian") out = f.metabelian;
    else if (key == "supersolvable") out = f.supersolvable_basefield;
    else if (key == "semisimple") out = f.semisimple;
    else return false;
    return true;
}

std::vector<Field> test_fields() {
    return {Field::rationals(), Field::extension({1, 0, 1}, "i"), Field::extension({-2, 0, 0, 1}, "c")};
}

// ---------------------------------------------------------------- exact_linalg

void prop_field_arithmetic(Acc& acc) {
    Rng rng(11);
    for (Field f : test_fields()) {
        for (int t = 0; t < 1000; ++t) {
            const FieldElement a = rand_element(rng, f);
            const FieldElement b = rand_element(rng, f);
            acc.expect((a + b) - b == a, "(a+b)-b != a over " + f.to_string() + " for a = " + a.to_string());
            if (!a.is_zero()) {
                acc.expect(a * a.inverse() == FieldElement::one(f), "a * a^-1 != 1 for a = " + a.to_string());
            }
            acc.expect(a * (b + a) == a * b + a * a, "distributivity fails for a = " + a.to_string());
        }
    }
}

void prop_canonical_form(Acc& acc) {
    Rng rng(12);
    for (Field f : {Field::rationals(), Field::extension({1, 0, 1}, "i")}) {
        for (int t = 0; t < 60; ++t) {
            const std::size_t n = 2 + t % 5;
            const std::size_t k = 1 + t % n;
            std::vector<Vector> gens;
            for (std::size_t i = 0; i < k; ++i) gens.push_back(rand_vector(rng, f, n));
            const Subspace a = Subspace::span(f, n, gens);
            // a different generating set of the same space
            std::vector<Vector> other;
            for (std::size_t i = 0; i < k + 2; ++i) {
                Vector v = zero_vector(f, n);
                for (const auto& g : gens) axpy(v, rand_element(rng, f), g);
                other.push_back(v);
            }
            other.insert(other.end(), gens.begin(), gens.end());
            std::shuffle(other.begin(), other.end(), rng);
            const Subspace b = Subspace::span(f, n, other);
            acc.expect(a == b && a.to_string() == b.to_string(), "equal spans with different bases: " + a.to_string());
        }
    }
}

void prop_grassmann(Acc& acc) {
    Rng rng(13);
    for (Field f : {Field::rationals(), Field::extension({1, 0, 1}, "i")}) {
        for (int t = 0; t < 100; ++t) {
            const std::size_t n = 2 + t % 6;
            std::uniform_int_distribution<std::size_t> kd(0, n);
            std::vector<Vector> ga;
            std::vector<Vector> gb;
            const std::size_t ka = kd(rng);
            const std::size_t kb = kd(rng);
            for (std::size_t i = 0; i < ka; ++i) ga.push_back(rand_sparse_vector(rng, f, n));
            for (std::size_t i = 0; i < kb; ++i) gb.push_back(rand_sparse_vector(rng, f, n));
            const Subspace a = Subspace::span(f, n, ga);
            const Subspace b = Subspace::span(f, n, gb);
            const Subspace s = subspace_sum(a, b);
            const Subspace m = subspace_intersect(a, b);
            acc.expect(s.dim() + m.dim() == a.dim() + b.dim(), "Grassmann identity fails for " + a.to_string() +
                                                                     " and " + b.to_string());
            acc.expect(s.contains(a) && s.contains(b) && a.contains(m) && b.contains(m), "sum/intersection containment");
        }
    }
}

void prop_eigenpairs(Acc& acc, const std::vector<const Fixture*>& fx) {
    auto check = [&](const Matrix& m, const std::string& where) {
        for (const auto& ep : rational_eigendata(m)) {
            acc.expect(ep.space.dim() > 0, "empty eigenspace in " + where);
            for (const auto& v : ep.space.basis_vectors()) {
                acc.expect(m.apply(v) == scale(ep.value, v), "M v != lambda v in " + where);
            }
        }
    };
    for (const Fixture* f : fx) {
        const LieAlgebra& l = *f->algebra;
        for (std::size_t i = 0; i < l.dim(); ++i) check(l.ad_basis(i), f->name + " ad b" + std::to_string(i + 1));
    }
    Rng rng(14);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 2 + t % 5;
        const Field q = Field::rationals();
        // upper triangular with a repeated diagonal entry, conjugated by a random matrix
        Matrix tri(q, n, n);
        for (std::size_t i = 0; i < n; ++i) {
            Vector row = zero_vector(q, n);
            row[i] = FieldElement(static_cast<long>(i % 3) - 1);
            for (std::size_t j = i + 1; j < n; ++j) row[j] = FieldElement(rand_rational(rng));
            tri.set_row(i, row);
        }
        const Matrix p = rand_invertible(rng, q, n);
        const Matrix pinv = [&] {
            Matrix out(q, n, n);
            for (std::size_t c = 0; c < n; ++c) out.set_column(c, *solve_linear(p, unit_vector(q, n, c)));
            return out;
        }();
        check(p * tri * pinv, "random conjugate " + std::to_string(t));
    }
}

// ---------------------------------------------------------------- lie_core

void prop_jacobi(Acc& acc, const std::vector<Fixture>& fixtures) {
    for (const auto& f : fixtures) {
        if (f.expects_load_error()) {
            acc.expect(!f.algebra && f.load_error.find("Jacobi") != std::string::npos,
                       f.name + ": expected a Jacobi load failure, got '" + f.load_error + "'");
            continue;
        }
        acc.expect(f.algebra.has_value(), f.name + ": load failed: " + f.load_error);
        if (!f.algebra) continue;
        acc.expect(!find_jacobi_violation_serial(*f.algebra), f.name + ": serial Jacobi scan found a residual");
        acc.expect(!find_jacobi_violation_parallel(*f.algebra), f.name + ": parallel Jacobi scan found a residual");
    }
}

void prop_killing_kernels(Acc& acc, const std::vector<const Fixture*>& fx) {
    for (const Fixture* f : fx) {
        acc.expect(killing_form_serial(*f->algebra) == killing_form_parallel(*f->algebra),
                   f->name + ": serial and parallel Killing forms differ");
    }
}

void prop_radical_nilradical(Acc& acc, const std::vector<const Fixture*>& fx) {
    for (const Fixture* f : fx) {
        const LieAlgebra& l = *f->algebra;
        const Subspace r = radical(l);
        const Subspace n = nilradical(l);
        const Subspace z = center(l);
        const Subspace a = asoc(l);
        const std::string& nm = f->name;
        acc.expect(is_ideal(l, r) && is_solvable_subalgebra(l, r), nm + ": radical is not a solvable ideal");
        acc.expect(is_ideal(l, n) && is_nilpotent_subalgebra(l, n), nm + ": nilradical is not a nilpotent ideal");
        acc.expect(r.contains(n), nm + ": nilradical not inside radical");
        acc.expect(n.contains(product_space(l, full_space(l), r)), nm + ": [L, R] not inside N");
        acc.expect(n.contains(z), nm + ": center not inside N");
        acc.expect(subspace_intersect(centralizer(l, n), n).contains(a), nm + ": asoc not inside Z(N)");
        // maximality: the preimage of N(L/N) is a nilpotent ideal only if it is N itself
        const QuotientMap q = quotient(l, n);
        const Subspace p = q.preimage(nilradical(q.algebra));
        acc.expect(is_ideal(l, p) && p.contains(n), nm + ": preimage of N(L/N) is not an ideal over N");
        acc.expect(p == n || !is_nilpotent_subalgebra(l, p), nm + ": nilradical is not maximal");
        // idempotence of the construction
        acc.expect(nilradical(l) == n && radical(l) == r, nm + ": repeated computation differs");
    }
}

void prop_quotient_series(Acc& acc, const std::vector<const Fixture*>& fx) {
    for (const Fixture* f : fx) {
        const LieAlgebra& l = *f->algebra;
        if (!is_nilpotent(l)) continue;
        const QuotientMap q = quotient(l, center(l));
        const SeriesReport sl = series(l);
        const SeriesReport sq = series(q.algebra);
        const std::size_t len = std::max({sl.derived.size(), sq.derived.size(), sl.lower_central.size(),
                                          sq.lower_central.size()});
        for (std::size_t k = 0; k < len; ++k) {
            acc.expect(q.image(derived_term(sl, k)) == derived_term(sq, k),
                       f->name + ": derived term " + std::to_string(k) + " does not commute with L/Z");
            acc.expect(q.image(lower_term(sl, k)) == lower_term(sq, k),
                       f->name + ": lower central term " + std::to_string(k) + " does not commute with L/Z");
        }
    }
}

void prop_extension_dims(Acc& acc, const std::vector<const Fixture*>& fx) {
    const Field qi = Field::extension({1, 0, 1}, "i");
    for (const Fixture* f : fx) {
        const LieAlgebra& l = *f->algebra;
        if (!l.field().is_rationals()) continue;
        const LieAlgebra e = extend_scalars(l, qi);
        acc.expect(derived_algebra(l).dim() == derived_algebra(e).dim(), f->name + ": dim L^2 changes over Q(i)");
        acc.expect(radical(l).dim() == radical(e).dim(), f->name + ": dim R changes over Q(i)");
        acc.expect(nilradical(l).dim() == nilradical(e).dim(), f->name + ": dim N changes over Q(i)");
        acc.expect(center(l).dim() == center(e).dim(), f->name + ": dim Z changes over Q(i)");
        acc.expect(is_solvable(l) == is_solvable(e) && is_nilpotent(l) == is_nilpotent(e),
                   f->name + ": solvability or nilpotency changes over Q(i)");
    }
}

// ---------------------------------------------------------------- frattini

void prop_complements(Acc& acc, const std::vector<const Fixture*>& fx) {
    for (const Fixture* f : fx) {
        const LieAlgebra& l = *f->algebra;
        std::vector<Subspace> ideals = minimal_abelian_ideals(l);
        ideals.push_back(asoc(l));
        for (const auto& a : ideals) {
            if (a.dim() == 0) continue;
            const auto u = has_complement(l, a);
            if (!u) continue;
            acc.expect(is_subalgebra(l, *u), f->name + ": complement of " + a.to_string() + " is not a subalgebra");
            acc.expect(subspace_intersect(*u, a).dim() == 0, f->name + ": complement meets " + a.to_string());
            acc.expect(subspace_sum(*u, a).dim() == l.dim(), f->name + ": complement plus " + a.to_string() + " != L");
        }
    }
}

void prop_phi(Acc& acc, const std::vector<const Fixture*>& fx) {
    for (const Fixture* f : fx) {
        const LieAlgebra& l = *f->algebra;
        if (!is_solvable(l)) continue;
        const FrattiniReport rep = frattini_ideal(l);
        const Subspace& phi = rep.phi;
        acc.expect(is_ideal(l, phi), f->name + ": phi is not an ideal");
        acc.expect(derived_algebra(l).contains(phi), f->name + ": phi not inside L^2");
        acc.expect(nilradical(l).contains(phi), f->name + ": phi not inside N");
        acc.expect(rep.is_phi_free == (phi.dim() == 0), f->name + ": phi-free flag disagrees with phi");
        acc.expect(is_phi_free(l) == (phi.dim() == 0), f->name + ": complement test disagrees with phi");
        const QuotientMap q = quotient(l, phi);
        acc.expect(frattini_ideal(q.algebra).phi.dim() == 0, f->name + ": phi(L/phi(L)) != 0");
    }
}

void prop_lemma26(Acc& acc, const std::vector<const Fixture*>& fx) {
    for (const Fixture* f : fx) {
        const LieAlgebra& l = *f->algebra;
        if (!f->meta.contains("maximal_subalgebras")) continue;
        for (const auto& ms : f->meta.at("maximal_subalgebras")) {
            if (!ms.contains("supplement")) continue;
            const std::string where = f->name + "/" + ms.at("name").get<std::string>();
            const Subspace m = meta_subspace(l, ms.at("basis"));
            const Subspace w = meta_subspace(l, ms.contains("W") ? ms.at("W") : ms.at("supplement"));
            acc.expect(is_subalgebra(l, m) && m.dim() < l.dim(), where + ": M is not a proper subalgebra");
            acc.expect(is_subalgebra(l, w), where + ": W is not a subalgebra");
            acc.expect(subspace_sum(m, w).dim() == l.dim(), where + ": M + W != L");
            FrattiniReport pl;
            FrattiniReport pw;
            try {
                pl = frattini_ideal(l);
                pw = frattini_ideal(subalgebra_algebra(l, w));
            } catch (const NotSolvable&) {
                ++acc.skipped;
                continue;
            } catch (const Unsupported&) {
                ++acc.skipped;
                continue;
            }
            const Subspace phi_w = embed(w, pw.phi);
            acc.expect(phi_w.contains(subspace_intersect(pl.phi, w)), where + ": phi(L) meet W not inside phi(W)");
        }
    }
}

// ---------------------------------------------------------------- classify

void prop_flag_implications(Acc& acc, const std::vector<const Fixture*>& fx) {
    for (const Fixture* f : fx) {
        const StructuralFlags s = structural_flags(*f->algebra);
        const std::string& nm = f->name;
        acc.expect(!s.nilpotent || s.supersolvable_basefield, nm + ": nilpotent but not supersolvable");
        acc.expect(!s.nilpotent || s.completely_solvable, nm + ": nilpotent but not completely solvable");
        acc.expect(!s.supersolvable_basefield || s.solvable, nm + ": supersolvable but not solvable");
        acc.expect(!s.completely_solvable || s.solvable, nm + ": completely solvable but not solvable");
        acc.expect(!s.metabelian || s.solvable, nm + ": metabelian but not solvable");
        acc.expect(!(s.semisimple && s.solvable) || f->algebra->dim() == 0, nm + ": semisimple and solvable");
    }
}

void prop_inclusions(Acc& acc, const std::vector<const Fixture*>& fx) {
    using V = VerdictValue;
    for (const Fixture* f : fx) {
        const LieAlgebra& l = *f->algebra;
        const Verdict mo = decide_MO(l);
        for (DecisionMode mode : {DecisionMode::Closure, DecisionMode::Base}) {
            const std::string where = f->name + " (" + to_string(mode) + ")";
            const Verdict md = decide_MD_MN(l, mode);
            const Verdict mu = decide_MU(l, mode);
            const Verdict ma = decide_MA(l, mode);
            if (mo.value == V::Yes) {
                acc.expect(ma.value != V::No && md.value == V::Yes, where + ": MO = Yes but MA = No or MD != Yes");
            }
            if (ma.value == V::Yes) acc.expect(md.value == V::Yes, where + ": MA = Yes but MD != Yes");
            if (mu.value == V::Yes) acc.expect(md.value == V::Yes, where + ": MU = Yes but MD != Yes");
            for (const Verdict* v : {&md, &mu, &ma}) {
                acc.expect((v->value == V::Unknown) == v->rule.empty(), where + ": rule presence mismatch for " + v->cls);
                acc.expect(v->mode == mode, where + ": verdict mode mismatch for " + v->cls);
            }
        }
    }
}

void prop_witnesses(Acc& acc, const std::vector<const Fixture*>& fx) {
    for (const Fixture* f : fx) {
        const LieAlgebra& l = *f->algebra;
        const Verdict mo = decide_MO(l);
        if (mo.value == VerdictValue::Yes && mo.witness && !mo.witness_basis.empty()) {
            acc.expect(is_ideal(l, *mo.witness), f->name + ": MO witness is not an ideal");
            acc.expect(check_A1_triple(l, mo.witness_basis), f->name + ": MO witness basis fails the A1 brackets");
        }
        if (!f->meta.contains("maximal_subalgebras")) continue;
        for (const auto& ms : f->meta.at("maximal_subalgebras")) {
            const std::string where = f->name + "/" + ms.at("name").get<std::string>();
            const Subspace m = meta_subspace(l, ms.at("basis"));
            const auto u = find_abelian_supplement(l, m);
            if (u) {
                acc.expect(is_subalgebra(l, *u) && is_abelian(l, *u), where + ": supplement is not an abelian subalgebra");
                acc.expect(subspace_sum(m, *u).dim() == l.dim(), where + ": M + U != L");
            }
            if (ms.contains("abelian_supplement_exists") && !ms.at("abelian_supplement_exists").get<bool>()) {
                // documented non-existence: the search must not contradict it
                acc.expect(!u, where + ": found an abelian supplement where none is documented");
            }
        }
    }
}

void prop_prop23(Acc& acc, const std::vector<const Fixture*>& fx) {
    for (const Fixture* f : fx) {
        const StructuralFlags s = structural_flags(*f->algebra);
        if (!s.completely_solvable || s.nilpotent) continue;
        for (DecisionMode mode : {DecisionMode::Closure, DecisionMode::Base}) {
            acc.expect(decide_MU(*f->algebra, mode).value == VerdictValue::No,
                       f->name + ": completely solvable, not nilpotent, but MU != No (" + to_string(mode) + ")");
        }
    }
}

void prop_split_invariance(Acc& acc, const std::vector<const Fixture*>& fx) {
    Rng rng(15);
    for (const Fixture* f : fx) {
        const LieAlgebra& l = *f->algebra;
        const bool base = is_split_A1(l);
        for (int t = 0; t < 5; ++t) {
            const LieAlgebra c = change_basis(l, rand_invertible(rng, l.field(), l.dim()));
            acc.expect(is_split_A1(c) == base, f->name + ": split-A1 changes under a basis change");
        }
    }
}

void prop_expected(Acc& acc, const std::vector<const Fixture*>& fx) {
    for (const Fixture* f : fx) {
        if (!f->meta.contains("expected")) continue;
        const Json& ex = f->meta.at("expected");
        const LieAlgebra& l = *f->algebra;
        const std::string& nm = f->name;
        if (ex.contains("flags")) {
            const StructuralFlags s = structural_flags(l);
            for (const auto& [key, val] : ex.at("flags").items()) {
                bool got = false;
                acc.expect(flag_value(s, key, got), nm + ": unknown flag " + key);
                acc.expect(got == val.get<bool>(), nm + ": flag " + key + " is " + (got ? "true" : "false"));
            }
        }
        auto dim_is = [&](const char* key, std::size_t got) {
            if (ex.contains(key)) {
                acc.expect(ex.at(key).get<std::size_t>() == got, nm + ": " + key + " dim is " + std::to_string(got));
            }
        };
        dim_is("radical", radical(l).dim());
        dim_is("nilradical", nilradical(l).dim());
        dim_is("asoc", asoc(l).dim());
        if (ex.contains("phi")) dim_is("phi", frattini_ideal(l).phi.dim());
        if (ex.contains("split_A1")) acc.expect(is_split_A1(l) == ex.at("split_A1").get<bool>(), nm + ": split_A1");
        if (ex.contains("quotient_split_A1")) {
            acc.expect(is_split_A1(quotient(l, radical(l)).algebra) == ex.at("quotient_split_A1").get<bool>(),
                       nm + ": quotient_split_A1");
        }
        for (const auto& [mode_name, mode] :
             {std::pair<const char*, DecisionMode>{"closure", DecisionMode::Closure}, {"base", DecisionMode::Base}}) {
            if (!ex.contains(mode_name)) continue;
            for (const auto& [cls, val] : ex.at(mode_name).items()) {
                const Verdict v = decide(cls, l, mode);
                acc.expect(to_string(v.value) == val.get<std::string>(),
                           nm + ": " + cls + " (" + mode_name + ") is " + to_string(v.value));
            }
        }
        if (f->meta.contains("chevalley")) {
            const Json& ch = f->meta.at("chevalley");
            const RootSystem rs =
                build_root_system(parse_root_type(ch.at("type").get<std::string>()), ch.at("rank").get<std::size_t>());
            acc.expect(algebra_to_json(chevalley_constants(rs)) == algebra_to_json(l),
                       nm + ": stored constants differ from the generator");
        }
    }
}

// ---------------------------------------------------------------- rootsys

std::vector<std::pair<RootType, std::size_t>> all_types(std::size_t max_rank) {
    std::vector<std::pair<RootType, std::size_t>> out;
    for (RootType t : {RootType::A, RootType::B, RootType::C, RootType::D}) {
        const std::size_t lo = t == RootType::A ? 1 : (t == RootType::D ? 3 : 2);
        for (std::size_t r = lo; r <= max_rank; ++r) out.emplace_back(t, r);
    }
    for (std::size_t r : {6, 7, 8})
        if (r <= max_rank) out.emplace_back(RootType::E, r);
    if (max_rank >= 4) out.emplace_back(RootType::F, 4);
    out.emplace_back(RootType::G, 2);
    return out;
}

void prop_root_counts(Acc& acc) {
    for (const auto& [t, r] : all_types(8)) {
        const RootSystem rs = build_root_system(t, r);
        const std::size_t dim = simple_lie_dimension(t, r);
        acc.expect(rs.positive_roots.size() == (dim - r) / 2, rs.name() + ": |positive roots| != (dim - rank)/2");
        acc.expect(rs.roots.size() == 2 * rs.positive_roots.size(), rs.name() + ": roots are not +/- positive roots");
        acc.expect(rs.lie_dim() == dim, rs.name() + ": rank + |roots| != dim");
    }
}

void prop_table1_forms(Acc& acc) {
    for (const auto& row : table1(4)) {
        const std::string where = row.family + (row.n ? " n=" + std::to_string(row.n) : "") + " (" + row.algebra + ")";
        acc.expect(row.dims_match, where + ": dim L " + std::to_string(row.L_dim) + " vs table " +
                                       std::to_string(row.table_L_dim));
        acc.expect(row.gamma_match, where + ": gamma " + std::to_string(row.gamma) + " vs table " +
                                        std::to_string(row.table_gamma));
    }
}

void prop_chevalley_small(Acc& acc) {
    for (const auto& [t, r] : all_types(4)) {
        const RootSystem rs = build_root_system(t, r);
        const LieAlgebra l = chevalley_constants(rs);
        acc.expect(!find_jacobi_violation_parallel(l), rs.name() + ": Jacobi residual");
        acc.expect(l.dim() == rs.rank + rs.roots.size(), rs.name() + ": dim != rank + |roots|");
        acc.expect(radical(l).dim() == 0, rs.name() + ": radical != 0");
    }
}

void prop_borel(Acc& acc) {
    for (const auto& [t, r] : all_types(8)) {
        if (r < 2) continue;
        const RootSystem rs = build_root_system(t, r);
        std::vector<std::size_t> all(r);
        for (std::size_t i = 0; i < r; ++i) all[i] = i + 1;
        acc.expect(!nilradical_abelian(parabolic(rs, all)), rs.name() + ": Borel nilradical is abelian");
    }
}

void prop_parabolics(Acc& acc) {
    for (const auto& [t, r] : all_types(8)) {
        acc.expect(classify_abelian_parabolics(t, r) == expected_abelian_parabolics(t, r),
                   type_name(t, r) + ": abelian maximal parabolics differ from the known list");
    }
}

void prop_node_removal(Acc& acc) {
    for (const auto& [t, r] : all_types(8)) {
        const RootSystem rs = build_root_system(t, r);
        for (std::size_t node = 0; node <= r; ++node) {
            const NodeRemoval nr = remove_node(rs, node);
            // mark of the node in the highest root; the lowest-root node has mark 1
            const int mark = node == 0 ? 1 : rs.highest_root[node - 1];
            const std::size_t sub = nr.dim + nr.torus_dim;
            const std::string where = rs.name() + " node " + std::to_string(node) + " (mark " + std::to_string(mark) + ")";
            acc.expect(sub <= rs.lie_dim(), where + ": larger than L");
            acc.expect((sub == rs.lie_dim()) == (mark == 1), where + ": proper iff mark > 1 fails");
        }
    }
}

}  // namespace

Subspace generated_subalgebra(const LieAlgebra& l, const std::vector<Vector>& gens) {
    Subspace s = Subspace::span(l.field(), l.dim(), gens);
    while (true) {
        const Subspace next = subspace_sum(s, product_space(l, s, s));
        if (next.dim() == s.dim()) return s;
        s = next;
    }
}

PropertyResult lemma24_suite(const std::vector<Fixture>& fixtures, std::size_t pairs) {
    std::vector<const Fixture*> pool;
    for (const auto& f : fixtures)
        if (f.algebra && f.algebra->field().is_rationals() && f.algebra->dim() >= 2 && !f.algebra->is_abelian())
            pool.push_back(&f);
    return run("lie_core", "A = A1 + A2 over Q iff over Q(i)", [&](Acc& acc) {
        if (pool.empty()) throw Error("no rational nonabelian fixtures");
        const Field qi = Field::extension({1, 0, 1}, "i");
        Rng rng(24);
        std::size_t holds = 0;
        for (std::size_t t = 0; t < pairs; ++t) {
            const Fixture* f = pool[t % pool.size()];
            const LieAlgebra& l = *f->algebra;
            const LieAlgebra le = extend_scalars(l, qi);
            std::vector<Vector> g1{rand_sparse_vector(rng, l.field(), l.dim())};
            std::vector<Vector> g2{rand_sparse_vector(rng, l.field(), l.dim())};
            if (t % 3 == 2) g2.push_back(rand_sparse_vector(rng, l.field(), l.dim()));
            const Subspace a1 = generated_subalgebra(l, g1);
            const Subspace a2 = generated_subalgebra(l, g2);
            std::vector<Vector> both = g1;
            both.insert(both.end(), g2.begin(), g2.end());
            const Subspace a = generated_subalgebra(l, both);
            const bool over_q = subspace_sum(a1, a2).dim() == a.dim();

            auto lift_all = [&](const std::vector<Vector>& vs) {
                std::vector<Vector> out;
                for (const auto& v : vs) {
                    Vector w;
                    for (const auto& x : v) w.push_back(x.lifted(qi));
                    out.push_back(w);
                }
                return out;
            };
            const Subspace e1 = generated_subalgebra(le, lift_all(g1));
            const Subspace e2 = generated_subalgebra(le, lift_all(g2));
            const Subspace e = generated_subalgebra(le, lift_all(both));
            const bool over_qi = subspace_sum(e1, e2).dim() == e.dim();
            const std::string where = f->name + " pair " + std::to_string(t);
            acc.expect(!over_q || over_qi, where + ": decomposition over Q but not over Q(i)");
            acc.expect(!over_qi || over_q, where + ": decomposition over Q(i) but not over Q");
            acc.expect(a1.dim() == e1.dim() && a2.dim() == e2.dim() && a.dim() == e.dim(),
                       where + ": generated dimensions change over Q(i)");
            if (over_q) ++holds;
        }
        acc.note = std::to_string(pairs) + " pairs, decomposition holds for " + std::to_string(holds);
    });
}

PropertyResult saturation_suite(const std::vector<Fixture>& fixtures) {
    return run("classify", "decide_X(L) = decide_X(L/phi(L)) on solvable fixtures", [&](Acc& acc) {
        std::size_t used = 0;
        for (const auto& f : fixtures) {
            if (!f.algebra || !is_solvable(*f.algebra)) continue;
            ++used;
            const LieAlgebra& l = *f.algebra;
            const LieAlgebra q = quotient(l, frattini_ideal(l).phi).algebra;
            for (DecisionMode mode : {DecisionMode::Closure, DecisionMode::Base}) {
                for (const char* cls : {"MD_MN", "MU"}) {
                    acc.expect(decide(cls, l, mode).value == decide(cls, q, mode).value,
                               f.name + ": " + cls + " (" + to_string(mode) + ") differs on L/phi(L)");
                }
            }
            acc.expect(decide_MO(l).value == decide_MO(q).value, f.name + ": MO differs on L/phi(L)");
        }
        if (used == 0) throw Error("no solvable fixtures");
    });
}

std::vector<PropertyResult> run_invariants(const std::vector<Fixture>& fixtures) {
    const std::vector<const Fixture*> fx = loaded(fixtures);
    std::vector<PropertyResult> out;
    out.push_back(run("exact_linalg", "field arithmetic is exact", prop_field_arithmetic));
    out.push_back(run("exact_linalg", "equal subspaces have identical canonical bases", prop_canonical_form));
    out.push_back(run("exact_linalg", "dim(A+B) + dim(A meet B) = dim A + dim B", prop_grassmann));
    out.push_back(run("exact_linalg", "rational eigenpairs satisfy M v = lambda v",
                      [&](Acc& a) { prop_eigenpairs(a, fx); }));
    out.push_back(run("lie_core", "Jacobi residual is zero; broken input rejected at load",
                      [&](Acc& a) { prop_jacobi(a, fixtures); }));
    out.push_back(run("lie_core", "serial and parallel Killing forms agree",
                      [&](Acc& a) { prop_killing_kernels(a, fx); }));
    out.push_back(run("lie_core", "radical, nilradical, center and asoc relations",
                      [&](Acc& a) { prop_radical_nilradical(a, fx); }));
    out.push_back(run("lie_core", "series commute with L -> L/Z on nilpotent fixtures",
                      [&](Acc& a) { prop_quotient_series(a, fx); }));
    out.push_back(run("lie_core", "structural dimensions unchanged over Q(i)",
                      [&](Acc& a) { prop_extension_dims(a, fx); }));
    out.push_back(lemma24_suite(fixtures, 20));
    out.push_back(run("frattini", "complements of abelian ideals verify", [&](Acc& a) { prop_complements(a, fx); }));
    out.push_back(run("frattini", "phi is an ideal inside L^2 and N; phi(L/phi) = 0", [&](Acc& a) { prop_phi(a, fx); }));
    out.push_back(run("frattini", "phi(L) meet W inside phi(W) for curated supplements",
                      [&](Acc& a) { prop_lemma26(a, fx); }));
    out.push_back(run("classify", "flag implications", [&](Acc& a) { prop_flag_implications(a, fx); }));
    out.push_back(run("classify", "class inclusions are respected", [&](Acc& a) { prop_inclusions(a, fx); }));
    out.push_back(saturation_suite(fixtures));
    out.push_back(run("classify", "witnesses verify", [&](Acc& a) { prop_witnesses(a, fx); }));
    out.push_back(run("classify", "completely solvable, not nilpotent => MU = No", [&](Acc& a) { prop_prop23(a, fx); }));
    out.push_back(run("classify", "split-A1 invariant under basis change",
                      [&](Acc& a) { prop_split_invariance(a, fx); }));
    out.push_back(run("classify", "fixture metadata matches", [&](Acc& a) { prop_expected(a, fx); }));
    out.push_back(run("rootsys", "|positive roots| = (dim - rank)/2", prop_root_counts));
    out.push_back(run("rootsys", "Table 1 closed forms for dim L and gamma", prop_table1_forms));
    out.push_back(run("rootsys", "Chevalley constants: Jacobi, dimension, radical 0", prop_chevalley_small));
    out.push_back(run("rootsys", "Borel nilradical is never abelian for rank >= 2", prop_borel));
    out.push_back(run("rootsys", "abelian maximal parabolics match the known list", prop_parabolics));
    out.push_back(run("rootsys", "node removal is proper exactly at marks > 1", prop_node_removal));
    return out;
}

}  // namespace lsup
