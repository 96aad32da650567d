#include "lsup/field.hpp"

#include <deque>
#include <mutex>
#include <sstream>

#include "lsup/error.hpp"

namespace lsup {

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char ch : text) {
        if (ch != ' ' && ch != '\t') s.push_back(ch);
    }
    if (s.empty()) throw ParseError("empty rational literal");
    if (s.front() == '+') s.erase(s.begin());
    const auto valid = [](const std::string& part) {
        std::size_t start = (!part.empty() && part.front() == '-') ? 1 : 0;
        if (start == part.size()) return false;
        for (std::size_t k = start; k < part.size(); ++k) {
            if (part[k] < '0' || part[k] > '9') return false;
        }
        return true;
    };
    const auto slash = s.find('/');
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid(num) || !valid(den) || den.front() == '-') {
        throw ParseError("malformed rational literal '" + text + "'");
    }
    Rational r;
    r.get_num() = Integer(num);
    r.get_den() = Integer(den);
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace detail {
struct FieldData {
    std::vector<Rational> minpoly;
    std::string name;
};
}  // namespace detail

namespace {

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

std::deque<detail::FieldData>& registry() {
    static std::deque<detail::FieldData> r;
    return r;
}

const std::string& rationals_name() {
    static const std::string n = "Q";
    return n;
}

}  // namespace

Field Field::extension(std::vector<Rational> minpoly, std::string generator_name) {
    for (auto& c : minpoly) c.canonicalize();
    if (minpoly.size() < 3) throw Error("extension minimal polynomial must have degree >= 2");
    if (minpoly.back() != 1) throw Error("extension minimal polynomial must be monic");
    if (generator_name.empty()) {
        generator_name = (minpoly.size() == 3 && minpoly[0] == 1 && minpoly[1] == 0) ? "i" : "t";
    }
    std::lock_guard lock(registry_mutex());
    for (const auto& d : registry()) {
        if (d.minpoly == minpoly) return Field(&d);
    }
    registry().push_back({std::move(minpoly), std::move(generator_name)});
    return Field(&registry().back());
}

std::size_t Field::degree() const noexcept { return data_ == nullptr ? 1 : data_->minpoly.size() - 1; }

std::span<const Rational> Field::minpoly() const noexcept {
    if (data_ == nullptr) return {};
    return data_->minpoly;
}

const std::string& Field::generator_name() const noexcept {
    return data_ == nullptr ? rationals_name() : data_->name;
}

std::string Field::to_string() const {
    if (is_rationals()) return "Q";
    std::ostringstream os;
    os << "Q(" << data_->name << "), " << data_->name << " root of [";
    for (std::size_t k = 0; k < data_->minpoly.size(); ++k) {
        if (k) os << ", ";
        os << format_rational(data_->minpoly[k]);
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(Field f, Coeffs coeffs) : field_(f), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != f.degree()) {
        throw DimensionMismatch("field element has " + std::to_string(coeffs_.size()) +
                                " coordinates, field degree is " + std::to_string(f.degree()));
    }
}

FieldElement FieldElement::zero(Field f) { return FieldElement(f, Coeffs(f.degree())); }

FieldElement FieldElement::one(Field f) {
    Coeffs c(f.degree());
    c[0] = 1;
    return FieldElement(f, std::move(c));
}

FieldElement FieldElement::generator(Field f) {
    if (f.is_rationals()) throw Error("Q has no generator");
    Coeffs c(f.degree());
    c[1] = 1;
    return FieldElement(f, std::move(c));
}

const Rational& FieldElement::coeff(std::size_t k) const {
    static const Rational zero_q(0);
    return k < coeffs_.size() ? coeffs_[k] : zero_q;
}

bool FieldElement::is_zero() const noexcept {
    for (const auto& c : coeffs_) {
        if (sgn(c) != 0) return false;
    }
    return true;
}

bool FieldElement::is_one() const noexcept {
    if (coeffs_[0] != 1) return false;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        if (sgn(coeffs_[k]) != 0) return false;
    }
    return true;
}

bool FieldElement::is_rational() const noexcept {
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        if (sgn(coeffs_[k]) != 0) return false;
    }
    return true;
}

const Rational& FieldElement::rational() const {
    if (!is_rational()) throw Error("field element " + to_string() + " is not rational");
    return coeffs_[0];
}

Field FieldElement::common_field(const FieldElement& a, const FieldElement& b) {
    if (a.field_ == b.field_) return a.field_;
    if (a.field_.is_rationals()) return b.field_;
    if (b.field_.is_rationals()) return a.field_;
    throw FieldMismatch("arithmetic between " + a.field_.to_string() + " and " + b.field_.to_string());
}

void FieldElement::promote_to(Field f) {
    if (field_ == f) return;
    if (!field_.is_rationals()) throw FieldMismatch("cannot move " + field_.to_string() + " into " + f.to_string());
    coeffs_.resize(f.degree());
    field_ = f;
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    if (field_ == o.field_) {
        for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        return *this;
    }
    const Field f = common_field(*this, o);
    promote_to(f);
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    if (field_ == o.field_) {
        for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        return *this;
    }
    const Field f = common_field(*this, o);
    promote_to(f);
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    if (coeffs_.size() == 1 && o.coeffs_.size() == 1) {
        coeffs_[0] *= o.coeffs_[0];
        return *this;
    }
    if (o.coeffs_.size() == 1) {  // scalar by rational
        for (auto& c : coeffs_) c *= o.coeffs_[0];
        return *this;
    }
    if (coeffs_.size() == 1) {
        const Rational s = coeffs_[0];
        *this = o;
        for (auto& c : coeffs_) c *= s;
        return *this;
    }
    const Field f = common_field(*this, o);
    const std::size_t d = f.degree();
    const auto m = f.minpoly();
    std::vector<Rational> prod(2 * d - 1);
    for (std::size_t a = 0; a < d; ++a) {
        if (sgn(coeffs_[a]) == 0) continue;
        for (std::size_t b = 0; b < d; ++b) prod[a + b] += coeffs_[a] * o.coeffs_[b];
    }
    // theta^d = -(c0 + c1 theta + ... + c_{d-1} theta^{d-1})
    for (std::size_t k = 2 * d - 2; k >= d; --k) {
        if (sgn(prod[k]) == 0) continue;
        const Rational t = prod[k];
        for (std::size_t i = 0; i < d; ++i) prod[k - d + i] -= t * m[i];
        prod[k] = 0;
    }
    for (std::size_t k = 0; k < d; ++k) coeffs_[k] = prod[k];
    return *this;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw Error("division by zero");
    if (coeffs_.size() == 1) return FieldElement(field_, Coeffs{1 / coeffs_[0]});
    // Solve (multiplication by *this) x = 1 over Q; singular means a zero divisor.
    const std::size_t d = coeffs_.size();
    std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d + 1));
    FieldElement col = FieldElement::one(field_);
    const FieldElement theta = FieldElement::generator(field_);
    for (std::size_t j = 0; j < d; ++j) {
        const FieldElement img = *this * col;
        for (std::size_t i = 0; i < d; ++i) a[i][j] = img.coeffs_[i];
        col *= theta;
    }
    a[0][d] = 1;
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t p = c;
        while (p < d && sgn(a[p][c]) == 0) ++p;
        if (p == d) {
            throw ReducibleMinpoly("zero divisor " + to_string() + " found in " + field_.to_string() +
                                   ": minimal polynomial is reducible");
        }
        std::swap(a[p], a[c]);
        const Rational inv = 1 / a[c][c];
        for (std::size_t k = c; k <= d; ++k) a[c][k] *= inv;
        for (std::size_t r = 0; r < d; ++r) {
            if (r == c || sgn(a[r][c]) == 0) continue;
            const Rational t = a[r][c];
            for (std::size_t k = c; k <= d; ++k) a[r][k] -= t * a[c][k];
        }
    }
    Coeffs out(d);
    for (std::size_t i = 0; i < d; ++i) out[i] = a[i][d];
    return FieldElement(field_, std::move(out));
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
    if (o.coeffs_.size() == 1) {
        if (sgn(o.coeffs_[0]) == 0) throw Error("division by zero");
        for (auto& c : coeffs_) c /= o.coeffs_[0];
        return *this;
    }
    return *this *= o.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    if (a.field_ != b.field_ && !a.field_.is_rationals() && !b.field_.is_rationals()) return false;
    for (std::size_t k = 0; k < n; ++k) {
        if (a.coeff(k) != b.coeff(k)) return false;
    }
    return true;
}

std::strong_ordering compare(const FieldElement& a, const FieldElement& b) {
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    for (std::size_t k = 0; k < n; ++k) {
        const int c = cmp(a.coeff(k), b.coeff(k));
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

FieldElement FieldElement::lifted(Field target) const {
    if (field_ == target) return *this;
    if (!field_.is_rationals()) throw FieldMismatch("only rational elements lift to an extension");
    Coeffs c(target.degree());
    c[0] = coeffs_[0];
    return FieldElement(target, std::move(c));
}

FieldElement FieldElement::conjugate() const {
    if (field_.degree() != 2) {
        if (field_.is_rationals()) return *this;
        throw Unsupported("conjugation is implemented for quadratic extensions only");
    }
    const Rational& c1 = field_.minpoly()[1];
    return FieldElement(field_, Coeffs{coeffs_[0] - coeffs_[1] * c1, -coeffs_[1]});
}

std::string FieldElement::to_string() const {
    if (is_rational()) return format_rational(coeffs_[0]);
    std::string out;
    const std::string& g = field_.generator_name();
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (sgn(c) == 0) continue;
        std::string mag = format_rational(abs(c));
        std::string term;
        if (k == 0) {
            term = mag;
        } else {
            term = (mag == "1" ? "" : mag + "*") + g + (k > 1 ? "^" + std::to_string(k) : "");
        }
        if (out.empty()) {
            out = (sgn(c) < 0 ? "-" : "") + term;
        } else {
            out += (sgn(c) < 0 ? " - " : " + ") + term;
        }
    }
    return out;
}

FieldElement extension_lift(const FieldElement& x, Field target) { return x.lifted(target); }

}  // namespace lsup
