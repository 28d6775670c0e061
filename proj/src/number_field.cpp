#include "ncdisc/number_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace ncdisc {
namespace {

using Poly = std::vector<Rational>; // ascending, no trailing zeros except []

void trim(Poly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

Poly sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

Poly scale(Poly a, const Rational& c) {
    for (auto& x : a) x *= c;
    trim(a);
    return a;
}

Poly shift(const Poly& a, size_t k) {
    if (a.empty()) return {};
    Poly out(a.size() + k, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) out[i + k] = a[i];
    return out;
}

// Euclidean division in Q[z]; b nonzero.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    Poly q;
    if (b.empty()) throw DivisionByZeroError("polynomial division by zero");
    while (a.size() >= b.size()) {
        Rational c = a.back() / b.back();
        size_t k = a.size() - b.size();
        if (q.size() < k + 1) q.resize(k + 1, Rational(0));
        q[k] = c;
        a = sub(std::move(a), shift(scale(b, c), k));
    }
    return {std::move(q), std::move(a)};
}

// g = gcd(a,b) monic, with s*a + t*b = g; only s is needed by callers.
struct ExtGcd {
    Poly g, s;
};

ExtGcd ext_gcd(Poly a, Poly b) {
    Poly s0{Rational(1)}, s1;
    while (!b.empty()) {
        auto [q, r] = divmod(a, b);
        Poly s2 = sub(s0, mul(q, s1));
        a = std::move(b);
        b = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (!a.empty() && a.back() != 1) {
        Rational lead = a.back();
        a = scale(std::move(a), Rational(1) / lead);
        s0 = scale(std::move(s0), Rational(1) / lead);
    }
    return {std::move(a), std::move(s0)};
}

} // namespace

MinimalPolynomial::MinimalPolynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
    trim(coeffs_);
    if (coeffs_.size() < 2)
        throw PreconditionViolationError("minimal polynomial must have degree >= 1");
    if (coeffs_.back() != 1)
        throw PreconditionViolationError("minimal polynomial must be monic");
}

FieldPtr MinimalPolynomial::rationals() {
    static const FieldPtr q = std::make_shared<const MinimalPolynomial>(
        std::vector<Rational>{Rational(-1), Rational(1)}); // z - 1
    return q;
}

FieldPtr MinimalPolynomial::cyclotomic(unsigned ell) {
    if (ell == 0) throw PreconditionViolationError("cyclotomic index must be >= 1");
    static std::mutex mu;
    static std::map<unsigned, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(ell);
    if (it != cache.end()) return it->second;

    // Phi_ell = (z^ell - 1) / prod_{d | ell, d < ell} Phi_d, exactly.
    std::map<unsigned, Poly> phi;
    for (unsigned k = 1; k <= ell; ++k) {
        if (ell % k != 0) continue;
        Poly num(k + 1, Rational(0));
        num[0] = Rational(-1);
        num[k] = Rational(1);
        for (auto& [d, p] : phi) {
            if (k % d != 0) continue;
            auto [q, r] = divmod(num, p);
            if (!r.empty())
                throw InternalInconsistencyError("cyclotomic division not exact");
            num = std::move(q);
        }
        phi.emplace(k, std::move(num));
    }
    auto f = std::make_shared<const MinimalPolynomial>(phi.at(ell));
    cache.emplace(ell, f);
    return f;
}

std::string MinimalPolynomial::to_string() const {
    // Same literal conventions as Coefficient, variable "z", ascending terms.
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (sgn(c) == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) out << "-";
            first = false;
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        bool unit = (mag == 1);
        if (i == 0 || !unit) out << rational_to_string(mag);
        if (i > 0) {
            if (!unit) out << "*";
            out << "z";
            if (i > 1) out << "^" << i;
        }
    }
    if (first) out << "0";
    return out.str();
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

const FieldPtr& require_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (!same_field(a, b))
        throw IncompatibleFieldError("minimal polynomials differ: " +
                                     a->to_string() + " vs " + b->to_string());
    return a;
}

Coefficient::Coefficient() : field_(MinimalPolynomial::rationals()) {
    residue_.assign(static_cast<size_t>(field_->degree()), Rational(0));
}

void Coefficient::reduce(std::vector<Rational> raw) {
    const Poly& m = field_->coefficients();
    size_t d = static_cast<size_t>(field_->degree());
    for (size_t i = raw.size(); i-- > d;) {
        Rational c = raw[i];
        if (sgn(c) == 0) continue;
        raw[i] = 0;
        // z^i = z^(i-d) * (z^d) = z^(i-d) * (-(m_0 + ... + m_{d-1} z^{d-1}))
        for (size_t j = 0; j < d; ++j) raw[i - d + j] -= c * m[j];
    }
    raw.resize(d, Rational(0));
    residue_ = std::move(raw);
}

Coefficient Coefficient::zero(const FieldPtr& field) {
    Coefficient c;
    c.field_ = field;
    c.residue_.assign(static_cast<size_t>(field->degree()), Rational(0));
    return c;
}

Coefficient Coefficient::one(const FieldPtr& field) {
    return from_rational(field, Rational(1));
}

Coefficient Coefficient::from_rational(const FieldPtr& field, const Rational& r) {
    Coefficient c = zero(field);
    c.residue_[0] = r;
    return c;
}

Coefficient Coefficient::from_integer(const FieldPtr& field, long n) {
    return from_rational(field, Rational(n));
}

Coefficient Coefficient::zeta(const FieldPtr& field) {
    Coefficient c = zero(field);
    std::vector<Rational> raw(2, Rational(0));
    raw[1] = 1;
    c.reduce(std::move(raw));
    return c;
}

Coefficient Coefficient::from_residue(const FieldPtr& field,
                                      std::vector<Rational> residue) {
    Coefficient c = zero(field);
    c.reduce(std::move(residue));
    return c;
}

bool Coefficient::is_zero() const {
    return std::all_of(residue_.begin(), residue_.end(),
                       [](const Rational& r) { return sgn(r) == 0; });
}

bool Coefficient::is_one() const {
    if (residue_[0] != 1) return false;
    return std::all_of(residue_.begin() + 1, residue_.end(),
                       [](const Rational& r) { return sgn(r) == 0; });
}

bool Coefficient::is_rational() const {
    return std::all_of(residue_.begin() + 1, residue_.end(),
                       [](const Rational& r) { return sgn(r) == 0; });
}

const Rational& Coefficient::rational_value() const {
    if (!is_rational())
        throw PreconditionViolationError("coefficient is not rational: " +
                                         to_string());
    return residue_[0];
}

Coefficient Coefficient::operator-() const {
    Coefficient out = *this;
    for (auto& r : out.residue_) r = -r;
    return out;
}

Coefficient& Coefficient::operator+=(const Coefficient& rhs) {
    require_same_field(field_, rhs.field_);
    for (size_t i = 0; i < residue_.size(); ++i) residue_[i] += rhs.residue_[i];
    return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& rhs) {
    require_same_field(field_, rhs.field_);
    for (size_t i = 0; i < residue_.size(); ++i) residue_[i] -= rhs.residue_[i];
    return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& rhs) {
    require_same_field(field_, rhs.field_);
    std::vector<Rational> raw = mul(residue_, rhs.residue_);
    raw.resize(std::max<size_t>(raw.size(), residue_.size()), Rational(0));
    reduce(std::move(raw));
    return *this;
}

bool Coefficient::operator==(const Coefficient& rhs) const {
    if (!same_field(field_, rhs.field_)) return false;
    return residue_ == rhs.residue_;
}

int Coefficient::compare(const Coefficient& a, const Coefficient& b) {
    require_same_field(a.field_, b.field_);
    for (size_t i = 0; i < a.residue_.size(); ++i) {
        int c = cmp(a.residue_[i], b.residue_[i]);
        if (c != 0) return c;
    }
    return 0;
}

Coefficient Coefficient::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero");
    Poly res = residue_;
    trim(res);
    ExtGcd e = ext_gcd(res, field_->coefficients());
    if (e.g.size() != 1)
        throw NotAFieldError("zero divisor " + to_string() + " modulo " +
                             field_->to_string());
    Coefficient out = zero(field_);
    std::vector<Rational> raw = e.s;
    raw.resize(std::max<size_t>(raw.size(), out.residue_.size()), Rational(0));
    out.reduce(std::move(raw));
    return out;
}

Coefficient Coefficient::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Coefficient base = *this, acc = one(field_);
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

std::string Coefficient::to_string() const {
    if (is_rational()) return rational_to_string(residue_[0]);
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < residue_.size(); ++i) {
        const Rational& c = residue_[i];
        if (sgn(c) == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) out << "-";
            first = false;
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        bool unit = (mag == 1);
        if (i == 0 || !unit) out << rational_to_string(mag);
        if (i > 0) {
            if (!unit) out << "*";
            out << "z";
            if (i > 1) out << "^" << i;
        }
    }
    if (first) out << "0";
    return out.str();
}

namespace {

// Solve y^2 = c in Q[z]/(m) with deg(m) == 2. Writing y = a + b*zeta and
// zeta^2 = -m1*zeta - m0 turns y^2 = c0 + c1*zeta into rational conditions.
std::optional<Coefficient> quadratic_field_sqrt(const Coefficient& c) {
    const FieldPtr& f = c.field();
    const auto& m = f->coefficients();
    const Rational m0 = m[0], m1 = m[1];
    const Rational c0 = c.residue()[0], c1 = c.residue()[1];

    auto check = [&](const Rational& a, const Rational& b)
        -> std::optional<Coefficient> {
        Coefficient y = Coefficient::from_residue(f, {a, b});
        if (y * y == c) return y;
        return std::nullopt;
    };

    // b = 0: plain rational square root of c0, needs c1 == 0.
    if (sgn(c1) == 0) {
        if (auto a = rational_sqrt(c0)) {
            if (auto y = check(*a, Rational(0))) return y;
        }
    }

    // b != 0: a = (c1 + m1*b^2)/(2b) and substituting into
    // a^2 - m0*b^2 = c0 gives a rational quadratic in u = b^2:
    // (m1^2 - 4*m0) u^2 + (2*c1*m1 - 4*c0) u + c1^2 = 0.
    Rational A = m1 * m1 - 4 * m0;
    Rational B = 2 * c1 * m1 - 4 * c0;
    Rational C = c1 * c1;
    std::vector<Rational> roots;
    if (sgn(A) == 0) {
        if (sgn(B) != 0) roots.push_back(-C / B);
    } else {
        Rational disc = B * B - 4 * A * C;
        if (auto s = rational_sqrt(disc)) {
            roots.push_back((-B + *s) / (2 * A));
            roots.push_back((-B - *s) / (2 * A));
        }
    }
    for (const Rational& u : roots) {
        if (sgn(u) <= 0) continue;
        auto b = rational_sqrt(u);
        if (!b || sgn(*b) == 0) continue;
        Rational a = (c1 + m1 * (*b) * (*b)) / (2 * (*b));
        if (auto y = check(a, *b)) return y;
    }
    return std::nullopt;
}

} // namespace

std::optional<Coefficient> field_sqrt(const Coefficient& c) {
    const FieldPtr& f = c.field();
    if (c.is_zero()) return Coefficient::zero(f);
    if (f->degree() == 1) {
        if (auto r = rational_sqrt(c.residue()[0]))
            return Coefficient::from_rational(f, *r);
        return std::nullopt;
    }
    if (f->degree() == 2) return quadratic_field_sqrt(c);

    // Candidate roots r*zeta^k with r rational; covers unit-times-root-of-unity
    // values, which is what monomial relation constraints produce.
    Coefficient z = Coefficient::zeta(f);
    Coefficient zk = Coefficient::one(f);
    for (int k = 0; k <= 2 * f->degree(); ++k) {
        Coefficient w = zk * zk; // (zeta^k)^2
        // need c == r^2 * w, i.e. c / w rational square
        Coefficient ratio = c * w.inverse();
        if (ratio.is_rational()) {
            if (auto r = rational_sqrt(ratio.rational_value()))
                return Coefficient::from_rational(f, *r) * zk;
        }
        zk *= z;
    }
    return std::nullopt;
}

std::optional<unsigned> multiplicative_order(const Coefficient& c,
                                             unsigned bound) {
    if (c.is_zero()) return std::nullopt;
    Coefficient acc = c;
    for (unsigned k = 1; k <= bound; ++k) {
        if (acc.is_one()) return k;
        acc *= c;
    }
    return std::nullopt;
}

} // namespace ncdisc
