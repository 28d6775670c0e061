#include "ncdisc/comm_poly.hpp"

#include <sstream>

#include "ncdisc/errors.hpp"
#include "print_util.hpp"

namespace ncdisc {

CommPoly::CommPoly() : var_count_(0), field_(MinimalPolynomial::rationals()) {}

CommPoly::CommPoly(int var_count, FieldPtr field)
    : var_count_(var_count), field_(std::move(field)) {
    if (var_count_ < 0)
        throw PreconditionViolationError("negative variable count");
}

CommPoly CommPoly::zero(int var_count, const FieldPtr& field) {
    return CommPoly(var_count, field);
}

CommPoly CommPoly::constant(int var_count, const Coefficient& c) {
    CommPoly p(var_count, c.field());
    p.add_term(ExponentVector(static_cast<size_t>(var_count), 0), c);
    return p;
}

CommPoly CommPoly::one(int var_count, const FieldPtr& field) {
    return constant(var_count, Coefficient::one(field));
}

CommPoly CommPoly::variable(int var_count, const FieldPtr& field, int i) {
    if (i < 0 || i >= var_count)
        throw IndexError("variable index " + std::to_string(i + 1) +
                         " out of range 1.." + std::to_string(var_count));
    ExponentVector e(static_cast<size_t>(var_count), 0);
    e[static_cast<size_t>(i)] = 1;
    return monomial(var_count, e, Coefficient::one(field));
}

CommPoly CommPoly::monomial(int var_count, const ExponentVector& e,
                            const Coefficient& c) {
    CommPoly p(var_count, c.field());
    p.add_term(e, c);
    return p;
}

long CommPoly::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.begin()->first);
}

Coefficient CommPoly::coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    if (it == terms_.end()) return Coefficient::zero(field_);
    return it->second;
}

const ExponentVector& CommPoly::leading_exponent() const {
    if (terms_.empty()) throw ZeroPolynomialError("leading term of zero");
    return terms_.begin()->first;
}

const Coefficient& CommPoly::leading_coefficient() const {
    if (terms_.empty()) throw ZeroPolynomialError("leading term of zero");
    return terms_.begin()->second;
}

void CommPoly::add_term(const ExponentVector& e, const Coefficient& c) {
    if (e.size() != static_cast<size_t>(var_count_))
        throw DimensionMismatchError("exponent vector length " +
                                     std::to_string(e.size()) + " != " +
                                     std::to_string(var_count_));
    for (int x : e)
        if (x < 0) throw PreconditionViolationError("negative exponent");
    if (c.is_zero()) return;
    require_same_field(field_, c.field());
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void CommPoly::check_compatible(const CommPoly& rhs) const {
    if (var_count_ != rhs.var_count_)
        throw DimensionMismatchError("variable counts differ: " +
                                     std::to_string(var_count_) + " vs " +
                                     std::to_string(rhs.var_count_));
    require_same_field(field_, rhs.field_);
}

CommPoly CommPoly::operator-() const {
    CommPoly out(var_count_, field_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

CommPoly& CommPoly::operator+=(const CommPoly& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

CommPoly& CommPoly::operator*=(const CommPoly& rhs) {
    check_compatible(rhs);
    CommPoly out(var_count_, field_);
    ExponentVector e(static_cast<size_t>(var_count_));
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    terms_ = std::move(out.terms_);
    return *this;
}

CommPoly& CommPoly::operator*=(const Coefficient& c) {
    require_same_field(field_, c.field());
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

bool CommPoly::operator==(const CommPoly& rhs) const {
    if (var_count_ != rhs.var_count_ || !same_field(field_, rhs.field_))
        return false;
    return terms_ == rhs.terms_;
}

std::string CommPoly::to_string() const {
    return detail::poly_text(terms_, "z");
}

CommPoly pow(const CommPoly& f, unsigned e) {
    CommPoly acc = CommPoly::one(f.var_count(), f.field());
    CommPoly base = f;
    while (e) {
        if (e & 1) acc *= base;
        if (e >>= 1) base *= base;
    }
    return acc;
}

CommPoly exact_divide(const CommPoly& f, const CommPoly& g) {
    if (g.is_zero()) throw DivisionByZeroError("division by zero polynomial");
    if (f.var_count() != g.var_count())
        throw DimensionMismatchError("variable counts differ in division");
    require_same_field(f.field(), g.field());
    CommPoly q(f.var_count(), f.field());
    CommPoly r = f;
    const ExponentVector& ge = g.leading_exponent();
    Coefficient glc_inv = g.leading_coefficient().inverse();
    ExponentVector t(static_cast<size_t>(f.var_count()));
    while (!r.is_zero()) {
        const ExponentVector& re = r.leading_exponent();
        if (!divides(ge, re))
            throw NotDivisibleError("leading term not divisible");
        for (size_t i = 0; i < t.size(); ++i) t[i] = re[i] - ge[i];
        Coefficient c = r.leading_coefficient() * glc_inv;
        CommPoly step = CommPoly::monomial(f.var_count(), t, c);
        q += step;
        r -= step * g;
    }
    return q;
}

PolyTerm principal_term(const CommPoly& f, const std::vector<int>& weights) {
    if (f.is_zero()) throw ZeroPolynomialError("principal term of zero");
    if (weights.size() != static_cast<size_t>(f.var_count()))
        throw DimensionMismatchError("weight vector length mismatch");
    const ExponentVector* best = nullptr;
    const Coefficient* bestc = nullptr;
    long bestw = 0;
    for (const auto& [e, c] : f.terms()) {
        long w = weighted_degree(e, weights);
        if (!best || w > bestw) {
            best = &e;
            bestc = &c;
            bestw = w;
        }
        // ties resolve to the first term seen, i.e. the graded-lex largest
    }
    return {*best, *bestc};
}

bool is_dominating_sufficient(const CommPoly& f) {
    if (f.is_zero()) return false;
    ExponentVector m(static_cast<size_t>(f.var_count()), 0);
    for (const auto& [e, c] : f.terms()) m = componentwise_max(m, e);
    for (int x : m)
        if (x <= 0) return false;
    return !f.coefficient(m).is_zero();
}

std::optional<Coefficient> equal_up_to_unit(const CommPoly& f,
                                            const CommPoly& g) {
    if (f.var_count() != g.var_count() || !same_field(f.field(), g.field()))
        return std::nullopt;
    if (f.is_zero() && g.is_zero())
        return Coefficient::one(f.field());
    if (f.is_zero() || g.is_zero()) return std::nullopt;
    if (f.term_count() != g.term_count()) return std::nullopt;
    if (f.leading_exponent() != g.leading_exponent()) return std::nullopt;
    Coefficient u = f.leading_coefficient() * g.leading_coefficient().inverse();
    if (f == g * u) return u;
    return std::nullopt;
}

CommPoly map_variables(const CommPoly& f, int new_var_count,
                       const std::vector<int>& target,
                       const std::vector<Coefficient>& scale) {
    if (target.size() != static_cast<size_t>(f.var_count()) ||
        scale.size() != target.size())
        throw DimensionMismatchError("variable map length mismatch");
    for (int t : target)
        if (t < 0 || t >= new_var_count)
            throw IndexError("variable map target out of range");
    CommPoly out(new_var_count, f.field());
    ExponentVector e(static_cast<size_t>(new_var_count));
    for (const auto& [ef, c] : f.terms()) {
        std::fill(e.begin(), e.end(), 0);
        Coefficient v = c;
        for (size_t i = 0; i < ef.size(); ++i) {
            if (ef[i] == 0) continue;
            e[static_cast<size_t>(target[i])] += ef[i];
            v *= scale[i].pow(ef[i]);
        }
        out.add_term(e, v);
    }
    return out;
}

Coefficient evaluate(const CommPoly& f, const std::vector<Coefficient>& point) {
    if (point.size() != static_cast<size_t>(f.var_count()))
        throw DimensionMismatchError("evaluation point length mismatch");
    Coefficient acc = Coefficient::zero(f.field());
    for (const auto& [e, c] : f.terms()) {
        Coefficient t = c;
        for (size_t i = 0; i < point.size(); ++i)
            if (e[i] != 0) t *= point[i].pow(e[i]);
        acc += t;
    }
    return acc;
}

} // namespace ncdisc
