#include "ncdisc/algebra.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "ncdisc/errors.hpp"
#include "print_util.hpp"

namespace ncdisc {

AlgebraSpec::AlgebraSpec(std::string name, int n, FieldPtr field,
                         std::vector<Coefficient> q_upper,
                         std::vector<Coefficient> a_upper,
                         std::vector<int> degrees)
    : name_(std::move(name)), n_(n), field_(std::move(field)),
      q_(std::move(q_upper)), a_(std::move(a_upper)),
      degrees_(std::move(degrees)) {
    if (n_ < 1) throw PreconditionViolationError("need at least one generator");
    size_t pairs = static_cast<size_t>(n_) * (n_ - 1) / 2;
    if (q_.size() != pairs || a_.size() != pairs)
        throw DimensionMismatchError("relation table size mismatch");
    if (degrees_.empty()) degrees_.assign(static_cast<size_t>(n_), 1);
    if (degrees_.size() != static_cast<size_t>(n_))
        throw DimensionMismatchError("degree vector size mismatch");
    for (int d : degrees_)
        if (d < 1) throw PreconditionViolationError("generator degree must be >= 1");
    for (auto& c : q_) {
        require_same_field(field_, c.field());
        if (c.is_zero())
            throw PreconditionViolationError("q coefficients must be units");
    }
    for (auto& c : a_) require_same_field(field_, c.field());
}

const Coefficient& AlgebraSpec::q(int i, int j) const {
    if (i < 0 || j <= i || j >= n_) throw IndexError("bad generator pair");
    return q_[pair_index(i, j)];
}

const Coefficient& AlgebraSpec::a(int i, int j) const {
    if (i < 0 || j <= i || j >= n_) throw IndexError("bad generator pair");
    return a_[pair_index(i, j)];
}

bool AlgebraSpec::same_structure(const AlgebraSpec& other) const {
    return n_ == other.n_ && same_field(field_, other.field_) &&
           q_ == other.q_ && a_ == other.a_ && degrees_ == other.degrees_;
}

std::string AlgebraSpec::describe() const {
    std::ostringstream out;
    out << name_ << ": " << n_ << " generators over " << field_->to_string();
    for (int j = 1; j < n_; ++j)
        for (int i = 0; i < j; ++i)
            out << "; x" << (j + 1) << "*x" << (i + 1) << " = "
                << q(i, j).to_string() << "*x" << (i + 1) << "*x" << (j + 1)
                << " + " << a(i, j).to_string();
    return out.str();
}

AlgebraSpecPtr make_algebra(std::string name, int n, FieldPtr field,
                            std::vector<Coefficient> q_upper,
                            std::vector<Coefficient> a_upper,
                            std::vector<int> degrees) {
    return std::make_shared<const AlgebraSpec>(
        std::move(name), n, std::move(field), std::move(q_upper),
        std::move(a_upper), std::move(degrees));
}

bool same_algebra(const AlgebraSpecPtr& a, const AlgebraSpecPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same_structure(*b);
}

const AlgebraSpecPtr& require_same_algebra(const AlgebraSpecPtr& a,
                                           const AlgebraSpecPtr& b) {
    if (!same_algebra(a, b))
        throw AlgebraMismatchError("elements live in different algebras");
    return a;
}

namespace {

// 1 + q + ... + q^(m-1)
Coefficient q_integer(const Coefficient& q, int m) {
    Coefficient acc = Coefficient::zero(q.field());
    Coefficient p = Coefficient::one(q.field());
    for (int k = 0; k < m; ++k) {
        acc += p;
        p *= q;
    }
    return acc;
}

} // namespace

NCPoly AlgebraSpec::right_mul_generator(const AlgebraSpecPtr& self,
                                        const ExponentVector& e, int i) const {
    if (i < 0 || i >= n_) throw IndexError("generator index out of range");
    std::pair<ExponentVector, int> key(e, i);
    {
        std::shared_lock lock(memo_mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) {
            NCPoly out(self);
            for (const auto& [ee, c] : it->second) out.add_term(ee, c);
            return out;
        }
    }

    // find the largest j > i with e_j > 0; if none the product is ordered
    int j = -1;
    for (int k = n_ - 1; k > i; --k) {
        if (e[static_cast<size_t>(k)] > 0) {
            j = k;
            break;
        }
    }
    NCPoly result(self);
    if (j < 0) {
        ExponentVector out = e;
        out[static_cast<size_t>(i)] += 1;
        result.add_term(out, Coefficient::one(field_));
    } else {
        // X_e = X_e' * xj^m with e' supported below j; then
        // xj^m * xi = q^m * xi * xj^m + a * [m]_q * xj^(m-1)
        const int m = e[static_cast<size_t>(j)];
        ExponentVector head = e;
        head[static_cast<size_t>(j)] = 0;
        const Coefficient& qv = q(i, j);
        const Coefficient& av = a(i, j);

        NCPoly rec = right_mul_generator(self, head, i);
        Coefficient qm = qv.pow(m);
        for (const auto& [ee, c] : rec.terms()) {
            ExponentVector t = ee;
            t[static_cast<size_t>(j)] += m;
            result.add_term(t, c * qm);
        }
        if (!av.is_zero()) {
            Coefficient bracket = q_integer(qv, m);
            if (!bracket.is_zero()) {
                ExponentVector t = head;
                t[static_cast<size_t>(j)] = m - 1;
                result.add_term(t, av * bracket);
            }
        }
    }

    {
        std::unique_lock lock(memo_mutex_);
        memo_.emplace(std::move(key), result.terms());
    }
    return result;
}

NCPoly::NCPoly(AlgebraSpecPtr spec) : spec_(std::move(spec)) {
    if (!spec_) throw PreconditionViolationError("null algebra");
}

NCPoly NCPoly::zero(const AlgebraSpecPtr& spec) { return NCPoly(spec); }

NCPoly NCPoly::one(const AlgebraSpecPtr& spec) {
    return constant(spec, Coefficient::one(spec->field()));
}

NCPoly NCPoly::constant(const AlgebraSpecPtr& spec, const Coefficient& c) {
    NCPoly p(spec);
    p.add_term(ExponentVector(static_cast<size_t>(spec->gen_count()), 0), c);
    return p;
}

NCPoly NCPoly::generator(const AlgebraSpecPtr& spec, int i) {
    if (i < 0 || i >= spec->gen_count())
        throw IndexError("generator index " + std::to_string(i + 1) +
                         " out of range 1.." + std::to_string(spec->gen_count()));
    ExponentVector e(static_cast<size_t>(spec->gen_count()), 0);
    e[static_cast<size_t>(i)] = 1;
    return monomial(spec, e, Coefficient::one(spec->field()));
}

NCPoly NCPoly::monomial(const AlgebraSpecPtr& spec, const ExponentVector& e,
                        const Coefficient& c) {
    NCPoly p(spec);
    p.add_term(e, c);
    return p;
}

Coefficient NCPoly::coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    if (it == terms_.end()) return Coefficient::zero(spec_->field());
    return it->second;
}

long NCPoly::filtration_degree() const {
    long best = -1;
    for (const auto& [e, c] : terms_)
        best = std::max(best, weighted_degree(e, spec_->degrees()));
    return best;
}

void NCPoly::add_term(const ExponentVector& e, const Coefficient& c) {
    if (e.size() != static_cast<size_t>(spec_->gen_count()))
        throw DimensionMismatchError("exponent vector length mismatch");
    for (int x : e)
        if (x < 0) throw PreconditionViolationError("negative exponent");
    if (c.is_zero()) return;
    require_same_field(spec_->field(), c.field());
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void NCPoly::check_compatible(const NCPoly& rhs) const {
    require_same_algebra(spec_, rhs.spec_);
}

NCPoly NCPoly::operator-() const {
    NCPoly out(spec_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

NCPoly& NCPoly::operator+=(const NCPoly& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

NCPoly& NCPoly::operator*=(const NCPoly& rhs) {
    check_compatible(rhs);
    NCPoly acc(spec_);
    const int n = spec_->gen_count();
    for (const auto& [ev, cv] : rhs.terms_) {
        // current = (this) * X_ev, built one generator at a time
        NCPoly current = *this;
        for (int i = 0; i < n; ++i) {
            for (int rep = 0; rep < ev[static_cast<size_t>(i)]; ++rep) {
                NCPoly next(spec_);
                for (const auto& [e, c] : current.terms_) {
                    NCPoly part = spec_->right_mul_generator(spec_, e, i);
                    for (const auto& [pe, pc] : part.terms())
                        next.add_term(pe, pc * c);
                }
                current = std::move(next);
            }
        }
        for (const auto& [e, c] : current.terms_) acc.add_term(e, c * cv);
    }
    terms_ = std::move(acc.terms_);
    return *this;
}

NCPoly& NCPoly::operator*=(const Coefficient& c) {
    require_same_field(spec_->field(), c.field());
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

bool NCPoly::operator==(const NCPoly& rhs) const {
    if (!same_algebra(spec_, rhs.spec_)) return false;
    return terms_ == rhs.terms_;
}

std::string NCPoly::to_string() const {
    return detail::poly_text(terms_, "x");
}

NCPoly pow(const NCPoly& f, unsigned e) {
    NCPoly acc = NCPoly::one(f.spec());
    NCPoly base = f;
    while (e) {
        if (e & 1) acc *= base;
        if (e >>= 1) base *= base;
    }
    return acc;
}

NCPoly antisymmetrized_product(const std::vector<NCPoly>& factors,
                               int max_factors) {
    if (factors.empty())
        throw PreconditionViolationError("empty antisymmetrized product");
    const size_t w = factors.size();
    if (w > static_cast<size_t>(max_factors))
        throw SizeLimitError(std::to_string(w) + " factors exceeds bound " +
                             std::to_string(max_factors));
    const AlgebraSpecPtr& spec = factors[0].spec();
    for (const auto& f : factors) require_same_algebra(spec, f.spec());

    std::vector<size_t> perm(w);
    for (size_t i = 0; i < w; ++i) perm[i] = i;
    NCPoly acc(spec);
    do {
        int inversions = 0;
        for (size_t i = 0; i < w; ++i)
            for (size_t j = i + 1; j < w; ++j)
                if (perm[i] > perm[j]) ++inversions;
        NCPoly prod = factors[perm[0]];
        for (size_t i = 1; i < w; ++i) prod *= factors[perm[i]];
        if (inversions % 2)
            acc -= prod;
        else
            acc += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

AlgebraSpecPtr tensor_algebra(const AlgebraSpecPtr& a, const AlgebraSpecPtr& b) {
    const FieldPtr& field = require_same_field(a->field(), b->field());
    const int na = a->gen_count(), nb = b->gen_count(), n = na + nb;
    std::vector<Coefficient> q(static_cast<size_t>(n) * (n - 1) / 2,
                               Coefficient::one(field));
    std::vector<Coefficient> av(q.size(), Coefficient::zero(field));
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            size_t idx = AlgebraSpec::pair_index(i, j);
            if (j < na) {
                q[idx] = a->q(i, j);
                av[idx] = a->a(i, j);
            } else if (i >= na) {
                q[idx] = b->q(i - na, j - na);
                av[idx] = b->a(i - na, j - na);
            }
        }
    }
    std::vector<int> degrees = a->degrees();
    degrees.insert(degrees.end(), b->degrees().begin(), b->degrees().end());
    return make_algebra(a->name() + "(x)" + b->name(), n, field, std::move(q),
                        std::move(av), std::move(degrees));
}

NCPoly tensor_embed_left(const AlgebraSpecPtr& t, const NCPoly& f) {
    NCPoly out(t);
    const int n = t->gen_count();
    for (const auto& [e, c] : f.terms()) {
        ExponentVector w(static_cast<size_t>(n), 0);
        std::copy(e.begin(), e.end(), w.begin());
        out.add_term(w, c);
    }
    return out;
}

NCPoly tensor_embed_right(const AlgebraSpecPtr& t, const AlgebraSpecPtr& a,
                          const NCPoly& g) {
    NCPoly out(t);
    const int n = t->gen_count();
    const size_t off = static_cast<size_t>(a->gen_count());
    for (const auto& [e, c] : g.terms()) {
        ExponentVector w(static_cast<size_t>(n), 0);
        std::copy(e.begin(), e.end(), w.begin() + static_cast<long>(off));
        out.add_term(w, c);
    }
    return out;
}

AlgebraSpecPtr make_skew_symmetric(std::string name, int n,
                                   const FieldPtr& field,
                                   std::vector<Coefficient> a_upper) {
    std::vector<Coefficient> q(static_cast<size_t>(n) * (n - 1) / 2,
                               Coefficient::from_integer(field, -1));
    return make_algebra(std::move(name), n, field, std::move(q),
                        std::move(a_upper));
}

AlgebraSpecPtr make_wn(int n, const FieldPtr& field) {
    std::vector<Coefficient> a(static_cast<size_t>(n) * (n - 1) / 2,
                               Coefficient::one(field));
    return make_skew_symmetric("W" + std::to_string(n), n, field, std::move(a));
}

AlgebraSpecPtr make_kminus1(int n, const FieldPtr& field) {
    std::vector<Coefficient> a(static_cast<size_t>(n) * (n - 1) / 2,
                               Coefficient::zero(field));
    return make_skew_symmetric("kminus1_" + std::to_string(n), n, field,
                               std::move(a));
}

AlgebraSpecPtr opposite_algebra(const AlgebraSpecPtr& a) {
    const int n = a->gen_count();
    std::vector<Coefficient> q, av;
    q.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    av.reserve(q.capacity());
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            Coefficient qinv = a->q(i, j).inverse();
            q.push_back(qinv);
            av.push_back(-(qinv * a->a(i, j)));
        }
    }
    return make_algebra(a->name() + "^op", n, a->field(), std::move(q),
                        std::move(av), a->degrees());
}

} // namespace ncdisc
