// The coefficient field K = Q[z]/(m(z)) for a monic minimal polynomial m.
// Elements are residues of degree < deg(m); all arithmetic is exact.
// m is not checked for irreducibility up front: a zero divisor surfaces as
// NotAField the moment an inverse is requested.

#ifndef NCDISC_NUMBER_FIELD_HPP
#define NCDISC_NUMBER_FIELD_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ncdisc/rational.hpp"

namespace ncdisc {

class MinimalPolynomial {
public:
    // Coefficients ascending by degree; must be monic of degree >= 1.
    explicit MinimalPolynomial(std::vector<Rational> coeffs);

    static std::shared_ptr<const MinimalPolynomial> rationals();
    static std::shared_ptr<const MinimalPolynomial> cyclotomic(unsigned ell);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool operator==(const MinimalPolynomial& other) const {
        return coeffs_ == other.coeffs_;
    }
    bool operator!=(const MinimalPolynomial& other) const {
        return !(*this == other);
    }

    std::string to_string() const;

private:
    std::vector<Rational> coeffs_;
};

using FieldPtr = std::shared_ptr<const MinimalPolynomial>;

// Same field in the value sense; pointer equality is just the fast path.
bool same_field(const FieldPtr& a, const FieldPtr& b);

// Throws IncompatibleField unless the two fields agree; returns one of them.
const FieldPtr& require_same_field(const FieldPtr& a, const FieldPtr& b);

class Coefficient {
public:
    Coefficient(); // zero over Q

    static Coefficient zero(const FieldPtr& field);
    static Coefficient one(const FieldPtr& field);
    static Coefficient from_rational(const FieldPtr& field, const Rational& r);
    static Coefficient from_integer(const FieldPtr& field, long n);
    static Coefficient zeta(const FieldPtr& field);
    // Residue coefficients ascending; reduced mod m.
    static Coefficient from_residue(const FieldPtr& field,
                                    std::vector<Rational> residue);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& residue() const { return residue_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    const Rational& rational_value() const; // pre: is_rational()

    Coefficient operator-() const;
    Coefficient& operator+=(const Coefficient& rhs);
    Coefficient& operator-=(const Coefficient& rhs);
    Coefficient& operator*=(const Coefficient& rhs);

    friend Coefficient operator+(Coefficient a, const Coefficient& b) {
        a += b;
        return a;
    }
    friend Coefficient operator-(Coefficient a, const Coefficient& b) {
        a -= b;
        return a;
    }
    friend Coefficient operator*(Coefficient a, const Coefficient& b) {
        a *= b;
        return a;
    }

    bool operator==(const Coefficient& rhs) const;
    bool operator!=(const Coefficient& rhs) const { return !(*this == rhs); }

    // Deterministic total order (for canonical enumeration, not magnitude).
    static int compare(const Coefficient& a, const Coefficient& b);

    Coefficient inverse() const; // DivisionByZero on 0, NotAField on zero divisor
    Coefficient pow(long e) const;

    std::string to_string() const;

private:
    FieldPtr field_;
    std::vector<Rational> residue_; // size == degree(m), ascending

    void reduce(std::vector<Rational> raw);
};

inline Coefficient operator/(const Coefficient& a, const Coefficient& b) {
    return a * b.inverse();
}

// One square root of c in K if the implemented cases find it; the other root
// is its negative. Exact for deg(m) <= 2; candidate search r*zeta^k above.
std::optional<Coefficient> field_sqrt(const Coefficient& c);

// Multiplicative order of c, or nullopt if none found with order <= bound.
std::optional<unsigned> multiplicative_order(const Coefficient& c,
                                             unsigned bound = 512);

} // namespace ncdisc

#endif
