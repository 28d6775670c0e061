// Sparse multivariate polynomials over the coefficient field, ordered by
// descending graded lex so iteration starts at the leading term. Used both
// for the free central subalgebra R = k[z1..zn] and for generic commutative
// computation (determinants, discriminants).

#ifndef NCDISC_COMM_POLY_HPP
#define NCDISC_COMM_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncdisc/monomial.hpp"
#include "ncdisc/number_field.hpp"

namespace ncdisc {

class CommPoly {
public:
    using TermMap = std::map<ExponentVector, Coefficient, TermOrderDesc>;

    CommPoly(); // zero in zero variables over Q
    CommPoly(int var_count, FieldPtr field);

    static CommPoly zero(int var_count, const FieldPtr& field);
    static CommPoly constant(int var_count, const Coefficient& c);
    static CommPoly one(int var_count, const FieldPtr& field);
    static CommPoly variable(int var_count, const FieldPtr& field, int i);
    static CommPoly monomial(int var_count, const ExponentVector& e,
                             const Coefficient& c);

    int var_count() const { return var_count_; }
    const FieldPtr& field() const { return field_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    long degree() const; // total degree; -1 for the zero polynomial

    Coefficient coefficient(const ExponentVector& e) const;
    const ExponentVector& leading_exponent() const; // ZeroPolynomial on 0
    const Coefficient& leading_coefficient() const; // ZeroPolynomial on 0

    void add_term(const ExponentVector& e, const Coefficient& c);

    CommPoly operator-() const;
    CommPoly& operator+=(const CommPoly& rhs);
    CommPoly& operator-=(const CommPoly& rhs);
    CommPoly& operator*=(const CommPoly& rhs);
    CommPoly& operator*=(const Coefficient& c);

    friend CommPoly operator+(CommPoly a, const CommPoly& b) { a += b; return a; }
    friend CommPoly operator-(CommPoly a, const CommPoly& b) { a -= b; return a; }
    friend CommPoly operator*(CommPoly a, const CommPoly& b) { a *= b; return a; }
    friend CommPoly operator*(CommPoly a, const Coefficient& c) { a *= c; return a; }
    friend CommPoly operator*(const Coefficient& c, CommPoly a) { a *= c; return a; }

    bool operator==(const CommPoly& rhs) const;
    bool operator!=(const CommPoly& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

private:
    int var_count_;
    FieldPtr field_;
    TermMap terms_;

    void check_compatible(const CommPoly& rhs) const;
};

CommPoly pow(const CommPoly& f, unsigned e);

// Exact quotient f / g; throws NotDivisible if g does not divide f and
// DivisionByZero if g == 0.
CommPoly exact_divide(const CommPoly& f, const CommPoly& g);

struct PolyTerm {
    ExponentVector exponent;
    Coefficient coeff;
};

// The term maximizing the weighted degree sum(w_i * e_i), ties broken by
// graded lex; f must be nonzero (ZeroPolynomial otherwise).
PolyTerm principal_term(const CommPoly& f, const std::vector<int>& weights);

// Sufficient criterion: the componentwise max of the support is itself a
// term of f and has every exponent positive (every other term is then
// componentwise smaller).
bool is_dominating_sufficient(const CommPoly& f);

// If f == u * g for a unit u of the coefficient field, returns u.
// Two zero polynomials count as equal with unit 1.
std::optional<Coefficient> equal_up_to_unit(const CommPoly& f, const CommPoly& g);

// Relabel/scale variables: z_i -> scale[i] * z'_{target[i]} into a polynomial
// in new_var_count variables. Targets are 0-based and injective.
CommPoly map_variables(const CommPoly& f, int new_var_count,
                       const std::vector<int>& target,
                       const std::vector<Coefficient>& scale);

Coefficient evaluate(const CommPoly& f, const std::vector<Coefficient>& point);

} // namespace ncdisc

#endif
