// Shared canonical term printing for commutative and ordered-monomial
// polynomials: descending term order, "<coeff>*v1^e1*..." with unit
// coefficients and ^1 omitted, terms joined with " + " / " - ".

#ifndef NCDISC_PRINT_UTIL_HPP
#define NCDISC_PRINT_UTIL_HPP

#include <sstream>
#include <string>

#include "ncdisc/monomial.hpp"
#include "ncdisc/number_field.hpp"

namespace ncdisc {
namespace detail {

inline int nonzero_residue_count(const Coefficient& c) {
    int k = 0;
    for (const auto& r : c.residue())
        if (sgn(r) != 0) ++k;
    return k;
}

inline std::string monomial_text(const ExponentVector& e, const char* prefix) {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) out << "*";
        first = false;
        out << prefix << (i + 1);
        if (e[i] != 1) out << "^" << e[i];
    }
    return out.str();
}

// One term as signed text: pair of (negative sign?, magnitude text).
inline std::pair<bool, std::string> term_text(const ExponentVector& e,
                                              const Coefficient& c,
                                              const char* prefix) {
    std::string mono = monomial_text(e, prefix);
    if (mono.empty()) {
        std::string lit = c.to_string();
        if (!lit.empty() && lit[0] == '-') return {true, lit.substr(1)};
        return {false, lit};
    }
    if (c.is_one()) return {false, mono};
    if (c.is_rational()) {
        Rational r = c.rational_value();
        bool neg = sgn(r) < 0;
        Rational mag = abs(r);
        if (mag == 1) return {neg, mono};
        return {neg, rational_to_string(mag) + "*" + mono};
    }
    if (nonzero_residue_count(c) > 1)
        return {false, "(" + c.to_string() + ")*" + mono};
    std::string lit = c.to_string();
    if (!lit.empty() && lit[0] == '-') return {true, lit.substr(1) + "*" + mono};
    return {false, lit + "*" + mono};
}

template <class TermMap>
std::string poly_text(const TermMap& terms, const char* prefix) {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        auto [neg, text] = term_text(e, c, prefix);
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        out << text;
    }
    return out.str();
}

} // namespace detail
} // namespace ncdisc

#endif
