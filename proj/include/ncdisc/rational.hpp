// Exact rational arithmetic. Canonical form (lowest terms, positive
// denominator) is maintained by GMP; helpers cover parsing, printing and
// exact square roots.

#ifndef NCDISC_RATIONAL_HPP
#define NCDISC_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

#include "ncdisc/errors.hpp"

namespace ncdisc {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p" or "p/q" with an optional leading sign on p.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    try {
        Rational r(text, 10);
        if (r.get_den() == 0)
            throw DivisionByZeroError("rational with zero denominator");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal '" + text + "'");
    }
}

inline std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

// Exact square root of a nonnegative rational, if one exists in Q.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
    if (sgn(r) < 0) return std::nullopt;
    if (sgn(r) == 0) return Rational(0);
    mpz_class num = r.get_num(), den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t())) return std::nullopt;
    if (!mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    return Rational(sn, sd);
}

} // namespace ncdisc

#endif
