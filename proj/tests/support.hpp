// Seeded random generators for property tests. All tests draw from
// std::mt19937_64 with fixed seeds so every run sees the same cases.

#ifndef NCDISC_TESTS_SUPPORT_HPP
#define NCDISC_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "ncdisc/algebra.hpp"
#include "ncdisc/comm_poly.hpp"
#include "ncdisc/number_field.hpp"

namespace ncdisc {
namespace testsupport {

using Rng = std::mt19937_64;

inline long rand_long(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rational rand_rational(Rng& rng) {
    return make_rational(rand_long(rng, -6, 6), rand_long(rng, 1, 3));
}

inline Coefficient rand_coefficient(Rng& rng, const FieldPtr& f) {
    std::vector<Rational> residue(static_cast<size_t>(f->degree()));
    for (auto& c : residue) c = rand_rational(rng);
    return Coefficient::from_residue(f, std::move(residue));
}

inline Coefficient rand_nonzero_coefficient(Rng& rng, const FieldPtr& f) {
    for (;;) {
        Coefficient c = rand_coefficient(rng, f);
        if (!c.is_zero()) return c;
    }
}

inline ExponentVector rand_exponents(Rng& rng, int vars, int max_exp) {
    ExponentVector e(static_cast<size_t>(vars));
    for (auto& x : e) x = static_cast<int>(rand_long(rng, 0, max_exp));
    return e;
}

inline CommPoly rand_commpoly(Rng& rng, int vars, const FieldPtr& f,
                              int max_terms, int max_exp) {
    CommPoly p = CommPoly::zero(vars, f);
    long terms = rand_long(rng, 0, max_terms);
    for (long t = 0; t < terms; ++t)
        p.add_term(rand_exponents(rng, vars, max_exp),
                   rand_coefficient(rng, f));
    return p;
}

inline CommPoly rand_nonzero_commpoly(Rng& rng, int vars, const FieldPtr& f,
                                      int max_terms, int max_exp) {
    for (;;) {
        CommPoly p = rand_commpoly(rng, vars, f, max_terms, max_exp);
        if (!p.is_zero()) return p;
    }
}

inline NCPoly rand_ncpoly(Rng& rng, const AlgebraSpecPtr& spec, int max_terms,
                          int max_exp) {
    NCPoly p = NCPoly::zero(spec);
    long terms = rand_long(rng, 0, max_terms);
    for (long t = 0; t < terms; ++t)
        p.add_term(rand_exponents(rng, spec->gen_count(), max_exp),
                   rand_coefficient(rng, spec->field()));
    return p;
}

inline NCPoly rand_nonzero_ncpoly(Rng& rng, const AlgebraSpecPtr& spec,
                                  int max_terms, int max_exp) {
    for (;;) {
        NCPoly p = rand_ncpoly(rng, spec, max_terms, max_exp);
        if (!p.is_zero()) return p;
    }
}

// Random q = -1 algebra with integer constants a_ij in [-3, 3].
inline AlgebraSpecPtr rand_skew(Rng& rng, const std::string& name, int n,
                                const FieldPtr& f) {
    std::vector<Coefficient> as;
    for (int k = 0; k < n * (n - 1) / 2; ++k)
        as.push_back(Coefficient::from_integer(f, rand_long(rng, -3, 3)));
    return make_skew_symmetric(name, n, f, std::move(as));
}

} // namespace testsupport
} // namespace ncdisc

#endif
