// Exponent vectors and the monomial orders used across the engine.

#ifndef NCDISC_MONOMIAL_HPP
#define NCDISC_MONOMIAL_HPP

#include <numeric>
#include <vector>

namespace ncdisc {

using ExponentVector = std::vector<int>;

inline long total_degree(const ExponentVector& e) {
    return std::accumulate(e.begin(), e.end(), 0L);
}

inline long weighted_degree(const ExponentVector& e, const std::vector<int>& w) {
    long d = 0;
    for (size_t i = 0; i < e.size(); ++i) d += static_cast<long>(e[i]) * w[i];
    return d;
}

// a strictly greater than b in graded lex (degree first, then lex with the
// first variable highest).
inline bool graded_lex_greater(const ExponentVector& a, const ExponentVector& b) {
    long da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

// Map comparator that iterates leading term first.
struct TermOrderDesc {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        return graded_lex_greater(a, b);
    }
};

// Basis-box listing order: ascending degree, and within a degree the
// x1-heavy monomial first (so the n = 2 box reads 1, x, y, xy).
struct BoxOrderAsc {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        long da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

// Componentwise <= with strict inequality somewhere.
inline bool componentwise_lt(const ExponentVector& a, const ExponentVector& b) {
    bool strict = false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strict = true;
    }
    return strict;
}

inline ExponentVector componentwise_max(const ExponentVector& a,
                                        const ExponentVector& b) {
    ExponentVector m(a.size());
    for (size_t i = 0; i < a.size(); ++i) m[i] = a[i] > b[i] ? a[i] : b[i];
    return m;
}

inline bool divides(const ExponentVector& a, const ExponentVector& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

} // namespace ncdisc

#endif
