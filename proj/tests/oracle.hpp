// Reference determinant by first-row cofactor expansion. Independent of the
// production elimination code; meant for matrices up to 4x4.

#ifndef NCDISC_TESTS_ORACLE_HPP
#define NCDISC_TESTS_ORACLE_HPP

#include "ncdisc/poly_matrix.hpp"

namespace ncdisc {
namespace testsupport {

inline CommPoly cofactor_determinant(const PolyMatrix& m) {
    int n = m.rows();
    const CommPoly& sample = m.at(0, 0);
    if (n == 1) return sample;
    CommPoly det = CommPoly::zero(sample.var_count(), sample.field());
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        PolyMatrix minor(n - 1, n - 1,
                         CommPoly::zero(sample.var_count(), sample.field()));
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        CommPoly contrib = m.at(0, j) * cofactor_determinant(minor);
        if (j % 2 == 0)
            det += contrib;
        else
            det -= contrib;
    }
    return det;
}

} // namespace testsupport
} // namespace ncdisc

#endif
