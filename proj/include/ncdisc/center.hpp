// The free central subalgebra R = k[x1^d1, ..., xn^dn], the finite basis
// box of A over R, exact decomposition of elements into R-combinations of
// box monomials, and the regular trace.

#ifndef NCDISC_CENTER_HPP
#define NCDISC_CENTER_HPP

#include <map>
#include <vector>

#include "ncdisc/algebra.hpp"
#include "ncdisc/poly_matrix.hpp"

namespace ncdisc {

struct CenterSpec {
    AlgebraSpecPtr algebra;
    std::vector<int> powers; // d_i >= 1, z_i = x_i^{d_i}
    long rank;               // prod d_i
    // box monomials 0 <= e_i < d_i, ascending degree, x1-heavy first
    std::vector<ExponentVector> box;
    std::map<ExponentVector, int, BoxOrderAsc> box_index;

    int position(const ExponentVector& e) const;
};

// Validates d_i >= 1, rank <= max_rank (SizeLimit) and that every x_i^{d_i}
// commutes with every generator (NotCentral with the offending pair).
CenterSpec make_center(AlgebraSpecPtr algebra, std::vector<int> powers,
                       long max_rank = 64);

// Components of f over R aligned with the basis box: f = sum_b comp[b](z) X_b.
using CenterDecomposition = std::vector<CommPoly>;

CenterDecomposition decompose(const CenterSpec& c, const NCPoly& f);
NCPoly recompose(const CenterSpec& c, const CenterDecomposition& parts);

// r(z1..zn) as an algebra element (z_i substituted by x_i^{d_i}).
NCPoly lift_central(const CenterSpec& c, const CommPoly& r);

// Matrix of left multiplication by f on the basis box, entries in R.
PolyMatrix left_mult_matrix(const CenterSpec& c, const NCPoly& f);

CommPoly regular_trace(const CenterSpec& c, const NCPoly& f);

} // namespace ncdisc

#endif
