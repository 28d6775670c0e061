// Dense matrices of commutative polynomials and a fraction-free
// determinant (Bareiss one-step elimination, exact divisions only).

#ifndef NCDISC_POLY_MATRIX_HPP
#define NCDISC_POLY_MATRIX_HPP

#include <vector>

#include "ncdisc/comm_poly.hpp"

namespace ncdisc {

class PolyMatrix {
public:
    PolyMatrix(int rows, int cols, const CommPoly& fill);
    static PolyMatrix identity(int n, int var_count, const FieldPtr& field);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    CommPoly& at(int i, int j);
    const CommPoly& at(int i, int j) const;

    PolyMatrix transpose() const;
    bool operator==(const PolyMatrix& rhs) const;

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);

    std::string to_string() const;

private:
    int rows_;
    int cols_;
    std::vector<CommPoly> cells_;
};

// Exact determinant via block decomposition (connected components of the
// symmetrized nonzero pattern) and fraction-free Bareiss elimination within
// each block. Deterministic for a fixed matrix regardless of worker count.
CommPoly bareiss_determinant(const PolyMatrix& m);

} // namespace ncdisc

#endif
