#include "ncdisc/poly_matrix.hpp"

#include <numeric>
#include <sstream>

#include "ncdisc/errors.hpp"
#include "ncdisc/parallel.hpp"

namespace ncdisc {

PolyMatrix::PolyMatrix(int rows, int cols, const CommPoly& fill)
    : rows_(rows), cols_(cols),
      cells_(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill) {
    if (rows < 0 || cols < 0)
        throw PreconditionViolationError("negative matrix dimension");
}

PolyMatrix PolyMatrix::identity(int n, int var_count, const FieldPtr& field) {
    PolyMatrix m(n, n, CommPoly::zero(var_count, field));
    for (int i = 0; i < n; ++i) m.at(i, i) = CommPoly::one(var_count, field);
    return m;
}

CommPoly& PolyMatrix::at(int i, int j) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw IndexError("matrix index out of range");
    return cells_[static_cast<size_t>(i) * cols_ + j];
}

const CommPoly& PolyMatrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw IndexError("matrix index out of range");
    return cells_[static_cast<size_t>(i) * cols_ + j];
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix out(cols_, rows_, CommPoly());
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool PolyMatrix::operator==(const PolyMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && cells_ == rhs.cells_;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_)
        throw DimensionMismatchError("matrix product shape mismatch");
    if (a.rows_ == 0 || b.cols_ == 0 || a.cols_ == 0)
        throw PreconditionViolationError("empty matrix product");
    const CommPoly zero =
        CommPoly::zero(a.at(0, 0).var_count(), a.at(0, 0).field());
    PolyMatrix out(a.rows_, b.cols_, zero);
    parallel_for(0, static_cast<long>(a.rows_) * b.cols_, [&](long idx) {
        int i = static_cast<int>(idx / b.cols_);
        int j = static_cast<int>(idx % b.cols_);
        CommPoly acc = zero;
        for (int k = 0; k < a.cols_; ++k) acc += a.at(i, k) * b.at(k, j);
        out.at(i, j) = acc;
    });
    return out;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionMismatchError("matrix sum shape mismatch");
    PolyMatrix out = a;
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) out.at(i, j) += b.at(i, j);
    return out;
}

std::string PolyMatrix::to_string() const {
    std::ostringstream out;
    for (int i = 0; i < rows_; ++i) {
        out << "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) out << ", ";
            out << at(i, j).to_string();
        }
        out << "]\n";
    }
    return out.str();
}

namespace {

// Fraction-free elimination on one irreducible block. Entries are consumed.
CommPoly bareiss_block(std::vector<std::vector<CommPoly>>& m, int var_count,
                       const FieldPtr& field) {
    const int n = static_cast<int>(m.size());
    const CommPoly one = CommPoly::one(var_count, field);
    CommPoly prev = one;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        // deterministic pivot: nonzero entry in column k with fewest terms
        int pivot = -1;
        size_t best = 0;
        for (int i = k; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            size_t t = m[i][k].term_count();
            if (pivot < 0 || t < best) {
                pivot = i;
                best = t;
            }
        }
        if (pivot < 0) return CommPoly::zero(var_count, field);
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        parallel_for(k + 1, n, [&](long li) {
            int i = static_cast<int>(li);
            for (int j = k + 1; j < n; ++j) {
                CommPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = exact_divide(num, prev);
            }
            m[i][k] = CommPoly::zero(var_count, field);
        });
        prev = m[k][k];
    }
    CommPoly det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

CommPoly bareiss_determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols())
        throw DimensionMismatchError("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0)
        throw PreconditionViolationError("determinant of empty matrix");
    const int vars = m.at(0, 0).var_count();
    const FieldPtr& field = m.at(0, 0).field();
    if (n == 1) return m.at(0, 0);

    // connected components of the symmetrized nonzero pattern give an exact
    // block-diagonal factorization under a simultaneous permutation
    UnionFind uf(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!m.at(i, j).is_zero() || !m.at(j, i).is_zero()) uf.unite(i, j);

    std::vector<std::vector<int>> blocks;
    {
        std::vector<int> root_to_block(static_cast<size_t>(n), -1);
        for (int i = 0; i < n; ++i) {
            int r = uf.find(i);
            if (root_to_block[static_cast<size_t>(r)] < 0) {
                root_to_block[static_cast<size_t>(r)] =
                    static_cast<int>(blocks.size());
                blocks.emplace_back();
            }
            blocks[static_cast<size_t>(root_to_block[static_cast<size_t>(r)])]
                .push_back(i);
        }
    }

    CommPoly det = CommPoly::one(vars, field);
    for (const auto& idx : blocks) {
        const int bn = static_cast<int>(idx.size());
        std::vector<std::vector<CommPoly>> block(
            static_cast<size_t>(bn),
            std::vector<CommPoly>(static_cast<size_t>(bn),
                                  CommPoly::zero(vars, field)));
        for (int i = 0; i < bn; ++i)
            for (int j = 0; j < bn; ++j)
                block[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    m.at(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(j)]);
        det *= bareiss_block(block, vars, field);
        if (det.is_zero()) return det;
    }
    return det;
}

} // namespace ncdisc
