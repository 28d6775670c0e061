#include "ncdisc/center.hpp"

#include <algorithm>

#include "ncdisc/errors.hpp"
#include "ncdisc/parallel.hpp"

namespace ncdisc {

int CenterSpec::position(const ExponentVector& e) const {
    auto it = box_index.find(e);
    if (it == box_index.end())
        throw IndexError("exponent vector is not a box monomial");
    return it->second;
}

CenterSpec make_center(AlgebraSpecPtr algebra, std::vector<int> powers,
                       long max_rank) {
    const int n = algebra->gen_count();
    if (powers.size() != static_cast<size_t>(n))
        throw DimensionMismatchError("expected one power per generator");
    long rank = 1;
    for (int d : powers) {
        if (d < 1)
            throw PreconditionViolationError("central powers must be >= 1");
        if (static_cast<long>(d) > max_rank)
            throw SizeLimitError("rank exceeds bound " + std::to_string(max_rank));
        rank *= d;
        if (rank > max_rank)
            throw SizeLimitError("rank exceeds bound " + std::to_string(max_rank));
    }

    // centrality of each z_i = x_i^{d_i}
    for (int i = 0; i < n; ++i) {
        ExponentVector ze(static_cast<size_t>(n), 0);
        ze[static_cast<size_t>(i)] = powers[static_cast<size_t>(i)];
        NCPoly zi = NCPoly::monomial(algebra, ze, Coefficient::one(algebra->field()));
        for (int j = 0; j < n; ++j) {
            NCPoly xj = NCPoly::generator(algebra, j);
            if (zi * xj != xj * zi)
                throw NotCentralError(i + 1, j + 1,
                                      "commutator of x" + std::to_string(i + 1) +
                                          "^" + std::to_string(powers[static_cast<size_t>(i)]) +
                                          " is nonzero");
        }
    }

    CenterSpec c;
    c.algebra = std::move(algebra);
    c.powers = std::move(powers);
    c.rank = rank;
    ExponentVector e(static_cast<size_t>(n), 0);
    for (;;) {
        c.box.push_back(e);
        int k = n - 1;
        while (k >= 0 && e[static_cast<size_t>(k)] + 1 >= c.powers[static_cast<size_t>(k)]) {
            e[static_cast<size_t>(k)] = 0;
            --k;
        }
        if (k < 0) break;
        e[static_cast<size_t>(k)] += 1;
    }
    std::sort(c.box.begin(), c.box.end(), BoxOrderAsc());
    for (size_t i = 0; i < c.box.size(); ++i)
        c.box_index.emplace(c.box[i], static_cast<int>(i));
    if (static_cast<long>(c.box.size()) != rank)
        throw InternalInconsistencyError("box size does not match rank");
    return c;
}

CenterDecomposition decompose(const CenterSpec& c, const NCPoly& f) {
    require_same_algebra(c.algebra, f.spec());
    const int n = c.algebra->gen_count();
    const FieldPtr& field = c.algebra->field();
    CenterDecomposition parts(static_cast<size_t>(c.rank),
                              CommPoly::zero(n, field));
    ExponentVector box_part(static_cast<size_t>(n));
    ExponentVector z_part(static_cast<size_t>(n));
    for (const auto& [e, coeff] : f.terms()) {
        for (int i = 0; i < n; ++i) {
            int d = c.powers[static_cast<size_t>(i)];
            box_part[static_cast<size_t>(i)] = e[static_cast<size_t>(i)] % d;
            z_part[static_cast<size_t>(i)] = e[static_cast<size_t>(i)] / d;
        }
        parts[static_cast<size_t>(c.position(box_part))].add_term(z_part, coeff);
    }
    return parts;
}

NCPoly recompose(const CenterSpec& c, const CenterDecomposition& parts) {
    if (parts.size() != static_cast<size_t>(c.rank))
        throw DimensionMismatchError("component count does not match rank");
    const int n = c.algebra->gen_count();
    NCPoly acc(c.algebra);
    ExponentVector e(static_cast<size_t>(n));
    for (size_t b = 0; b < parts.size(); ++b) {
        for (const auto& [ze, coeff] : parts[b].terms()) {
            for (int i = 0; i < n; ++i)
                e[static_cast<size_t>(i)] =
                    c.box[b][static_cast<size_t>(i)] +
                    ze[static_cast<size_t>(i)] * c.powers[static_cast<size_t>(i)];
            acc.add_term(e, coeff);
        }
    }
    return acc;
}

NCPoly lift_central(const CenterSpec& c, const CommPoly& r) {
    const int n = c.algebra->gen_count();
    if (r.var_count() != n)
        throw DimensionMismatchError("central polynomial variable count");
    NCPoly acc(c.algebra);
    ExponentVector e(static_cast<size_t>(n));
    for (const auto& [ze, coeff] : r.terms()) {
        for (int i = 0; i < n; ++i)
            e[static_cast<size_t>(i)] =
                ze[static_cast<size_t>(i)] * c.powers[static_cast<size_t>(i)];
        acc.add_term(e, coeff);
    }
    return acc;
}

PolyMatrix left_mult_matrix(const CenterSpec& c, const NCPoly& f) {
    require_same_algebra(c.algebra, f.spec());
    const int n = c.algebra->gen_count();
    const int w = static_cast<int>(c.rank);
    PolyMatrix m(w, w, CommPoly::zero(n, c.algebra->field()));
    parallel_for(0, w, [&](long col) {
        NCPoly prod = f * NCPoly::monomial(c.algebra, c.box[static_cast<size_t>(col)],
                                           Coefficient::one(c.algebra->field()));
        CenterDecomposition parts = decompose(c, prod);
        for (int row = 0; row < w; ++row)
            m.at(row, static_cast<int>(col)) = parts[static_cast<size_t>(row)];
    });
    return m;
}

CommPoly regular_trace(const CenterSpec& c, const NCPoly& f) {
    require_same_algebra(c.algebra, f.spec());
    const int n = c.algebra->gen_count();
    const FieldPtr& field = c.algebra->field();
    const long w = c.rank;
    std::vector<CommPoly> diag(static_cast<size_t>(w), CommPoly::zero(n, field));
    parallel_for(0, w, [&](long b) {
        NCPoly prod = f * NCPoly::monomial(c.algebra, c.box[static_cast<size_t>(b)],
                                           Coefficient::one(field));
        const int nn = n;
        ExponentVector box_part(static_cast<size_t>(nn));
        ExponentVector z_part(static_cast<size_t>(nn));
        CommPoly acc = CommPoly::zero(nn, field);
        for (const auto& [e, coeff] : prod.terms()) {
            bool on_diagonal = true;
            for (int i = 0; i < nn; ++i) {
                int d = c.powers[static_cast<size_t>(i)];
                box_part[static_cast<size_t>(i)] = e[static_cast<size_t>(i)] % d;
                z_part[static_cast<size_t>(i)] = e[static_cast<size_t>(i)] / d;
                if (box_part[static_cast<size_t>(i)] !=
                    c.box[static_cast<size_t>(b)][static_cast<size_t>(i)]) {
                    on_diagonal = false;
                    break;
                }
            }
            if (on_diagonal) acc.add_term(z_part, coeff);
        }
        diag[static_cast<size_t>(b)] = std::move(acc);
    });
    CommPoly tr = CommPoly::zero(n, field);
    for (const auto& d : diag) tr += d;
    return tr;
}

} // namespace ncdisc
