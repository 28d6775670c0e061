#include "ncdisc/discriminant.hpp"

#include <algorithm>
#include <optional>

#include "ncdisc/errors.hpp"
#include "ncdisc/parallel.hpp"

namespace ncdisc {

PolyMatrix trace_matrix(const CenterSpec& c) {
    const int w = static_cast<int>(c.rank);
    const int n = c.algebra->gen_count();
    const FieldPtr& field = c.algebra->field();
    PolyMatrix m(w, w, CommPoly::zero(n, field));
    // tr(ab) = tr(ba), so only the upper triangle is computed
    parallel_for(0, static_cast<long>(w) * (w + 1) / 2, [&](long t) {
        // t-th pair (i, j) with i <= j in row-major upper-triangle order
        long i = 0;
        long remaining = t;
        while (remaining >= w - i) {
            remaining -= w - i;
            ++i;
        }
        long j = i + remaining;
        NCPoly prod =
            NCPoly::monomial(c.algebra, c.box[static_cast<size_t>(i)],
                             Coefficient::one(field)) *
            NCPoly::monomial(c.algebra, c.box[static_cast<size_t>(j)],
                             Coefficient::one(field));
        m.at(static_cast<int>(i), static_cast<int>(j)) =
            regular_trace(c, prod);
    });
    for (int i = 0; i < w; ++i)
        for (int j = 0; j < i; ++j) m.at(i, j) = m.at(j, i);
    return m;
}

std::vector<int> center_weights(const CenterSpec& c) {
    const int n = c.algebra->gen_count();
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        w[static_cast<size_t>(i)] =
            c.powers[static_cast<size_t>(i)] * c.algebra->degree_of(i);
    return w;
}

DiscriminantResult discriminant(const CenterSpec& c) {
    PolyMatrix m = trace_matrix(c);
    CommPoly raw = bareiss_determinant(m);
    DiscriminantResult out{c.rank, raw,
                           CommPoly::zero(raw.var_count(), raw.field()),
                           false};
    if (!raw.is_zero()) {
        PolyTerm p = principal_term(raw, center_weights(c));
        out.principal =
            CommPoly::monomial(raw.var_count(), p.exponent, p.coeff);
        out.dominating_sufficient = is_dominating_sufficient(raw);
    }
    return out;
}

bool base_change_holds(const CenterSpec& c, const PolyMatrix& m) {
    const int w = static_cast<int>(c.rank);
    if (m.rows() != w || m.cols() != w)
        throw DimensionMismatchError("base-change matrix must be rank x rank");
    const FieldPtr& field = c.algebra->field();
    // y_i = sum_j m_ij X_j, traces computed from scratch
    std::vector<NCPoly> y(static_cast<size_t>(w), NCPoly(c.algebra));
    for (int i = 0; i < w; ++i) {
        NCPoly acc(c.algebra);
        for (int j = 0; j < w; ++j) {
            NCPoly xj = NCPoly::monomial(c.algebra, c.box[static_cast<size_t>(j)],
                                         Coefficient::one(field));
            acc += lift_central(c, m.at(i, j)) * xj;
        }
        y[static_cast<size_t>(i)] = acc;
    }
    const int n = c.algebra->gen_count();
    PolyMatrix ty(w, w, CommPoly::zero(n, field));
    parallel_for(0, static_cast<long>(w) * w, [&](long t) {
        int i = static_cast<int>(t / w), j = static_cast<int>(t % w);
        ty.at(i, j) = regular_trace(c, y[static_cast<size_t>(i)] *
                                           y[static_cast<size_t>(j)]);
    });
    CommPoly lhs = bareiss_determinant(ty);
    CommPoly detm = bareiss_determinant(m);
    CommPoly rhs = detm * detm * bareiss_determinant(trace_matrix(c));
    return lhs == rhs;
}

UnitComparison tensor_discriminant_check(const CenterSpec& ca,
                                         const CenterSpec& cb, long max_rank) {
    AlgebraSpecPtr t = tensor_algebra(ca.algebra, cb.algebra);
    std::vector<int> powers = ca.powers;
    powers.insert(powers.end(), cb.powers.begin(), cb.powers.end());
    CenterSpec ct = make_center(t, powers, max_rank);

    CommPoly da = discriminant(ca).raw_det;
    CommPoly db = discriminant(cb).raw_det;
    CommPoly dt = discriminant(ct).raw_det;

    const int na = ca.algebra->gen_count(), nb = cb.algebra->gen_count();
    const FieldPtr& field = t->field();
    std::vector<int> ta(static_cast<size_t>(na)), tb(static_cast<size_t>(nb));
    for (int i = 0; i < na; ++i) ta[static_cast<size_t>(i)] = i;
    for (int i = 0; i < nb; ++i) tb[static_cast<size_t>(i)] = na + i;
    std::vector<Coefficient> ones_a(static_cast<size_t>(na),
                                    Coefficient::one(field));
    std::vector<Coefficient> ones_b(static_cast<size_t>(nb),
                                    Coefficient::one(field));
    CommPoly expected =
        pow(map_variables(da, na + nb, ta, ones_a),
            static_cast<unsigned>(cb.rank)) *
        pow(map_variables(db, na + nb, tb, ones_b),
            static_cast<unsigned>(ca.rank));
    UnitComparison out;
    if (auto u = equal_up_to_unit(dt, expected)) {
        out.ok = true;
        out.unit = *u;
    }
    return out;
}

UnitComparison opposite_discriminant_check(const CenterSpec& ca) {
    AlgebraSpecPtr op = opposite_algebra(ca.algebra);
    CenterSpec cop = make_center(op, ca.powers, ca.rank);
    CommPoly da = discriminant(ca).raw_det;
    CommPoly dop = discriminant(cop).raw_det;
    UnitComparison out;
    if (auto u = equal_up_to_unit(dop, da)) {
        out.ok = true;
        out.unit = *u;
    }
    return out;
}

bool matches_vn_principal_pattern(const CommPoly& raw, int n) {
    if (raw.is_zero()) return false;
    long e = 1L << (n - 1);
    ExponentVector top(static_cast<size_t>(n), static_cast<int>(e));
    if (raw.coefficient(top).is_zero()) return false;
    for (const auto& [ev, coeff] : raw.terms()) {
        if (ev == top) continue;
        if (!componentwise_lt(ev, top)) return false;
    }
    return true;
}

CommPoly antisym_reference_det(int n, const FieldPtr& field) {
    PolyMatrix m(n, n, CommPoly::zero(n, field));
    Coefficient two = Coefficient::from_integer(field, 2);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j)
                m.at(i, j) = CommPoly::variable(n, field, i) * two;
            else
                m.at(i, j) = CommPoly::one(n, field);
        }
    }
    return bareiss_determinant(m);
}

namespace {

// subsets of {0..n-1} listed by size then lexicographically
std::vector<std::vector<int>> subsets_by_size(int n) {
    std::vector<std::vector<int>> all;
    for (long mask = 0; mask < (1L << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1L << i)) s.push_back(i);
        all.push_back(std::move(s));
    }
    std::stable_sort(all.begin(), all.end(),
                     [](const std::vector<int>& a, const std::vector<int>& b) {
                         if (a.size() != b.size()) return a.size() < b.size();
                         return a < b;
                     });
    return all;
}

// minor of m on the given rows/cols
CommPoly minor_det(const PolyMatrix& m, const std::vector<int>& rows,
                   const std::vector<int>& cols, int vars,
                   const FieldPtr& field) {
    const int k = static_cast<int>(rows.size());
    if (k == 0) return CommPoly::one(vars, field);
    PolyMatrix sub(k, k, CommPoly::zero(vars, field));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            sub.at(i, j) = m.at(rows[static_cast<size_t>(i)],
                                cols[static_cast<size_t>(j)]);
    return bareiss_determinant(sub);
}

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

} // namespace

OmegaIdentityReport verify_omega_identities(int n, bool diagnostic,
                                              long max_rank) {
    if (n < 2 || n % 2 != 0)
        throw PreconditionViolationError(
            "antisymmetrizer identities are checked for even n >= 2");
    OmegaIdentityReport rep;
    rep.n = n;
    const FieldPtr field = MinimalPolynomial::rationals();
    AlgebraSpecPtr wn = make_wn(n, field);
    CenterSpec c =
        make_center(wn, std::vector<int>(static_cast<size_t>(n), 2), max_rank);

    std::vector<NCPoly> gens;
    for (int i = 0; i < n; ++i) gens.push_back(NCPoly::generator(wn, i));
    NCPoly omega = antisymmetrized_product(gens, n);
    NCPoly omega_sq = omega * omega;

    CenterDecomposition parts = decompose(c, omega_sq);
    rep.omega_square_in_center = true;
    for (size_t b = 1; b < parts.size(); ++b)
        if (!parts[b].is_zero()) rep.omega_square_in_center = false;

    CommPoly d_ref = antisym_reference_det(n, field);
    if (rep.omega_square_in_center) {
        if (auto u = equal_up_to_unit(parts[0], d_ref)) {
            rep.omega_square_matches = true;
            rep.omega_unit = *u;
        }
    }

    const bool direct = n <= 4;
    rep.method = direct ? "direct" : "antisymmetrizer-basis";
    if (direct) {
        CommPoly raw = discriminant(c).raw_det;
        CommPoly expected = pow(d_ref, 1u << (n - 1));
        if (auto u = equal_up_to_unit(raw, expected)) {
            rep.disc_matches = true;
            rep.disc_unit = *u;
        }
    }

    if (diagnostic || !direct) {
        rep.basis_checked = true;
        auto subsets = subsets_by_size(n);
        const size_t w = subsets.size();
        std::vector<NCPoly> basis;
        basis.reserve(w);
        for (const auto& s : subsets) {
            if (s.empty()) {
                basis.push_back(NCPoly::one(wn));
                continue;
            }
            std::vector<NCPoly> fs;
            for (int i : s) fs.push_back(NCPoly::generator(wn, i));
            basis.push_back(antisymmetrized_product(fs, n));
        }
        PolyMatrix trace_y(static_cast<int>(w), static_cast<int>(w),
                           CommPoly::zero(n, field));
        parallel_for(0, static_cast<long>(w * w), [&](long t) {
            size_t i = static_cast<size_t>(t) / w, j = static_cast<size_t>(t) % w;
            if (i > j) return;
            trace_y.at(static_cast<int>(i), static_cast<int>(j)) =
                regular_trace(c, basis[i] * basis[j]);
        });
        for (size_t i = 0; i < w; ++i)
            for (size_t j = 0; j < i; ++j)
                trace_y.at(static_cast<int>(i), static_cast<int>(j)) =
                    trace_y.at(static_cast<int>(j), static_cast<int>(i));

        rep.off_blocks_vanish = true;
        for (size_t i = 0; i < w; ++i)
            for (size_t j = 0; j < w; ++j)
                if (subsets[i].size() != subsets[j].size() &&
                    !trace_y.at(static_cast<int>(i), static_cast<int>(j))
                         .is_zero())
                    rep.off_blocks_vanish = false;

        // the size-s block should be the matrix of s x s minors of the
        // reference matrix, up to one scalar per block
        PolyMatrix mref(n, n, CommPoly::zero(n, field));
        Coefficient two = Coefficient::from_integer(field, 2);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                mref.at(i, j) = (i == j)
                                    ? CommPoly::variable(n, field, i) * two
                                    : CommPoly::one(n, field);
        rep.blocks_proportional_to_minors = true;
        for (int s = 0; s <= n; ++s) {
            std::vector<size_t> idx;
            for (size_t i = 0; i < w; ++i)
                if (static_cast<int>(subsets[i].size()) == s) idx.push_back(i);
            rep.block_sizes.push_back(static_cast<int>(idx.size()));
            std::optional<Coefficient> unit;
            for (size_t bi = 0; bi < idx.size() &&
                                rep.blocks_proportional_to_minors;
                 ++bi) {
                for (size_t bj = 0; bj < idx.size(); ++bj) {
                    CommPoly mn = minor_det(mref, subsets[idx[bi]],
                                            subsets[idx[bj]], n, field);
                    const CommPoly& trv =
                        trace_y.at(static_cast<int>(idx[bi]),
                                   static_cast<int>(idx[bj]));
                    if (mn.is_zero()) {
                        if (!trv.is_zero()) {
                            rep.blocks_proportional_to_minors = false;
                            break;
                        }
                        continue;
                    }
                    if (!unit) {
                        if (trv.is_zero()) {
                            rep.blocks_proportional_to_minors = false;
                            break;
                        }
                        unit = trv.leading_coefficient() *
                               mn.leading_coefficient().inverse();
                    }
                    if (trv != mn * (*unit)) {
                        rep.blocks_proportional_to_minors = false;
                        break;
                    }
                }
            }
            rep.block_units.push_back(
                unit ? *unit : Coefficient::zero(field));
        }

        // change of basis from the monomial box to the antisymmetrizer
        // basis; entries land in the central subring
        PolyMatrix tmat(static_cast<int>(w), static_cast<int>(w),
                        CommPoly::zero(n, field));
        for (size_t i = 0; i < w; ++i) {
            CenterDecomposition comps = decompose(c, basis[i]);
            for (size_t j = 0; j < w; ++j)
                tmat.at(static_cast<int>(i), static_cast<int>(j)) = comps[j];
        }
        CommPoly det_t = bareiss_determinant(tmat);
        rep.base_change_is_unit = !det_t.is_zero() && det_t.degree() == 0;
        if (rep.base_change_is_unit)
            rep.base_change_det = det_t.leading_coefficient();

        PolyMatrix trace_box = trace_matrix(c);
        rep.congruence_holds =
            tmat * trace_box * tmat.transpose() == trace_y;

        if (!direct && rep.off_blocks_vanish &&
            rep.blocks_proportional_to_minors && rep.base_change_is_unit &&
            rep.congruence_holds) {
            // det(trace_y) = prod_s u_s^{binom(n,s)} * det(C_s(mref)), and
            // det(C_s(mref)) = det(mref)^{binom(n-1,s-1)} by the classical
            // compound-determinant identity; the congruence then gives
            // det(trace_box) = det(T)^{-2} * det(trace_y)
            long exp_sum = 0;
            Coefficient unit_prod = Coefficient::one(field);
            for (int s = 0; s <= n; ++s) {
                exp_sum += binomial(n - 1, s - 1);
                unit_prod = unit_prod *
                            rep.block_units[static_cast<size_t>(s)].pow(
                                binomial(n, s));
            }
            if (exp_sum != (1L << (n - 1)))
                throw InternalInconsistencyError(
                    "compound exponents do not sum to 2^(n-1)");
            rep.disc_matches = true;
            rep.disc_unit =
                rep.base_change_det.pow(-2) * unit_prod;
        }
    }
    return rep;
}

} // namespace ncdisc
