#include "ncdisc/automorphisms.hpp"

#include <algorithm>
#include <optional>

#include "ncdisc/errors.hpp"

namespace ncdisc {

int MonomialAutFamily::torus_dim() const {
    int d = 0;
    for (const auto& comp : components)
        if (!comp.pinned) ++d;
    return d;
}

long MonomialAutFamily::component_count() const {
    long c = 1;
    for (const auto& comp : components)
        if (comp.pinned) c *= static_cast<long>(comp.lambda_values.size());
    return c;
}

MonomialMapData compose_monomial(const MonomialMapData& outer,
                                 const MonomialMapData& inner) {
    const size_t n = inner.sigma.size();
    if (outer.sigma.size() != n || outer.r.size() != n || inner.r.size() != n)
        throw DimensionMismatchError("monomial maps act on different ranks");
    MonomialMapData out;
    out.sigma.resize(n);
    out.r.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        const size_t mid = static_cast<size_t>(inner.sigma[i]);
        out.sigma[i] = outer.sigma[mid];
        out.r.push_back(inner.r[i] * outer.r[mid]);
    }
    return out;
}

MonomialMapData inverse_monomial(const MonomialMapData& m) {
    const size_t n = m.sigma.size();
    MonomialMapData out;
    out.sigma.resize(n);
    std::vector<size_t> pre(n);
    for (size_t i = 0; i < n; ++i) {
        out.sigma[static_cast<size_t>(m.sigma[i])] = static_cast<int>(i);
        pre[static_cast<size_t>(m.sigma[i])] = i;
    }
    for (size_t j = 0; j < n; ++j) out.r.push_back(m.r[pre[j]].inverse());
    return out;
}

bool same_monomial(const MonomialMapData& a, const MonomialMapData& b) {
    if (a.sigma != b.sigma || a.r.size() != b.r.size()) return false;
    for (size_t i = 0; i < a.r.size(); ++i)
        if (!(a.r[i] == b.r[i])) return false;
    return true;
}

GeneratorMap to_generator_map(const AlgebraSpecPtr& spec,
                              const MonomialMapData& m) {
    return monomial_map(spec, m.sigma, m.r);
}

namespace {

struct Edge {
    int u, v;
    Coefficient t; // r_u * r_v = t
};

long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Solves the system {r_u r_v = t_e} exactly. Returns the component list,
// or nothing when the system has no solution in K^x.
std::optional<std::vector<ScalingComponent>> solve_scalings(
    int n, const std::vector<Edge>& edges, const FieldPtr& field) {
    std::vector<std::vector<std::pair<int, int>>> adj(
        static_cast<size_t>(n)); // vertex -> (neighbor, edge index)
    for (size_t e = 0; e < edges.size(); ++e) {
        adj[static_cast<size_t>(edges[e].u)].push_back(
            {edges[e].v, static_cast<int>(e)});
        adj[static_cast<size_t>(edges[e].v)].push_back(
            {edges[e].u, static_cast<int>(e)});
    }
    std::vector<int> comp_of(static_cast<size_t>(n), -1);
    std::vector<Coefficient> base(static_cast<size_t>(n),
                                  Coefficient::one(field));
    std::vector<int> expo(static_cast<size_t>(n), 1);
    std::vector<ScalingComponent> comps;
    std::vector<char> tree_edge(edges.size(), 0);

    for (int root = 0; root < n; ++root) {
        if (comp_of[static_cast<size_t>(root)] >= 0) continue;
        const int cid = static_cast<int>(comps.size());
        std::vector<int> members;
        std::vector<int> queue{root};
        comp_of[static_cast<size_t>(root)] = cid;
        base[static_cast<size_t>(root)] = Coefficient::one(field);
        expo[static_cast<size_t>(root)] = 1;
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            members.push_back(u);
            for (auto [v, e] : adj[static_cast<size_t>(u)]) {
                if (comp_of[static_cast<size_t>(v)] >= 0) continue;
                tree_edge[static_cast<size_t>(e)] = 1;
                comp_of[static_cast<size_t>(v)] = cid;
                base[static_cast<size_t>(v)] =
                    edges[static_cast<size_t>(e)].t *
                    base[static_cast<size_t>(u)].inverse();
                expo[static_cast<size_t>(v)] = -expo[static_cast<size_t>(u)];
                queue.push_back(v);
            }
        }
        std::sort(members.begin(), members.end());
        ScalingComponent comp;
        comp.vertices = members;
        for (int v : members) {
            comp.base.push_back(base[static_cast<size_t>(v)]);
            comp.exponent.push_back(expo[static_cast<size_t>(v)]);
        }
        comps.push_back(std::move(comp));
    }

    // cycle conditions
    std::vector<std::optional<Coefficient>> pin(comps.size());
    for (size_t e = 0; e < edges.size(); ++e) {
        if (tree_edge[e]) continue;
        const int u = edges[e].u, v = edges[e].v;
        const int cid = comp_of[static_cast<size_t>(u)];
        Coefficient prod =
            base[static_cast<size_t>(u)] * base[static_cast<size_t>(v)];
        const int se =
            expo[static_cast<size_t>(u)] + expo[static_cast<size_t>(v)];
        if (se == 0) {
            if (!(prod == edges[e].t)) return std::nullopt;
            continue;
        }
        // lambda^2 is forced: lambda^{se} = t / prod
        Coefficient rho = se > 0 ? edges[e].t * prod.inverse()
                                 : prod * edges[e].t.inverse();
        auto& slot = pin[static_cast<size_t>(cid)];
        if (slot && !(*slot == rho)) return std::nullopt;
        slot = rho;
    }
    for (size_t c = 0; c < comps.size(); ++c) {
        if (!pin[c]) continue;
        auto s = field_sqrt(*pin[c]);
        if (!s) return std::nullopt;
        comps[c].pinned = true;
        Coefficient neg = -*s;
        if (Coefficient::compare(*s, neg) <= 0)
            comps[c].lambda_values = {*s, neg};
        else
            comps[c].lambda_values = {neg, *s};
    }
    return comps;
}

std::string structure_text(const AutGroupDescription& d) {
    const int n = d.algebra->gen_count();
    const long full = factorial(n);
    const bool all_perms = static_cast<long>(d.families.size()) == full;
    const FieldPtr& field = d.algebra->field();
    std::string group;
    if (all_perms && d.rank_uniform && d.symmetry_rank == 0) {
        // check that every family's members scale all generators by a
        // common sign
        bool sign_only = true;
        Coefficient one = Coefficient::one(field);
        for (const auto& fam : d.families) {
            auto mems = explicit_member_data(fam, n);
            if (mems.size() != 2) sign_only = false;
            for (const auto& m : mems) {
                for (const auto& ri : m.r)
                    if (!(ri == m.r[0])) sign_only = false;
                if (!(m.r[0] == one) && !(m.r[0] == -one)) sign_only = false;
            }
            if (!sign_only) break;
        }
        if (sign_only) group = "S" + std::to_string(n) + " × {±1}";
    } else if (all_perms && d.symmetry_rank == n) {
        if (n == 2)
            group = "S2 ⋉ (K^×)^2";
        else
            group = "S" + std::to_string(n) + " ⋉ (K^×)^" +
                    std::to_string(n);
    } else if (all_perms && n == 2 && d.symmetry_rank == 1) {
        group = "S2 ⋉ K^×";
    }
    if (group.empty())
        group = std::to_string(d.families.size()) + " of " +
                std::to_string(full) + " permutations";
    return group + "; |S| = " + std::to_string(d.symmetry_index) +
           "; rank = " + std::to_string(d.symmetry_rank);
}

} // namespace

AutGroupDescription enumerate_monomial_automorphisms(const AlgebraSpecPtr& spec,
                                                     int max_generators) {
    const int n = spec->gen_count();
    if (n > max_generators)
        throw SizeLimitError("permutation enumeration capped at " +
                             std::to_string(max_generators) + " generators");
    const FieldPtr& field = spec->field();
    const Coefficient one = Coefficient::one(field);

    AutGroupDescription out;
    out.algebra = spec;
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            if (spec->degree_of(perm[static_cast<size_t>(i)]) !=
                spec->degree_of(i))
                ok = false;
        if (!ok) continue;

        std::vector<Edge> edges;
        for (int i = 0; i < n && ok; ++i) {
            for (int j = i + 1; j < n && ok; ++j) {
                const int si = perm[static_cast<size_t>(i)];
                const int sj = perm[static_cast<size_t>(j)];
                Coefficient target_a(Coefficient::zero(field));
                if (si < sj) {
                    if (!(spec->q(si, sj) == spec->q(i, j))) {
                        ok = false;
                        break;
                    }
                    target_a = spec->a(si, sj);
                } else {
                    if (!(spec->q(i, j) * spec->q(sj, si) == one)) {
                        ok = false;
                        break;
                    }
                    target_a = spec->a(sj, si);
                }
                const Coefficient& aij = spec->a(i, j);
                if (target_a.is_zero() != aij.is_zero()) {
                    ok = false;
                    break;
                }
                if (aij.is_zero()) continue;
                // r_i r_j * target_a = aij (direct) or -q^{-1} aij (reversed)
                Coefficient rhs = si < sj
                                      ? aij
                                      : -(spec->q(i, j).inverse() * aij);
                edges.push_back({i, j, rhs * target_a.inverse()});
            }
        }
        if (!ok) continue;
        auto comps = solve_scalings(n, edges, field);
        if (!comps) continue;
        MonomialAutFamily fam;
        fam.sigma = perm;
        fam.components = std::move(*comps);
        out.families.push_back(std::move(fam));
    } while (std::next_permutation(perm.begin(), perm.end()));

    out.symmetry_index = 0;
    out.rank_uniform = true;
    for (size_t f = 0; f < out.families.size(); ++f) {
        out.symmetry_index += out.families[f].component_count();
        if (out.families[f].torus_dim() != out.families[0].torus_dim())
            out.rank_uniform = false;
    }
    out.symmetry_rank =
        out.families.empty() ? 0 : out.families[0].torus_dim();
    out.structure = structure_text(out);
    out.completeness = completeness_label(false);
    return out;
}

MonomialMapData family_member_data(const MonomialAutFamily& fam, int n,
                                   const std::vector<Coefficient>& lambdas) {
    if (lambdas.size() != fam.components.size())
        throw PreconditionViolationError(
            "need one parameter per scaling component");
    if (lambdas.empty())
        throw PreconditionViolationError("family has no components");
    const FieldPtr& field = lambdas.front().field();
    MonomialMapData out;
    out.sigma = fam.sigma;
    out.r.assign(static_cast<size_t>(n), Coefficient::zero(field));
    for (size_t c = 0; c < fam.components.size(); ++c) {
        const auto& comp = fam.components[c];
        const Coefficient& lam = lambdas[c];
        if (lam.is_zero())
            throw PreconditionViolationError("scaling parameter must be a unit");
        if (comp.pinned) {
            bool listed = false;
            for (const auto& v : comp.lambda_values)
                if (v == lam) listed = true;
            if (!listed)
                throw PreconditionViolationError(
                    "parameter is not an admissible value for a pinned "
                    "component");
        }
        Coefficient inv = lam.inverse();
        for (size_t k = 0; k < comp.vertices.size(); ++k) {
            out.r[static_cast<size_t>(comp.vertices[k])] =
                comp.base[k] * (comp.exponent[k] > 0 ? lam : inv);
        }
    }
    return out;
}

GeneratorMap family_member(const AlgebraSpecPtr& spec,
                           const MonomialAutFamily& fam,
                           const std::vector<Coefficient>& lambdas) {
    MonomialMapData data =
        family_member_data(fam, spec->gen_count(), lambdas);
    return monomial_map(spec, data.sigma, data.r);
}

std::vector<MonomialMapData> explicit_member_data(const MonomialAutFamily& fam,
                                                  int n) {
    if (fam.torus_dim() != 0)
        throw PreconditionViolationError(
            "family has free parameters; its member set is infinite");
    std::vector<MonomialMapData> out;
    std::vector<size_t> choice(fam.components.size(), 0);
    for (;;) {
        std::vector<Coefficient> lambdas;
        for (size_t c = 0; c < fam.components.size(); ++c)
            lambdas.push_back(fam.components[c].lambda_values[choice[c]]);
        out.push_back(family_member_data(fam, n, lambdas));
        size_t c = 0;
        while (c < choice.size()) {
            if (++choice[c] < fam.components[c].lambda_values.size()) break;
            choice[c] = 0;
            ++c;
        }
        if (c == choice.size()) break;
    }
    return out;
}

std::vector<GeneratorMap> explicit_members(const AlgebraSpecPtr& spec,
                                           const MonomialAutFamily& fam) {
    std::vector<GeneratorMap> out;
    for (const auto& data : explicit_member_data(fam, spec->gen_count()))
        out.push_back(monomial_map(spec, data.sigma, data.r));
    return out;
}

std::string completeness_label(bool dominating_sufficient) {
    return dominating_sufficient ? "complete (dominating discriminant)"
                                 : "monomial automorphisms only";
}

Coefficient discriminant_invariance_unit(const CenterSpec& c,
                                         const CommPoly& raw_det,
                                         const std::vector<int>& sigma,
                                         const std::vector<Coefficient>& r) {
    const int n = c.algebra->gen_count();
    if (static_cast<int>(sigma.size()) != n ||
        static_cast<int>(r.size()) != n)
        throw DimensionMismatchError(
            "automorphism data does not match the generator count");
    for (int i = 0; i < n; ++i)
        if (c.powers[static_cast<size_t>(sigma[static_cast<size_t>(i)])] !=
            c.powers[static_cast<size_t>(i)])
            throw PreconditionViolationError(
                "permutation does not preserve the declared center powers");
    std::vector<Coefficient> scale;
    scale.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        scale.push_back(r[static_cast<size_t>(i)].pow(
            c.powers[static_cast<size_t>(i)]));
    CommPoly mapped = map_variables(raw_det, n, sigma, scale);
    auto unit = equal_up_to_unit(mapped, raw_det);
    if (!unit)
        throw InvarianceViolatedError(
            "discriminant is not stable under the induced center map");
    return *unit;
}

std::pair<GeneratorMap, GeneratorMap> build_elementary_odd_aut(
    int n, const CommPoly& f) {
    if (n < 3 || n % 2 == 0)
        throw PreconditionViolationError(
            "elementary maps of this form exist for odd n >= 3");
    if (f.var_count() != n - 1)
        throw DimensionMismatchError(
            "coefficient polynomial must use one variable per fixed "
            "generator");
    const FieldPtr& field = f.field();
    AlgebraSpecPtr wn = make_wn(n, field);

    NCPoly lifted(wn);
    for (const auto& [e, coeff] : f.terms()) {
        ExponentVector doubled(static_cast<size_t>(n), 0);
        for (int i = 0; i + 1 < n; ++i)
            doubled[static_cast<size_t>(i)] = 2 * e[static_cast<size_t>(i)];
        lifted.add_term(doubled, coeff);
    }
    std::vector<NCPoly> factors;
    for (int i = 0; i + 1 < n; ++i)
        factors.push_back(NCPoly::generator(wn, i));
    NCPoly shift = lifted * antisymmetrized_product(factors, n);

    std::vector<NCPoly> gi, hi;
    for (int i = 0; i + 1 < n; ++i) {
        gi.push_back(NCPoly::generator(wn, i));
        hi.push_back(NCPoly::generator(wn, i));
    }
    gi.push_back(NCPoly::generator(wn, n - 1) + shift);
    hi.push_back(NCPoly::generator(wn, n - 1) - shift);
    GeneratorMap g = make_generator_map(wn, wn, gi);
    GeneratorMap h = make_generator_map(wn, wn, hi);
    require_homomorphism(g);
    require_homomorphism(h);
    if (!verify_inverse_pair(g, h))
        throw NotAHomomorphismError("candidate pair is not mutually inverse");
    return {g, h};
}

} // namespace ncdisc
