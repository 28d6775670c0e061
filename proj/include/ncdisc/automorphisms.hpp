#ifndef NCDISC_AUTOMORPHISMS_HPP
#define NCDISC_AUTOMORPHISMS_HPP

#include <string>
#include <utility>
#include <vector>

#include "ncdisc/algebra.hpp"
#include "ncdisc/center.hpp"
#include "ncdisc/comm_poly.hpp"
#include "ncdisc/morphisms.hpp"

namespace ncdisc {

// Scaling solutions over one connected component of the constraint graph.
// Every vertex v in the component has r_v = base_v * lambda^{exponent_v}
// for a single parameter lambda; lambda either ranges over K^x (free) or
// over the finitely many listed values (pinned).
struct ScalingComponent {
    std::vector<int> vertices;              // generator indices, ascending
    std::vector<Coefficient> base;          // aligned with vertices
    std::vector<int> exponent;              // +1 or -1, aligned with vertices
    bool pinned = false;
    std::vector<Coefficient> lambda_values; // populated when pinned
};

// One admissible permutation together with all scalings that solve the
// relation constraints: x_i -> r_i x_{sigma[i]} (0-based).
struct MonomialAutFamily {
    std::vector<int> sigma;
    std::vector<ScalingComponent> components;

    int torus_dim() const;        // number of free components
    long component_count() const; // connected components of the solution set
};

struct AutGroupDescription {
    AlgebraSpecPtr algebra;
    std::vector<MonomialAutFamily> families;
    long symmetry_index = 0; // sum of family component counts
    int symmetry_rank = 0;   // common torus dimension
    bool rank_uniform = true;
    std::string structure;    // e.g. "S4 x {+-1}; |S| = 48; rank = 0"
    std::string completeness; // whether the list is known to be all of Aut
};

// Plain data form of a monomial map, convenient for composition tables.
struct MonomialMapData {
    std::vector<int> sigma;
    std::vector<Coefficient> r;
};

MonomialMapData compose_monomial(const MonomialMapData& outer,
                                 const MonomialMapData& inner);
MonomialMapData inverse_monomial(const MonomialMapData& m);
bool same_monomial(const MonomialMapData& a, const MonomialMapData& b);
GeneratorMap to_generator_map(const AlgebraSpecPtr& spec,
                              const MonomialMapData& m);

// Solves g(x_j)g(x_i) = q_ij g(x_i)g(x_j) + a_ij for all maps
// x_i -> r_i x_{sigma(i)} over degree-preserving permutations sigma.
// Each admitted sigma yields one family; the multiplicative system on the
// r_i is solved exactly by spanning-tree propagation per component of the
// constraint graph, with cycle conditions either checked (even cycles) or
// pinning lambda^2 (odd cycles, resolved by square roots in K).
AutGroupDescription enumerate_monomial_automorphisms(const AlgebraSpecPtr& spec,
                                                     int max_generators = 8);

// One lambda per component; pinned components must use a listed value.
GeneratorMap family_member(const AlgebraSpecPtr& spec,
                           const MonomialAutFamily& fam,
                           const std::vector<Coefficient>& lambdas);
MonomialMapData family_member_data(const MonomialAutFamily& fam, int n,
                                   const std::vector<Coefficient>& lambdas);

// All members of a fully pinned family (torus_dim() == 0).
std::vector<MonomialMapData> explicit_member_data(const MonomialAutFamily& fam,
                                                  int n);
std::vector<GeneratorMap> explicit_members(const AlgebraSpecPtr& spec,
                                           const MonomialAutFamily& fam);

std::string completeness_label(bool dominating_sufficient);

// Applies the induced action z_i -> r_i^{d_i} z_{sigma(i)} to raw_det and
// returns the unit by which it differs from raw_det.
Coefficient discriminant_invariance_unit(const CenterSpec& c,
                                         const CommPoly& raw_det,
                                         const std::vector<int>& sigma,
                                         const std::vector<Coefficient>& r);

// For odd n: x_i -> x_i (i < n), x_n -> x_n + f(x_1^2,..,x_{n-1}^2) * Omega,
// with Omega the antisymmetrizer of x_1..x_{n-1}; returns the map and its
// inverse (built from -f), both verified.
std::pair<GeneratorMap, GeneratorMap> build_elementary_odd_aut(
    int n, const CommPoly& f);

} // namespace ncdisc

#endif
