#include <doctest.h>

#include <set>

#include "ncdisc/automorphisms.hpp"
#include "ncdisc/discriminant.hpp"
#include "ncdisc/errors.hpp"
#include "support.hpp"

using namespace ncdisc;
using namespace ncdisc::testsupport;

namespace {

FieldPtr Q() { return MinimalPolynomial::rationals(); }

MonomialMapData identity_map(const FieldPtr& f, int n) {
    MonomialMapData m;
    for (int i = 0; i < n; ++i) {
        m.sigma.push_back(i);
        m.r.push_back(Coefficient::one(f));
    }
    return m;
}

} // namespace

TEST_SUITE("automorphisms") {

TEST_CASE("two-generator group shapes") {
    auto w2 = make_wn(2, Q());
    AutGroupDescription d = enumerate_monomial_automorphisms(w2);
    CHECK(d.families.size() == 2);
    CHECK(d.symmetry_index == 2);
    CHECK(d.symmetry_rank == 1);
    CHECK(d.rank_uniform);
    CHECK(d.structure == "S2 ⋉ K^×; |S| = 2; rank = 1");

    auto km2 = make_kminus1(2, Q());
    AutGroupDescription e = enumerate_monomial_automorphisms(km2);
    CHECK(e.families.size() == 2);
    CHECK(e.symmetry_index == 2);
    CHECK(e.symmetry_rank == 2);
}

TEST_CASE("four-generator explicit group") {
    auto w4 = make_wn(4, Q());
    AutGroupDescription d = enumerate_monomial_automorphisms(w4);
    CHECK(d.families.size() == 24);
    CHECK(d.symmetry_index == 48);
    CHECK(d.symmetry_rank == 0);
    CHECK(d.rank_uniform);
    CHECK(d.structure == "S4 × {±1}; |S| = 48; rank = 0");

    std::vector<MonomialMapData> members;
    for (const auto& fam : d.families) {
        auto part = explicit_member_data(fam, 4);
        CHECK(part.size() == 2);
        members.insert(members.end(), part.begin(), part.end());
    }
    REQUIRE(members.size() == 48);

    // each r is globally 1 or globally -1
    for (const auto& m : members) {
        CHECK((m.r[0].is_one() || m.r[0] == Coefficient::from_integer(Q(), -1)));
        for (const auto& r : m.r) CHECK(r == m.r[0]);
    }

    // all pass the relation check and have their inverse in the set
    auto contains = [&](const MonomialMapData& m) {
        for (const auto& x : members)
            if (same_monomial(x, m)) return true;
        return false;
    };
    for (const auto& m : members) {
        GeneratorMap g = to_generator_map(w4, m);
        CHECK(verify_homomorphism(g).ok);
        CHECK(contains(inverse_monomial(m)));
    }
    CHECK(contains(identity_map(Q(), 4)));

    // closure under composition
    int closed = 0;
    for (const auto& a : members)
        for (const auto& b : members)
            if (contains(compose_monomial(a, b))) ++closed;
    CHECK(closed == 48 * 48);
}

TEST_CASE("free scalings on the fully decoupled algebra") {
    auto km4 = make_kminus1(4, Q());
    AutGroupDescription d = enumerate_monomial_automorphisms(km4);
    CHECK(d.families.size() == 24);
    CHECK(d.symmetry_index == 24);
    CHECK(d.symmetry_rank == 4);
    CHECK(d.structure == "S4 ⋉ (K^×)^4; |S| = 24; rank = 4");
}

TEST_CASE("asymmetric constants restrict the permutations") {
    // a_12 = 1, a_13 = a_23 = 0: only permutations fixing the {1,2} edge.
    FieldPtr f = Q();
    auto spec = make_skew_symmetric(
        "V3a", 3, f,
        {Coefficient::one(f), Coefficient::zero(f), Coefficient::zero(f)});
    AutGroupDescription d = enumerate_monomial_automorphisms(spec);
    CHECK(d.families.size() == 2); // identity and the (1 2) swap
    for (const auto& fam : d.families) CHECK(fam.sigma[2] == 2);
    CHECK(d.symmetry_rank == 2); // {1,2} component pinned; x3 free, sign free
}

TEST_CASE("family members are validated") {
    auto w2 = make_wn(2, Q());
    AutGroupDescription d = enumerate_monomial_automorphisms(w2);
    const MonomialAutFamily& fam = d.families[0];
    REQUIRE(fam.components.size() == 1);
    Coefficient three = Coefficient::from_integer(Q(), 3);
    GeneratorMap g = family_member(w2, fam, {three});
    CHECK(verify_homomorphism(g).ok);
    CHECK_THROWS_AS(family_member(w2, fam, {three, three}),
                    PreconditionViolationError);
    CHECK_THROWS_AS(family_member(w2, fam, {Coefficient::zero(Q())}),
                    PreconditionViolationError);
}

TEST_CASE("composition data behaves like a group") {
    Rng rng(701);
    int n = 4;
    for (int k = 0; k < 50; ++k) {
        MonomialMapData m;
        std::vector<int> sigma{0, 1, 2, 3};
        for (int i = 3; i > 0; --i)
            std::swap(sigma[static_cast<size_t>(i)],
                      sigma[static_cast<size_t>(rand_long(rng, 0, i))]);
        m.sigma = sigma;
        for (int i = 0; i < n; ++i)
            m.r.push_back(rand_nonzero_coefficient(rng, Q()));
        MonomialMapData inv = inverse_monomial(m);
        CHECK(same_monomial(compose_monomial(m, inv), identity_map(Q(), n)));
        CHECK(same_monomial(compose_monomial(inv, m), identity_map(Q(), n)));
    }
}

TEST_CASE("composition matches map composition") {
    Rng rng(702);
    auto km3 = make_kminus1(3, Q());
    for (int k = 0; k < 20; ++k) {
        MonomialMapData a, b;
        a.sigma = {1, 2, 0};
        b.sigma = {0, 2, 1};
        for (int i = 0; i < 3; ++i) {
            a.r.push_back(rand_nonzero_coefficient(rng, Q()));
            b.r.push_back(rand_nonzero_coefficient(rng, Q()));
        }
        GeneratorMap ga = to_generator_map(km3, a);
        GeneratorMap gb = to_generator_map(km3, b);
        GeneratorMap gab = to_generator_map(km3, compose_monomial(a, b));
        NCPoly f = rand_ncpoly(rng, km3, 3, 2);
        CHECK(apply_map(gab, f) == apply_map(ga, apply_map(gb, f)));
    }
}

TEST_CASE("discriminant invariance units") {
    auto w2 = make_wn(2, Q());
    CenterSpec c = make_center(w2, {2, 2});
    CommPoly raw = discriminant(c).raw_det;
    Coefficient mone = Coefficient::from_integer(Q(), -1);
    Coefficient one = Coefficient::one(Q());
    CHECK(discriminant_invariance_unit(c, raw, {0, 1}, {mone, mone}).is_one());
    CHECK(discriminant_invariance_unit(c, raw, {1, 0}, {one, one}).is_one());
    // x1 -> 2 x1 is not an automorphism and must be flagged
    Coefficient two = Coefficient::from_integer(Q(), 2);
    CHECK_THROWS_AS(discriminant_invariance_unit(c, raw, {0, 1}, {two, one}),
                    InvarianceViolatedError);
}

TEST_CASE("non-affine triangular maps verify with their inverses") {
    CommPoly f = CommPoly::variable(2, Q(), 0); // z1, lifted to x1^2
    auto [g, h] = build_elementary_odd_aut(3, f);
    CHECK(!is_affine(g));
    CHECK(verify_homomorphism(g).ok);
    CHECK(verify_inverse_pair(g, h));

    CommPoly cf = CommPoly::one(2, Q());
    auto [g1, h1] = build_elementary_odd_aut(3, cf);
    CHECK(verify_inverse_pair(g1, h1));

    CHECK_THROWS_AS(build_elementary_odd_aut(4, f),
                    PreconditionViolationError);
    CHECK_THROWS_AS(build_elementary_odd_aut(3, CommPoly::one(3, Q())),
                    DimensionMismatchError);
}

TEST_CASE("size limit on enumeration") {
    auto w2 = make_wn(2, Q());
    CHECK_THROWS_AS(enumerate_monomial_automorphisms(w2, 1), SizeLimitError);
}

} // TEST_SUITE
