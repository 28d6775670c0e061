#include <doctest.h>

#include "ncdisc/discriminant.hpp"
#include "ncdisc/errors.hpp"
#include "support.hpp"

using namespace ncdisc;
using namespace ncdisc::testsupport;

namespace {

FieldPtr Q() { return MinimalPolynomial::rationals(); }

CommPoly k2(long v) {
    return CommPoly::constant(2, Coefficient::from_integer(Q(), v));
}

} // namespace

TEST_SUITE("discriminant") {

TEST_CASE("quadratic pair trace matrix") {
    auto w2 = make_wn(2, Q());
    CenterSpec c = make_center(w2, {2, 2});
    PolyMatrix t = trace_matrix(c);
    CommPoly z1 = CommPoly::variable(2, Q(), 0);
    CommPoly z2 = CommPoly::variable(2, Q(), 1);
    CommPoly zero = CommPoly::zero(2, Q());
    const CommPoly want[4][4] = {
        {k2(4), zero, zero, k2(2)},
        {zero, k2(4) * z1, k2(2), zero},
        {zero, k2(2), k2(4) * z2, zero},
        {k2(2), zero, zero, k2(2) - k2(4) * z1 * z2}};
    REQUIRE(t.rows() == 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(t.at(i, j) == want[i][j]);
}

TEST_CASE("quadratic pair discriminant") {
    auto w2 = make_wn(2, Q());
    CenterSpec c = make_center(w2, {2, 2});
    DiscriminantResult d = discriminant(c);
    CommPoly z1 = CommPoly::variable(2, Q(), 0);
    CommPoly z2 = CommPoly::variable(2, Q(), 1);
    // -2^4 (4 z1 z2 - 1)^2
    CommPoly want = k2(-16) * pow(k2(4) * z1 * z2 - k2(1), 2);
    CHECK(d.rank == 4);
    CHECK(d.raw_det == want);
    CHECK(d.principal == k2(-256) * pow(z1, 2) * pow(z2, 2));
    CHECK(d.dominating_sufficient);
    CHECK(center_weights(c) == std::vector<int>{2, 2});
}

TEST_CASE("one-generator discriminant") {
    auto poly = make_algebra("k[x]", 1, Q(), {}, {});
    CenterSpec c = make_center(poly, {2});
    DiscriminantResult d = discriminant(c);
    CommPoly z1 = CommPoly::variable(1, Q(), 0);
    Coefficient four = Coefficient::from_integer(Q(), 4);
    CHECK(d.rank == 2);
    CHECK(d.raw_det == CommPoly::constant(1, four) * z1);
    CHECK(d.dominating_sufficient);
}

TEST_CASE("principal term pattern recognition") {
    CommPoly z1 = CommPoly::variable(2, Q(), 0);
    CommPoly z2 = CommPoly::variable(2, Q(), 1);
    CommPoly good = k2(-3) * pow(z1 * z2, 2) + z1 * z2;
    CHECK(matches_vn_principal_pattern(good, 2));
    CommPoly stray = good + pow(z1, 4);
    CHECK(!matches_vn_principal_pattern(stray, 2));
    CHECK(!matches_vn_principal_pattern(CommPoly::zero(2, Q()), 2));
    CHECK(!matches_vn_principal_pattern(z1 * z2, 2));
}

TEST_CASE("reference determinant for the antisymmetrizer pairing") {
    CommPoly d2 = antisym_reference_det(2, Q());
    CommPoly z1 = CommPoly::variable(2, Q(), 0);
    CommPoly z2 = CommPoly::variable(2, Q(), 1);
    CHECK(d2 == k2(4) * z1 * z2 - k2(1));

    CommPoly d3 = antisym_reference_det(3, Q());
    auto k3 = [&](long v) {
        return CommPoly::constant(3, Coefficient::from_integer(Q(), v));
    };
    CommPoly y1 = CommPoly::variable(3, Q(), 0);
    CommPoly y2 = CommPoly::variable(3, Q(), 1);
    CommPoly y3 = CommPoly::variable(3, Q(), 2);
    CHECK(d3 == k3(8) * y1 * y2 * y3 - k3(2) * y1 - k3(2) * y2 -
                    k3(2) * y3 + k3(2));
}

TEST_CASE("base change by explicit matrices") {
    auto w2 = make_wn(2, Q());
    CenterSpec c = make_center(w2, {2, 2});
    PolyMatrix id = PolyMatrix::identity(4, 2, Q());
    CHECK(base_change_holds(c, id));
    PolyMatrix m = id;
    m.at(0, 3) = CommPoly::variable(2, Q(), 0);
    m.at(2, 1) = k2(3);
    CHECK(base_change_holds(c, m));
    PolyMatrix bad(3, 3, CommPoly::zero(2, Q()));
    CHECK_THROWS_AS(base_change_holds(c, bad), DimensionMismatchError);
}

TEST_CASE("antisymmetrizer verification at n = 2 with exact units") {
    OmegaIdentityReport rep = verify_omega_identities(2, true);
    CHECK(rep.method == "direct");
    CHECK(rep.ok());
    CHECK(rep.omega_unit == Coefficient::from_integer(Q(), -1));
    CHECK(rep.disc_unit == Coefficient::from_integer(Q(), -16));
    REQUIRE(rep.basis_checked);
    CHECK(rep.off_blocks_vanish);
    CHECK(rep.blocks_proportional_to_minors);
    CHECK(rep.congruence_holds);
    CHECK(rep.base_change_is_unit);
    CHECK(rep.base_change_det == Coefficient::from_integer(Q(), 2));
    CHECK(rep.block_sizes == std::vector<int>{1, 2, 1});
    REQUIRE(rep.block_units.size() == 3);
    CHECK(rep.block_units[0] == Coefficient::from_integer(Q(), 4));
    CHECK(rep.block_units[1] == Coefficient::from_integer(Q(), 2));
    CHECK(rep.block_units[2] == Coefficient::from_integer(Q(), -4));
}

TEST_CASE("antisymmetrizer verification rejects odd sizes") {
    CHECK_THROWS_AS(verify_omega_identities(3), PreconditionViolationError);
}

TEST_CASE("tensor and opposite discriminant identities") {
    auto w2 = make_wn(2, Q());
    CenterSpec c = make_center(w2, {2, 2});
    UnitComparison t = tensor_discriminant_check(c, c);
    CHECK(t.ok);
    CHECK(t.unit.is_one());
    UnitComparison o = opposite_discriminant_check(c);
    CHECK(o.ok);
    CHECK(o.unit.is_one());
}

TEST_CASE("random skew instances keep the principal pattern") {
    Rng rng(601);
    for (int k = 0; k < 3; ++k) {
        auto v3 = rand_skew(rng, "V3", 3, Q());
        CenterSpec c = make_center(v3, {2, 2, 2});
        DiscriminantResult d = discriminant(c);
        CHECK(matches_vn_principal_pattern(d.raw_det, 3));
    }
}

} // TEST_SUITE
