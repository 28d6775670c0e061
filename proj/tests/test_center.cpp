#include <doctest.h>

#include "ncdisc/center.hpp"
#include "ncdisc/errors.hpp"
#include "support.hpp"

using namespace ncdisc;
using namespace ncdisc::testsupport;

namespace {

FieldPtr Q() { return MinimalPolynomial::rationals(); }

} // namespace

TEST_SUITE("center") {

TEST_CASE("basis box listing order") {
    auto w2 = make_wn(2, Q());
    CenterSpec c = make_center(w2, {2, 2});
    CHECK(c.rank == 4);
    REQUIRE(c.box.size() == 4);
    CHECK(c.box[0] == ExponentVector{0, 0});
    CHECK(c.box[1] == ExponentVector{1, 0});
    CHECK(c.box[2] == ExponentVector{0, 1});
    CHECK(c.box[3] == ExponentVector{1, 1});
    CHECK(c.position(ExponentVector{1, 1}) == 3);
    CHECK_THROWS_AS(c.position(ExponentVector{2, 0}), IndexError);
}

TEST_CASE("non-central declarations are rejected with the offending pair") {
    auto w2 = make_wn(2, Q());
    try {
        make_center(w2, {1, 2});
        FAIL("expected NotCentral");
    } catch (const NotCentralError& e) {
        CHECK(e.i() == 1);
        CHECK(e.j() == 2);
    }

    FieldPtr f3 = MinimalPolynomial::cyclotomic(3);
    Coefficient w = Coefficient::zeta(f3);
    auto kq = make_algebra("kq", 2, f3, {w}, {Coefficient::zero(f3)});
    CHECK_NOTHROW(make_center(kq, {3, 3}));
    CHECK_THROWS_AS(make_center(kq, {2, 3}), NotCentralError);
}

TEST_CASE("size and validity limits") {
    auto w2 = make_wn(2, Q());
    CHECK_THROWS_AS(make_center(w2, {2, 2}, 3), SizeLimitError);
    CHECK_THROWS_AS(make_center(w2, {0, 2}), PreconditionViolationError);
    CHECK_THROWS_AS(make_center(w2, {2}), DimensionMismatchError);
}

TEST_CASE("decompose and recompose are mutually inverse") {
    Rng rng(501);
    auto w2 = make_wn(2, Q());
    CenterSpec c2 = make_center(w2, {2, 2});
    auto v3 = rand_skew(rng, "V3", 3, Q());
    CenterSpec c3 = make_center(v3, {2, 2, 2});
    for (int k = 0; k < 50; ++k) {
        const CenterSpec& c = (k % 2 == 0) ? c2 : c3;
        NCPoly f = rand_ncpoly(rng, c.algebra, 4, 5);
        CenterDecomposition parts = decompose(c, f);
        CHECK(static_cast<long>(parts.size()) == c.rank);
        CHECK(recompose(c, parts) == f);
    }
}

TEST_CASE("central lifts commute and multiply centrally") {
    Rng rng(502);
    auto w2 = make_wn(2, Q());
    CenterSpec c = make_center(w2, {2, 2});
    for (int k = 0; k < 25; ++k) {
        CommPoly r = rand_commpoly(rng, 2, Q(), 3, 2);
        NCPoly lifted = lift_central(c, r);
        NCPoly f = rand_ncpoly(rng, w2, 3, 3);
        CHECK(lifted * f == f * lifted);
    }
    CommPoly z1z2 = CommPoly::variable(2, Q(), 0) * CommPoly::variable(2, Q(), 1);
    NCPoly x1 = NCPoly::generator(w2, 0);
    NCPoly x2 = NCPoly::generator(w2, 1);
    CHECK(lift_central(c, z1z2) == pow(x1, 2) * pow(x2, 2));
}

TEST_CASE("trace values on the quadratic box") {
    auto w2 = make_wn(2, Q());
    CenterSpec c = make_center(w2, {2, 2});
    NCPoly x1 = NCPoly::generator(w2, 0);
    NCPoly x2 = NCPoly::generator(w2, 1);
    FieldPtr q = Q();
    auto k = [&](long v) {
        return CommPoly::constant(2, Coefficient::from_integer(q, v));
    };
    CommPoly z1 = CommPoly::variable(2, q, 0);
    CommPoly z2 = CommPoly::variable(2, q, 1);
    CHECK(regular_trace(c, NCPoly::one(w2)) == k(4));
    CHECK(regular_trace(c, x1).is_zero());
    CHECK(regular_trace(c, x2).is_zero());
    CHECK(regular_trace(c, x1 * x2) == k(2));
    CHECK(regular_trace(c, pow(x1, 2)) == k(4) * z1);
    CHECK(regular_trace(c, pow(x1 * x2, 2)) == k(-4) * z1 * z2 + k(2));
}

TEST_CASE("left multiplication matrix represents the product") {
    Rng rng(503);
    auto w2 = make_wn(2, Q());
    CenterSpec c = make_center(w2, {2, 2});
    for (int k = 0; k < 20; ++k) {
        NCPoly f = rand_ncpoly(rng, w2, 3, 3);
        PolyMatrix m = left_mult_matrix(c, f);
        // column j lists the components of f * box_j
        for (int j = 0; j < c.rank; ++j) {
            NCPoly prod =
                f * NCPoly::monomial(w2, c.box[static_cast<size_t>(j)],
                                     Coefficient::one(Q()));
            CenterDecomposition parts = decompose(c, prod);
            for (int i = 0; i < c.rank; ++i)
                CHECK(m.at(i, j) == parts[static_cast<size_t>(i)]);
        }
    }
}

TEST_CASE("one-generator polynomial ring over its square") {
    auto poly = make_algebra("k[x]", 1, Q(), {}, {});
    CenterSpec c = make_center(poly, {2});
    NCPoly x = NCPoly::generator(poly, 0);
    CommPoly z1 = CommPoly::variable(1, Q(), 0);
    Coefficient two = Coefficient::from_integer(Q(), 2);
    CHECK(regular_trace(c, x).is_zero());
    CHECK(regular_trace(c, pow(x, 2)) == CommPoly::constant(1, two) * z1);
}

} // TEST_SUITE
