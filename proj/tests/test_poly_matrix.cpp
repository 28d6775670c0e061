#include <doctest.h>

#include "ncdisc/errors.hpp"
#include "ncdisc/poly_matrix.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace ncdisc;
using namespace ncdisc::testsupport;

namespace {

FieldPtr Q() { return MinimalPolynomial::rationals(); }

} // namespace

TEST_SUITE("poly_matrix") {

TEST_CASE("identity, transpose, product") {
    PolyMatrix id = PolyMatrix::identity(3, 2, Q());
    CHECK(bareiss_determinant(id) == CommPoly::one(2, Q()));

    CommPoly z1 = CommPoly::variable(2, Q(), 0);
    CommPoly z2 = CommPoly::variable(2, Q(), 1);
    PolyMatrix m(2, 2, CommPoly::zero(2, Q()));
    m.at(0, 0) = z1;
    m.at(0, 1) = CommPoly::one(2, Q());
    m.at(1, 1) = z2;
    PolyMatrix t = m.transpose();
    CHECK(t.at(1, 0) == CommPoly::one(2, Q()));
    CHECK(t.at(0, 1).is_zero());
    PolyMatrix p = m * PolyMatrix::identity(2, 2, Q());
    CHECK(p == m);
    CHECK(bareiss_determinant(m) == z1 * z2);
}

TEST_CASE("zero row gives zero determinant") {
    PolyMatrix m(3, 3, CommPoly::zero(1, Q()));
    CommPoly z1 = CommPoly::variable(1, Q(), 0);
    m.at(0, 0) = z1;
    m.at(0, 2) = z1 * z1;
    m.at(2, 1) = z1;
    CHECK(bareiss_determinant(m).is_zero());
}

TEST_CASE("block structure is handled exactly") {
    // Two independent blocks {0,2} and {1,3}.
    CommPoly z1 = CommPoly::variable(2, Q(), 0);
    CommPoly z2 = CommPoly::variable(2, Q(), 1);
    CommPoly one = CommPoly::one(2, Q());
    PolyMatrix m(4, 4, CommPoly::zero(2, Q()));
    m.at(0, 0) = z1;
    m.at(0, 2) = one;
    m.at(2, 0) = one;
    m.at(2, 2) = z2;
    m.at(1, 1) = z2;
    m.at(1, 3) = z1;
    m.at(3, 1) = one + one;
    m.at(3, 3) = z1 * z2;
    CHECK(bareiss_determinant(m) == cofactor_determinant(m));
}

TEST_CASE("determinant matches the cofactor oracle on random matrices") {
    Rng rng(301);
    FieldPtr f4 = MinimalPolynomial::cyclotomic(4);
    int cases = 0;
    while (cases < 120) {
        int n = static_cast<int>(rand_long(rng, 1, 4));
        const FieldPtr& f = (cases % 3 == 0) ? f4 : Q();
        int vars = static_cast<int>(rand_long(rng, 1, 2));
        PolyMatrix m(n, n, CommPoly::zero(vars, f));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (rand_long(rng, 0, 3) != 0)
                    m.at(i, j) = rand_commpoly(rng, vars, f, 2, 2);
        CHECK(bareiss_determinant(m) == cofactor_determinant(m));
        ++cases;
    }
    CHECK(cases >= 100);
}

TEST_CASE("multiplicativity of the determinant") {
    Rng rng(302);
    for (int k = 0; k < 40; ++k) {
        int n = static_cast<int>(rand_long(rng, 1, 3));
        PolyMatrix a(n, n, CommPoly::zero(1, Q()));
        PolyMatrix b(n, n, CommPoly::zero(1, Q()));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                a.at(i, j) = rand_commpoly(rng, 1, Q(), 2, 2);
                b.at(i, j) = rand_commpoly(rng, 1, Q(), 2, 2);
            }
        CHECK(bareiss_determinant(a * b) ==
              bareiss_determinant(a) * bareiss_determinant(b));
    }
}

TEST_CASE("shape errors") {
    PolyMatrix m(2, 3, CommPoly::zero(1, Q()));
    PolyMatrix n(2, 2, CommPoly::zero(1, Q()));
    CHECK_THROWS_AS(m * m, DimensionMismatchError);
    CHECK_THROWS_AS(m + n, DimensionMismatchError);
    CHECK_THROWS_AS(bareiss_determinant(m), DimensionMismatchError);
    CHECK_THROWS_AS(m.at(2, 0), IndexError);
}

} // TEST_SUITE
