#include <doctest.h>

#include "ncdisc/algebra.hpp"
#include "ncdisc/errors.hpp"
#include "support.hpp"

using namespace ncdisc;
using namespace ncdisc::testsupport;

namespace {

FieldPtr Q() { return MinimalPolynomial::rationals(); }

} // namespace

TEST_SUITE("algebra") {

TEST_CASE("defining relations rewrite to normal form") {
    auto w2 = make_wn(2, Q());
    NCPoly x1 = NCPoly::generator(w2, 0);
    NCPoly x2 = NCPoly::generator(w2, 1);
    CHECK(x2 * x1 == -(x1 * x2) + NCPoly::one(w2));

    auto km = make_kminus1(2, Q());
    NCPoly y1 = NCPoly::generator(km, 0);
    NCPoly y2 = NCPoly::generator(km, 1);
    CHECK(y2 * y1 == -(y1 * y2));

    FieldPtr f3 = MinimalPolynomial::cyclotomic(3);
    Coefficient w = Coefficient::zeta(f3);
    auto kq = make_algebra("kq", 2, f3, {w}, {Coefficient::zero(f3)});
    NCPoly u1 = NCPoly::generator(kq, 0);
    NCPoly u2 = NCPoly::generator(kq, 1);
    CHECK(u2 * u1 == w * (u1 * u2));
}

TEST_CASE("power rewriting agrees with repeated products") {
    Rng rng(401);
    FieldPtr f4 = MinimalPolynomial::cyclotomic(4);
    Coefficient i = Coefficient::zeta(f4);
    auto aq = make_algebra("Aq", 2, f4, {i}, {Coefficient::one(f4)});
    NCPoly x1 = NCPoly::generator(aq, 0);
    NCPoly x2 = NCPoly::generator(aq, 1);
    for (int k = 0; k < 20; ++k) {
        unsigned m = static_cast<unsigned>(rand_long(rng, 0, 5));
        NCPoly by_pow = pow(x2, m) * x1;
        NCPoly by_mult = x1;
        for (unsigned t = 0; t < m; ++t) by_mult = x2 * by_mult;
        CHECK(by_pow == by_mult);
    }
}

TEST_CASE("multiplication is associative on random elements") {
    Rng rng(402);
    auto w3 = make_wn(3, Q());
    auto v3 = rand_skew(rng, "V3", 3, Q());
    for (int k = 0; k < 30; ++k) {
        const auto& spec = (k % 2 == 0) ? w3 : v3;
        NCPoly a = rand_ncpoly(rng, spec, 3, 2);
        NCPoly b = rand_ncpoly(rng, spec, 3, 2);
        NCPoly c = rand_ncpoly(rng, spec, 3, 2);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("filtration degree") {
    auto w2 = make_wn(2, Q());
    NCPoly x1 = NCPoly::generator(w2, 0);
    NCPoly x2 = NCPoly::generator(w2, 1);
    CHECK(NCPoly::zero(w2).filtration_degree() == -1);
    CHECK(NCPoly::one(w2).filtration_degree() == 0);
    CHECK((x1 * x2).filtration_degree() == 2);

    auto weighted = make_algebra("wt", 2, Q(),
                                 {Coefficient::from_integer(Q(), -1)},
                                 {Coefficient::zero(Q())},
                                 std::vector<int>{1, 3});
    NCPoly y2 = NCPoly::generator(weighted, 1);
    CHECK(y2.filtration_degree() == 3);
}

TEST_CASE("antisymmetrized products") {
    auto w2 = make_wn(2, Q());
    NCPoly x1 = NCPoly::generator(w2, 0);
    NCPoly x2 = NCPoly::generator(w2, 1);
    NCPoly omega = antisymmetrized_product({x1, x2});
    Coefficient two = Coefficient::from_integer(Q(), 2);
    CHECK(omega == two * (x1 * x2) - NCPoly::one(w2));
    CHECK(antisymmetrized_product({x1, x1}).is_zero());

    auto w3 = make_wn(3, Q());
    std::vector<NCPoly> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(NCPoly::generator(w3, i));
    CHECK_THROWS_AS(antisymmetrized_product(gens, 2), SizeLimitError);
}

TEST_CASE("tensor products") {
    auto w2 = make_wn(2, Q());
    auto t = tensor_algebra(w2, w2);
    CHECK(t->gen_count() == 4);
    NCPoly left = tensor_embed_left(t, NCPoly::generator(w2, 0));
    NCPoly right = tensor_embed_right(t, w2, NCPoly::generator(w2, 0));
    CHECK(left == NCPoly::generator(t, 0));
    CHECK(right == NCPoly::generator(t, 2));
    // cross generators commute exactly
    CHECK(right * left == left * right);
    // each side keeps its own relations
    NCPoly x3 = NCPoly::generator(t, 2);
    NCPoly x4 = NCPoly::generator(t, 3);
    CHECK(x4 * x3 == -(x3 * x4) + NCPoly::one(t));

    Rng rng(403);
    for (int k = 0; k < 20; ++k) {
        NCPoly a = rand_ncpoly(rng, w2, 3, 2);
        NCPoly b = rand_ncpoly(rng, w2, 3, 2);
        CHECK(tensor_embed_left(t, a * b) ==
              tensor_embed_left(t, a) * tensor_embed_left(t, b));
        CHECK(tensor_embed_right(t, w2, a * b) ==
              tensor_embed_right(t, w2, a) * tensor_embed_right(t, w2, b));
    }
}

TEST_CASE("opposite algebra") {
    auto w2 = make_wn(2, Q());
    auto op = opposite_algebra(w2);
    // q = -1, a = 1 is self-opposite: q' = q^{-1} = -1, a' = -q^{-1} a = 1.
    CHECK(op->same_structure(*w2));

    FieldPtr f3 = MinimalPolynomial::cyclotomic(3);
    Coefficient w = Coefficient::zeta(f3);
    auto kq = make_algebra("kq", 2, f3, {w}, {Coefficient::zero(f3)});
    auto kqop = opposite_algebra(kq);
    CHECK(kqop->q(0, 1) == w.inverse());
    CHECK(kqop->a(0, 1).is_zero());
}

TEST_CASE("construction is validated") {
    CHECK_THROWS_AS(make_algebra("bad", 0, Q(), {}, {}),
                    PreconditionViolationError);
    CHECK_THROWS_AS(make_algebra("bad", 2, Q(), {Coefficient::zero(Q())},
                                 {Coefficient::zero(Q())}),
                    PreconditionViolationError);
    CHECK_THROWS_AS(make_algebra("bad", 2, Q(), {}, {}),
                    DimensionMismatchError);
    auto w2 = make_wn(2, Q());
    auto w3 = make_wn(3, Q());
    CHECK_THROWS_AS(NCPoly::generator(w2, 2), IndexError);
    CHECK_THROWS_AS(NCPoly::generator(w2, 0) + NCPoly::generator(w3, 0),
                    AlgebraMismatchError);
}

} // TEST_SUITE
