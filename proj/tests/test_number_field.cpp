#include <doctest.h>

#include "ncdisc/errors.hpp"
#include "ncdisc/number_field.hpp"
#include "support.hpp"

using namespace ncdisc;
using namespace ncdisc::testsupport;

TEST_SUITE("number_field") {

TEST_CASE("rational field arithmetic") {
    FieldPtr q = MinimalPolynomial::rationals();
    Coefficient two = Coefficient::from_integer(q, 2);
    Coefficient half = Coefficient::from_rational(q, make_rational(1, 2));
    CHECK(two * half == Coefficient::one(q));
    CHECK(two.pow(10) == Coefficient::from_integer(q, 1024));
    CHECK(two.pow(-2) == Coefficient::from_rational(q, make_rational(1, 4)));
    CHECK((two - two).is_zero());
    CHECK(two.is_rational());
    CHECK(two.rational_value() == 2);
    CHECK_THROWS_AS(Coefficient::zero(q).inverse(), DivisionByZeroError);
}

TEST_CASE("cyclotomic fields") {
    FieldPtr f4 = MinimalPolynomial::cyclotomic(4);
    Coefficient i = Coefficient::zeta(f4);
    CHECK(i * i == -Coefficient::one(f4));
    CHECK(i.pow(4).is_one());
    CHECK(i.inverse() == -i);

    FieldPtr f3 = MinimalPolynomial::cyclotomic(3);
    Coefficient w = Coefficient::zeta(f3);
    CHECK(w.pow(3).is_one());
    CHECK((w * w + w + Coefficient::one(f3)).is_zero());

    FieldPtr f1 = MinimalPolynomial::cyclotomic(1);
    CHECK(Coefficient::zeta(f1).is_one());
}

TEST_CASE("residues reduce modulo the minimal polynomial") {
    FieldPtr f4 = MinimalPolynomial::cyclotomic(4);
    Coefficient c = Coefficient::from_residue(
        f4, {make_rational(0), make_rational(0), make_rational(1)});
    CHECK(c == Coefficient::from_integer(f4, -1));
}

TEST_CASE("zero divisors surface as NotAField") {
    MinimalPolynomial reducible({make_rational(-1), make_rational(0),
                                 make_rational(1)}); // z^2 - 1
    FieldPtr f = std::make_shared<const MinimalPolynomial>(reducible);
    Coefficient zm1 = Coefficient::from_residue(
        f, {make_rational(-1), make_rational(1)});
    CHECK_THROWS_AS(zm1.inverse(), NotAFieldError);
}

TEST_CASE("field mismatch is rejected") {
    FieldPtr q = MinimalPolynomial::rationals();
    FieldPtr f4 = MinimalPolynomial::cyclotomic(4);
    CHECK_THROWS_AS(require_same_field(q, f4), IncompatibleFieldError);
    Coefficient a = Coefficient::one(q);
    Coefficient b = Coefficient::zeta(f4);
    CHECK_THROWS_AS(a + b, IncompatibleFieldError);
}

TEST_CASE("multiplicative orders") {
    FieldPtr q = MinimalPolynomial::rationals();
    CHECK(multiplicative_order(Coefficient::one(q)) == 1u);
    CHECK(multiplicative_order(Coefficient::from_integer(q, -1)) == 2u);
    CHECK(!multiplicative_order(Coefficient::from_integer(q, 2)));
    CHECK(!multiplicative_order(Coefficient::zero(q)));

    FieldPtr f4 = MinimalPolynomial::cyclotomic(4);
    CHECK(multiplicative_order(Coefficient::zeta(f4)) == 4u);
    FieldPtr f3 = MinimalPolynomial::cyclotomic(3);
    CHECK(multiplicative_order(Coefficient::zeta(f3)) == 3u);
    CHECK(multiplicative_order(-Coefficient::zeta(f3)) == 6u);
}

TEST_CASE("square roots") {
    FieldPtr q = MinimalPolynomial::rationals();
    auto r = field_sqrt(Coefficient::from_integer(q, 4));
    REQUIRE(r.has_value());
    CHECK(*r * *r == Coefficient::from_integer(q, 4));
    CHECK(!field_sqrt(Coefficient::from_integer(q, 2)));
    CHECK(!field_sqrt(Coefficient::from_integer(q, -1)));

    FieldPtr f4 = MinimalPolynomial::cyclotomic(4);
    auto s = field_sqrt(Coefficient::from_integer(f4, -1));
    REQUIRE(s.has_value());
    CHECK(*s * *s == Coefficient::from_integer(f4, -1));

    FieldPtr f3 = MinimalPolynomial::cyclotomic(3);
    auto t = field_sqrt(Coefficient::from_integer(f3, -3));
    REQUIRE(t.has_value());
    CHECK(*t * *t == Coefficient::from_integer(f3, -3));
}

TEST_CASE("field axioms hold on random elements") {
    Rng rng(101);
    FieldPtr f3 = MinimalPolynomial::cyclotomic(3);
    for (int k = 0; k < 100; ++k) {
        Coefficient a = rand_coefficient(rng, f3);
        Coefficient b = rand_coefficient(rng, f3);
        Coefficient c = rand_coefficient(rng, f3);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == Coefficient::one(f3));
            CHECK(a.pow(-3) == a.inverse().pow(3));
        }
    }
}

TEST_CASE("deterministic comparison is a total order") {
    Rng rng(102);
    FieldPtr f4 = MinimalPolynomial::cyclotomic(4);
    for (int k = 0; k < 100; ++k) {
        Coefficient a = rand_coefficient(rng, f4);
        Coefficient b = rand_coefficient(rng, f4);
        CHECK(Coefficient::compare(a, a) == 0);
        CHECK(Coefficient::compare(a, b) == -Coefficient::compare(b, a));
        CHECK((Coefficient::compare(a, b) == 0) == (a == b));
    }
}

} // TEST_SUITE
