#include <cayley/fraction.hpp>
#include <cayley/verify.hpp>

#include <catch_amalgamated.hpp>

using namespace cayley;

namespace {

LaurentPoly z(std::size_t i, int power = 1, std::size_t n = 3) { return LaurentPoly::variable(n, i, power); }
LaurentPoly c(const Rational &q, std::size_t n = 3) { return LaurentPoly::constant(n, q); }

} // namespace

TEST_CASE("rationals print reduced as p/q") {
    CHECK(to_string(Rational(6, 4)) == "3/2");
    CHECK(to_string(Rational(-6, 3)) == "-2");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(parse_rational("-10/4") == Rational(-5, 2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
    CHECK_THROWS_AS(parse_rational("x"), parse_error);
    CHECK_THROWS_AS(parse_rational("3/"), parse_error);
}

TEST_CASE("poly_arith on the worked cases") {
    CHECK(poly_arith(PolyOp::mul, c(1) + z(1), c(1) - z(1)) == c(1) - z(1, 2));
    CHECK(to_string(poly_arith(PolyOp::mul, c(1) + z(1), c(1) - z(1))) == "1 - z1^2");
    CHECK(poly_arith(PolyOp::mul, z(1, -1), z(1)) == c(1));
    auto zero = poly_arith(PolyOp::add, z(1) * z(2), -(z(1) * z(2)));
    CHECK(zero.is_zero());
    CHECK(zero.terms().empty());
    CHECK(to_string(zero) == "0");
    CHECK(poly_arith(PolyOp::neg, z(3), LaurentPoly(3)) == -z(3));
    CHECK_THROWS_AS(poly_arith(PolyOp::add, z(1), LaurentPoly::variable(4, 1)), std::invalid_argument);
}

TEST_CASE("canonical text form of polynomials") {
    CHECK(to_string(Rational(1, 2) * z(1) * z(3, 2) - z(2)) == "-1*z2 + 1/2*z1*z3^2");
    CHECK(to_string(c(-1) * z(1) * z(2)) == "-1*z1*z2");
    CHECK(to_string(z(1, -1)) == "z1^-1");
    CHECK(to_string(c(3)) == "3");
}

TEST_CASE("poly_unit") {
    auto inv = poly_unit(Rational(2) * z(1) * z(3, 2), RingMode::torus);
    REQUIRE(inv);
    CHECK(*inv == Rational(1, 2) * z(1, -1) * z(3, -2));
    CHECK_FALSE(poly_unit(c(1) + z(1), RingMode::torus));
    auto third = poly_unit(c(3), RingMode::poly);
    REQUIRE(third);
    CHECK(*third == c(Rational(1, 3)));
    CHECK_FALSE(poly_unit(z(1), RingMode::poly));
    CHECK_FALSE(poly_unit(LaurentPoly(3), RingMode::torus));
}

TEST_CASE("poly_unit inverses multiply to one") {
    for (std::uint64_t i = 0; i < 100; ++i) {
        Sampler rng(11, i);
        auto p = rng.poly(3, true);
        if (auto q = poly_unit(p, RingMode::torus)) {
            CHECK(p * *q == c(1));
            CHECK(p.size() == 1);
        } else {
            CHECK(p.size() != 1);
        }
    }
}

TEST_CASE("ring axioms on random polynomials") {
    for (std::uint64_t i = 0; i < 100; ++i) {
        Sampler rng(3, i);
        auto p = rng.poly(3, true), q = rng.poly(3, true), r = rng.poly(3, true);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p - p == LaurentPoly(3));
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    // oracle: evaluate at a random point with nonzero coordinates
    for (std::uint64_t i = 0; i < 50; ++i) {
        Sampler rng(5, i);
        auto p = rng.poly(3, true), q = rng.poly(3, true);
        std::vector<Rational> at{rng.nonzero_rational(), rng.nonzero_rational(), rng.nonzero_rational()};
        CHECK((p * q).evaluate(at) == p.evaluate(at) * q.evaluate(at));
        CHECK((p + q).evaluate(at) == p.evaluate(at) + q.evaluate(at));
    }
}

TEST_CASE("fractions compare by cross-multiplication") {
    CHECK(frac_eq(Fraction(z(1), z(2)), Fraction(z(1) * z(3), z(2) * z(3))));
    CHECK(frac_eq(Fraction(c(1), c(1)), Fraction(z(1), z(1))));
    CHECK_FALSE(frac_eq(Fraction(z(1)), Fraction(z(2))));
    CHECK_THROWS_AS(Fraction(z(1), LaurentPoly(3)), std::domain_error);
}

TEST_CASE("frac_eq is an equivalence on constructed triples") {
    for (std::uint64_t i = 0; i < 30; ++i) {
        Sampler rng(9, i);
        auto num = rng.poly(3, false);
        LaurentPoly den, k1, k2;
        do
            den = rng.poly(3, false);
        while (den.is_zero());
        do
            k1 = rng.poly(3, false);
        while (k1.is_zero());
        do
            k2 = rng.poly(3, false);
        while (k2.is_zero());
        Fraction a(num, den), b(num * k1, den * k1), d(num * k2, den * k2);
        CHECK(frac_eq(a, a));
        CHECK(frac_eq(a, b) == frac_eq(b, a));
        CHECK(frac_eq(a, b));
        CHECK(frac_eq(b, d));
        CHECK(frac_eq(a, d));
    }
}

TEST_CASE("fraction field arithmetic") {
    Fraction half(c(1), c(2));
    CHECK(frac_eq(half + half, Fraction(c(1))));
    Fraction x(z(1), z(2));
    CHECK(frac_eq(x * (Fraction(c(1)) / x), Fraction(c(1))));
    CHECK(to_string(Fraction(Rational(2) * z(1), Rational(4) * z(2)).tidy()) == "(1/2*z1)/(z2)");
}
