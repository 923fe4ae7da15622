#include "umbral/errors.hpp"
#include "umbral/frac_exponent.hpp"
#include "umbral/quad.hpp"
#include "umbral/rational.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace umbral;

TEST_CASE("quadratic values from the b_n and a_n abbreviations") {
    QuadValue b7 = QuadValue::b(7);
    CHECK(b7 + b7.conj() == QuadValue(Rational(-1)));
    // ((-1)^2 - (-7)) / 4 = 2
    CHECK(b7 * b7.conj() == QuadValue(Rational(2)));
    CHECK(QuadValue::a(2) * QuadValue::a(2) == QuadValue(Rational(-2)));
    CHECK(b7.norm_sq() == 2);
}

TEST_CASE("mixed discriminants are refused") {
    CHECK_THROWS_AS(QuadValue::a(7) + QuadValue::a(11), MixedDiscriminant);
    CHECK_THROWS_AS(QuadValue::b(7) * QuadValue::a(15), MixedDiscriminant);
    CHECK_NOTHROW(QuadValue::a(7) + QuadValue(Rational(3)));
}

TEST_CASE("square factors are pulled out of the discriminant") {
    QuadValue v(Rational(0), Rational(1), -12);
    CHECK(v.disc() == -3);
    CHECK(v.irr() == 2);
    QuadValue w(Rational(1), Rational(1), 4);
    CHECK(w.is_rational());
    CHECK(w.rat() == 3);
    CHECK(QuadValue(Rational(5), Rational(0), -7).disc() == 0);
}

TEST_CASE("fractional exponents") {
    CHECK(FracExponent(-1, 8) + FracExponent(1) == FracExponent(7, 8));
    CHECK(FracExponent(-1, 12) < FracExponent(2, 3));
    CHECK(FracExponent(-1, 20) + FracExponent(9, 20) == FracExponent(2, 5));
    CHECK(FracExponent(6, -4) == FracExponent(-3, 2));
    CHECK(FracExponent(-1, 8).frac() == FracExponent(7, 8));
}

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("-6/4") == make_rational(-3, 2));
    CHECK(rational_string(Rational(5)) == "5/1");
    CHECK(rational_short(make_rational(-3, 2)) == "-3/2");
    CHECK_THROWS_AS(parse_rational("1/0"), DataCorrupt);
    CHECK_THROWS_AS(parse_rational("x"), DataCorrupt);
}

TEST_CASE("rational field axioms on random inputs") {
    std::mt19937_64 rng(20130924);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 500);
    for (int i = 0; i < 500; ++i) {
        Rational a = make_rational(num(rng), den(rng));
        Rational b = make_rational(num(rng), den(rng));
        Rational c = make_rational(num(rng), den(rng));
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        if (a != 0) CHECK(a * (1 / a) == 1);
        Rational n = a;
        n.canonicalize();
        CHECK(n == a);
        CHECK(parse_rational(rational_string(a)) == a);
    }
}

TEST_CASE("quadratic ring laws within a fixed discriminant") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-30, 30), den(1, 12);
    for (long disc : {-7L, -15L, -23L, -3L, 5L, -1L}) {
        for (int i = 0; i < 100; ++i) {
            auto rnd = [&] {
                return QuadValue(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)), disc);
            };
            QuadValue x = rnd(), y = rnd(), z = rnd();
            CHECK(x * y == y * x);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x.conj().conj() == x);
            CHECK((x * y).conj() == x.conj() * y.conj());
            CHECK((x + y).conj() == x.conj() + y.conj());
        }
    }
}
