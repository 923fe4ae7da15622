#include "umbral/errors.hpp"
#include "umbral/fracseries.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace umbral;

namespace {

FracSeries poly(std::vector<long> c, long cutoff) {
    std::vector<Rational> v(c.begin(), c.end());
    return FracSeries::from_coefficients(v, 0, FracExponent(cutoff));
}

FracSeries random_series(std::mt19937_64& rng, std::int64_t denom) {
    std::uniform_int_distribution<long> coef(-9, 9), len(0, 14), lead(-6, 3), cut(4, 24);
    std::int64_t start = lead(rng);
    std::int64_t c = start + cut(rng);
    std::vector<FracSeries::Term> terms;
    long n = len(rng);
    for (long i = 0; i < n; ++i) {
        std::int64_t e = start + static_cast<std::int64_t>(rng() % static_cast<unsigned>(c - start));
        terms.emplace_back(FracExponent(e, denom), make_rational(coef(rng), 1 + static_cast<long>(rng() % 3)));
    }
    return FracSeries::from_terms(terms, FracExponent(c, denom));
}

}  // namespace

TEST_CASE("geometric series by inversion") {
    FracSeries s = poly({1, -1}, 5).invert();
    CHECK(s.cutoff() == FracExponent(5));
    for (long k = 0; k < 5; ++k) CHECK(s.coeff(FracExponent(k)) == 1);
    CHECK_THROWS_AS(s.coeff(FracExponent(5)), CutoffUnderflow);
}

TEST_CASE("inversion needs a leading coefficient") {
    FracSeries z(1, FracExponent(4));
    CHECK_THROWS_AS(z.invert(), NotInvertible);
}

TEST_CASE("rescaling halves exponents") {
    FracSeries s = FracSeries::from_terms({{FracExponent(1, 8), 1}, {FracExponent(9, 8), -3}},
                                          FracExponent(17, 8));
    FracSeries h = s.rescale(make_rational(1, 2));
    CHECK(h.coeff(FracExponent(1, 16)) == 1);
    CHECK(h.coeff(FracExponent(9, 16)) == -3);
    CHECK(h.cutoff() == FracExponent(17, 16));
}

TEST_CASE("splitting by exponent residue") {
    FracSeries s = FracSeries::from_terms(
        {{FracExponent(-1, 16), 5}, {FracExponent(7, 16), 2}, {FracExponent(15, 16), 3}}, FracExponent(2));
    FracSeries a = s.split(FracExponent(-1, 16));
    CHECK(a.coeff(FracExponent(-1, 16)) == 5);
    CHECK(a.coeff(FracExponent(15, 16)) == 3);
    CHECK(a.coeff(FracExponent(7, 16)) == 0);
}

TEST_CASE("multiplication keeps only the provable cutoff") {
    FracSeries a = poly({1, 2}, 6).shift(FracExponent(1));  // q + 2q^2 + O(q^7)
    FracSeries b = poly({3}, 4);                            // 3 + O(q^4)
    FracSeries p = a * b;
    CHECK(p.cutoff() == FracExponent(5));
    CHECK(p.coeff(FracExponent(2)) == 6);
}

TEST_CASE("canonical text form") {
    FracSeries s = FracSeries::from_terms({{FracExponent(-1, 8), -2}, {FracExponent(7, 8), 90}},
                                          FracExponent(15, 8));
    CHECK(s.to_string() == "q^{-1/8}*(-2 + 90*q^{1} + O(q^{2}))");
}

TEST_CASE("series ring axioms on random inputs") {
    std::mt19937_64 rng(424242);
    for (int i = 0; i < 200; ++i) {
        std::int64_t d = (i % 3 == 0) ? 1 : (i % 3 == 1 ? 4 : 12);
        FracSeries a = random_series(rng, d), b = random_series(rng, d), c = random_series(rng, 1);
        CHECK(equal_to_common_order(a * b, b * a));
        CHECK(equal_to_common_order((a * b) * c, a * (b * c)));
        CHECK(equal_to_common_order(a * (b + c), a * b + a * c));
        CHECK(equal_to_common_order(a + b, b + a));
    }
}

TEST_CASE("splitting partitions a series") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
        FracSeries a = random_series(rng, 8);
        FracSeries sum(8, a.cutoff());
        for (std::int64_t k = 0; k < 8; ++k) sum += a.split(FracExponent(k, 8));
        CHECK(equal_to_common_order(sum, a));
        CHECK(sum.cutoff() == a.cutoff());
    }
}

TEST_CASE("inverse times series is one") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        FracSeries a = random_series(rng, 3);
        if (a.is_zero()) continue;
        FracSeries one = a * a.invert();
        CHECK(one.cutoff() == a.cutoff() - *a.valuation());
        CHECK(equal_to_common_order(one, FracSeries::constant(1, one.cutoff())));
    }
}
