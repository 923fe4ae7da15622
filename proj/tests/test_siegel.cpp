#include "umbral/errors.hpp"
#include "umbral/jacobi.hpp"
#include "umbral/siegel.hpp"

#include <catch_amalgamated.hpp>
#include <json.hpp>

#include <map>
#include <random>
#include <tuple>

using namespace umbral;

namespace {

FracExponent fe(long v) { return FracExponent(v); }

using Poly = std::map<std::tuple<long, long, long>, Rational>;

void add_to(Poly& p, long i, long j, long s, const Rational& c) {
    auto& v = p[{i, j, s}];
    v += c;
    if (v == 0) p.erase({i, j, s});
}

Poly mul(const Poly& a, const Poly& b, long I, long J) {
    Poly out;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b) {
            long i = std::get<0>(ka) + std::get<0>(kb), j = std::get<1>(ka) + std::get<1>(kb);
            if (i > I || j > J) continue;
            add_to(out, i, j, std::get<2>(ka) + std::get<2>(kb), va * vb);
        }
    return out;
}

// phi_{-2,1} Delta from the product formulas, as (n, r) -> c for n < N
std::map<std::pair<long, long>, Rational> phi_ten_one_product(long N) {
    // work with p = 0 slices of Poly: i unused
    Poly f{{{0, 0, 1}, 1}, {{0, 0, 0}, -2}, {{0, 0, -1}, 1}};
    long J = N - 1;
    for (long n = 1; n <= J; ++n) {
        Poly up{{{0, 0, 0}, 1}, {{0, n, 1}, -1}};
        Poly down{{{0, 0, 0}, 1}, {{0, n, -1}, -1}};
        for (int t = 0; t < 2; ++t) f = mul(mul(f, up, 0, J), down, 0, J);
        Poly qn{{{0, 0, 0}, 1}, {{0, n, 0}, -1}};
        for (int t = 0; t < 20; ++t) f = mul(f, qn, 0, J);
    }
    std::map<std::pair<long, long>, Rational> out;
    for (const auto& [k, v] : f)
        if (std::get<1>(k) + 1 < N) out[{std::get<1>(k) + 1, std::get<2>(k)}] = v;
    return out;
}

// exp(sum c log(1 - x)) times the y-only factors and the prefactor
Poly log_exp_lift(long ell, long I, long J) {
    auto Z = umbral_Z(ell, fe(I * J + 1));
    Poly y0{{{0, 0, 0}, 1}};
    Poly L;
    for (long m = 0; m <= I; ++m)
        for (long n = 0; n <= J; ++n)
            for (const auto& [k, c] : Z.row(fe(m * n))) {
                long r = k.num();
                if (!positive_triple(m, n, r)) continue;
                if (m == 0 && n == 0) {
                    REQUIRE(c > 0);
                    Poly f{{{0, 0, 0}, 1}, {{0, 0, r}, -1}};
                    for (long t = 0; t < c.get_num().get_si(); ++t) y0 = mul(y0, f, I, J);
                    continue;
                }
                for (long t = 1; t * m <= I && t * n <= J; ++t) add_to(L, t * m, t * n, t * r, -c / t);
            }
    Poly e{{{0, 0, 0}, 1}}, power{{{0, 0, 0}, 1}};
    Rational fact = 1;
    for (long t = 1; t <= I + J; ++t) {
        power = mul(power, L, I, J);
        fact *= t;
        for (const auto& [k, v] : power) add_to(e, std::get<0>(k), std::get<1>(k), std::get<2>(k), v / fact);
    }
    return mul(e, y0, I, J);
}

}  // namespace

TEST_CASE("phi_{10,1} against its product formula") {
    auto phi = phi_ten_one(fe(8));
    auto oracle = phi_ten_one_product(8);
    for (long n = 0; n < 8; ++n)
        for (long r = -8; r <= 8; ++r) {
            auto it = oracle.find({n, r});
            Rational want = it == oracle.end() ? Rational(0) : it->second;
            INFO("q^" << n << " y^" << r);
            CHECK(phi.coeff(fe(n), fe(r)) == want);
        }
    CHECK(phi.coeff(fe(1), fe(1)) == 1);
    CHECK(phi.coeff(fe(1), fe(0)) == -2);
}

TEST_CASE("additive lift slices") {
    TripleBox box{3, 3, 6};
    auto S = additive_lift(box);
    auto phi = phi_ten_one(fe(10));
    // V_1 is the identity
    for (long n = 0; n <= 3; ++n)
        for (long r = -6; r <= 6; ++r) CHECK(S.coeff(fe(1), fe(n), r) == phi.coeff(fe(n), fe(r)));
    // coprime (n, r, m) collapses the divisor sum
    for (long m = 1; m <= 3; ++m)
        for (long n = 0; n <= 3; ++n)
            for (long r = -6; r <= 6; ++r)
                if (std::gcd(std::gcd(n, std::abs(r)), m) == 1)
                    CHECK(S.coeff(fe(m), fe(n), r) == phi.coeff(fe(n * m), fe(r)));
    // one divisor j = 2 at (2, 2, 2): c(4, 2) + 2^9 c(1, 1)
    CHECK(S.coeff(fe(2), fe(2), 2) == phi.coeff(fe(4), fe(2)) + 512 * phi.coeff(fe(1), fe(1)));
    CHECK(S.m_exponents() == std::vector<FracExponent>{fe(1), fe(2), fe(3)});
    CHECK_THROWS_AS(S.coeff(fe(4), fe(0), 0), OutOfRange);
    CHECK_THROWS_AS(S.coeff(fe(1), fe(0), 7), OutOfRange);
}

TEST_CASE("additive slices depend on the discriminant and r mod 2m") {
    TripleBox box{4, 4, 9};
    auto S = additive_lift(box);
    for (long m = 1; m <= 4; ++m) {
        std::map<std::pair<long, long>, Rational> seen;
        long checked = 0;
        for (long n = 0; n <= 4; ++n)
            for (long r = -9; r <= 9; ++r) {
                std::pair<long, long> key{4 * m * n - r * r, ((r % (2 * m)) + 2 * m) % (2 * m)};
                auto c = S.coeff(fe(m), fe(n), r);
                auto [it, fresh] = seen.emplace(key, c);
                if (!fresh) {
                    ++checked;
                    INFO("m=" << m << " n=" << n << " r=" << r);
                    CHECK(it->second == c);
                }
            }
        CHECK(checked > 0);
    }
}

TEST_CASE("exponential lift prefactor") {
    auto p2 = lift_prefactor(2);
    CHECK(p2.A == 1);
    CHECK(p2.B == 1);
    CHECK(p2.C == 1);
    for (long ell : {3L, 4L, 5L, 7L, 13L}) {
        auto Z = umbral_Z(ell, fe(1));
        Rational sum0 = 0, sum1 = 0, sum2 = 0;
        for (long r = -ell; r <= ell; ++r) {
            Rational c = Z.coeff(fe(0), fe(r));
            sum0 += c;
            if (r > 0) sum1 += r * c;
            sum2 += r * r * c;
        }
        auto p = lift_prefactor(ell);
        CHECK(p.A == sum0 / 24);
        CHECK(p.B == sum1 / 2);
        CHECK(p.C == sum2 / 4);
    }
    CHECK(lift_prefactor(3).A == make_rational(1, 2));
    CHECK_THROWS_AS(lift_prefactor(6), OutOfRange);
    CHECK_THROWS_AS(exponential_lift(6), OutOfRange);
}

TEST_CASE("ordering of triples") {
    CHECK(positive_triple(0, 0, -1));
    CHECK_FALSE(positive_triple(0, 0, 1));
    CHECK_FALSE(positive_triple(0, 0, 0));
    CHECK(positive_triple(0, 1, 5));
    CHECK(positive_triple(0, 1, -5));
    CHECK_FALSE(positive_triple(0, -1, 0));
    CHECK(positive_triple(1, -3, 0));
}

TEST_CASE("exponential lift at lambency two") {
    TripleBox box{3, 3, 6};
    auto E = exponential_lift(2, box);
    // no product factor reaches p^0, so every term carries the prefactor p
    CHECK(E.slice(fe(0)).is_zero());
    CHECK(E.coeff(fe(1), fe(1), 1) == 1);
    CHECK(E.coeff(fe(1), fe(1), 0) == -2);
    CHECK(E.coeff(fe(1), fe(1), -1) == 1);
    for (const auto& [k, row] : E.terms()) {
        CHECK(fe(1) <= k[0]);
        CHECK(fe(1) <= k[1]);
    }
}

TEST_CASE("additive and exponential lifts agree") {
    auto rep = compare_igusa({3, 3, 6});
    INFO(rep.to_string());
    CHECK(rep.pass);
    CHECK(rep.cells == 4 * 4 * 13);
    CHECK(rep.nonzero > 20);
    auto deeper = compare_igusa({4, 4, 9}, 2);
    INFO(deeper.to_string());
    CHECK(deeper.pass);

    // symmetric under r -> -r and under p <-> q in both pipelines
    TripleBox box{3, 3, 6};
    auto A = additive_lift(box), E = exponential_lift(2, box);
    for (long m = 0; m <= 3; ++m)
        for (long n = 0; n <= 3; ++n)
            for (long r = -6; r <= 6; ++r) {
                CHECK(A.coeff(fe(m), fe(n), r) == A.coeff(fe(m), fe(n), -r));
                CHECK(E.coeff(fe(m), fe(n), r) == E.coeff(fe(m), fe(n), -r));
                CHECK(A.coeff(fe(m), fe(n), r) == A.coeff(fe(n), fe(m), r));
            }
}

TEST_CASE("a perturbed coefficient is located") {
    TripleBox box{2, 2, 4};
    auto A = additive_lift(box);
    auto E = exponential_lift(2, box);
    E.add(fe(2), fe(1), -2, 1);
    bool found = false;
    for (long m = 0; m <= 2 && !found; ++m)
        for (long n = 0; n <= 2 && !found; ++n)
            for (long r = -4; r <= 4 && !found; ++r)
                if (A.coeff(fe(m), fe(n), r) != E.coeff(fe(m), fe(n), r)) {
                    found = true;
                    CHECK(m == 2);
                    CHECK(n == 1);
                    CHECK(r == -2);
                }
    CHECK(found);
}

TEST_CASE("binomial expansion agrees with exp of the logarithm") {
    std::mt19937_64 rng(31);
    for (long ell : {2L, 3L, 4L, 5L, 7L, 13L}) {
        long M = 2 + static_cast<long>(rng() % 2), N = 2 + static_cast<long>(rng() % 2);
        TripleBox box{M, N, 12};
        auto E = exponential_lift(ell, box);
        auto pre = lift_prefactor(ell);
        auto A = FracExponent::from_rational(pre.A), B = FracExponent::from_rational(pre.B);
        long C = pre.C.get_num().get_si();
        long I = M - 1, J = N - 1;  // A and B lie in (0, 1]
        auto L = log_exp_lift(ell, I, J);
        std::size_t seen = 0;
        for (long i = 0; i <= I; ++i)
            for (long j = 0; j <= J; ++j)
                for (long s = -12 - C; s <= 12 - C; ++s) {
                    auto it = L.find({i, j, s});
                    Rational want = it == L.end() ? Rational(0) : it->second;
                    if (want != 0) ++seen;
                    INFO("lambency " << ell << " (" << i << ", " << j << ", " << s << ")");
                    CHECK(E.coeff(A + fe(i), B + fe(j), s + C) == want);
                }
        CHECK(seen == E.size());
    }
}

TEST_CASE("coefficient dump and threads") {
    TripleBox box{2, 2, 3};
    auto one = additive_lift(box, 1), three = additive_lift(box, 3);
    CHECK(one.json() == three.json());
    auto j = nlohmann::json::parse(one.json());
    REQUIRE(j.is_array());
    CHECK(j.size() == one.size());
    CHECK(j[0] == nlohmann::json({{"m", 1}, {"n", 1}, {"r", -1}, {"c", "1/1"}}));
    auto half = nlohmann::json::parse(exponential_lift(3, box).json());
    CHECK(half[0]["m"] == "1/2");
    auto slice = one.slice(fe(2));
    CHECK(slice.coeff(fe(1), fe(0)) == one.coeff(fe(2), fe(1), 0));
}
