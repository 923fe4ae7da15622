#include "umbral/data.hpp"
#include "umbral/errors.hpp"
#include "umbral/jacobi.hpp"
#include "umbral/mckay.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace umbral;

namespace {

std::string joined(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += x + "\n";
    return s;
}

std::vector<Rational> coefficients(const FracSeries& s, FracExponent start, long count) {
    std::vector<Rational> out;
    for (long k = 0; k < count; ++k) out.push_back(s.coeff(start + FracExponent(k)));
    return out;
}

std::vector<Rational> ints(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("weight two forms from the catalog") {
    auto f = weight2(2, "2A", "F", FracExponent(4));
    CHECK(f.coeff(FracExponent(0)) == make_rational(-4, 3));
    CHECK(f.coeff(FracExponent(1)) == -32);
    CHECK(f.coeff(FracExponent(2)) == -32);
    // independent oracle: -16 times sigma-weighted sums
    for (long n = 1; n < 4; ++n) {
        long s1 = divisor_sigma(n), s2 = n % 2 == 0 ? divisor_sigma(n / 2) : 0;
        CHECK(f.coeff(FracExponent(n)) == -16 * (2 * s1 - 4 * s2));
    }
    auto f2 = weight2(5, "2B", "F2", FracExponent(10));
    CHECK(f2 == make_rational(-8, 3) * eta_quotient(parse_eta_spec("1^8 1/2^-4"), FracExponent(10)));
    CHECK(weight2(5, "2B", "F2", FracExponent(10)).valuation() == FracExponent(1, 4));
    CHECK_THROWS_AS(weight2(2, "9Z", "F", FracExponent(3)), UnknownClass);
    CHECK_THROWS_AS(weight2(7, "3AB", "F2", FracExponent(3)), UnknownClass);
}

TEST_CASE("cataloged alternatives agree") {
    long checked = 0;
    for (const auto& f : weight2_catalog())
        for (const auto& alt : f.alternatives) {
            FracExponent c(30);
            auto a = evaluate_terms(f.lambency, f.variant, f.terms, c);
            auto b = evaluate_terms(f.lambency, f.variant, alt, c);
            INFO(f.lambency << " " << f.cls);
            CHECK(a == b);
            ++checked;
        }
    CHECK(checked == 2);
}

TEST_CASE("component eta quotients at lambency three") {
    const auto& doc = load_json("weight2.json").at("component_eta");
    for (const auto& e : doc) {
        auto H = twisted_H(3, e.at("class").get<std::string>(), FracExponent(25));
        auto q = parse_rational(e.at("coeff").get<std::string>()) *
                 eta_quotient(parse_eta_spec(e.at("eta").get<std::string>()), FracExponent(25));
        CHECK(equal_to_common_order(H[e.at("r").get<long>()], q));
    }
}

TEST_CASE("twisted series examples") {
    auto h = twisted_H(2, "4B", FracExponent(5));
    CHECK(coefficients(h[1], FracExponent(-1, 8), 5) == ints({-2, 2, -2, -4, 2}));
    auto mu = mock_theta("mu", 5);
    for (long k = 0; k < 5; ++k) CHECK(h[1].coeff(FracExponent(-1, 8) + FracExponent(k)) == -2 * mu.coeff(FracExponent(k)));

    auto h3 = twisted_H(3, "2B", FracExponent(5));
    CHECK(coefficients(h3[1], FracExponent(-1, 12), 5) == ints({-2, 0, -2, 0, 4}));

    auto h13 = twisted_H(13, "2A", FracExponent(8));
    auto id13 = twisted_H(13, "1A", FracExponent(8));
    for (long r = 1; r < 13; ++r) CHECK(h13[r] == Rational(r % 2 == 1 ? 1 : -1) * id13[r]);
    CHECK(h13.chi == -2);
    CHECK(h13.chi_r(1) == 2);
    CHECK(h13.chi_r(2) == -2);
}

TEST_CASE("twisted series reproduce the coefficient tables") {
    for (long ell : {2L, 3L, 4L, 5L, 7L, 13L}) {
        for (const auto& col : column_labels(ell)) {
            bool stored = (ell == 7 || ell == 13) && col != "1A" && col != "2A";
            if (stored) continue;
            auto H = twisted_H(ell, col, FracExponent(ell == 13 ? 38 : 40));
            auto rep = compare_with_table(H);
            INFO("lambency " << ell << " class " << col << "\n" << joined(rep.problems));
            if (ell == 4 && col == "6BC") {
                // one tabulated cell disagrees; the computed value makes the row decompose integrally
                REQUIRE(rep.problems.size() == 1);
                CHECK(rep.problems[0] == "r=3 q^599/16: computed 4, table 3");
            } else {
                CHECK(rep.pass);
            }
            if (ell == 3 && (col == "22AB" || col == "11AB")) {
                REQUIRE(H.cap);
                CHECK(*H.cap == FracExponent(83, 3));
                CHECK(rep.rows_beyond > 0);
            } else {
                CHECK_FALSE(H.cap);
                CHECK(rep.rows_beyond == 0);
            }
        }
    }
}

TEST_CASE("stored classes at the large lambencies") {
    auto H = twisted_H(7, "4A", FracExponent(30));
    CHECK(H.source == "stored");
    CHECK(compare_with_table(H).pass);
    CHECK_THROWS_AS(twisted_H(7, "3A", FracExponent(40)), DataExhausted);
    CHECK_THROWS_AS(twisted_H(13, "4AB", FracExponent(40)), DataExhausted);
    CHECK(twisted_H(7, "3B", FracExponent(5)).label == "3AB");
    CHECK_THROWS_AS(twisted_H(6, "1A", FracExponent(5)), OutOfRange);
    CHECK_THROWS_AS(twisted_H(3, "7A", FracExponent(5)), UnknownClass);
}

TEST_CASE("identity class agrees with the Jacobi form pipeline") {
    for (long ell : {2L, 3L, 4L, 5L, 7L, 13L}) {
        FracExponent c(ell == 2 ? 30 : 20);
        auto H = twisted_H(ell, "1A", c);
        auto J = extract_H(ell, c);
        for (long r = 1; r < ell; ++r) {
            INFO("lambency " << ell << " r " << r);
            CHECK(H[r] == J[r]);
        }
    }
}

TEST_CASE("lambency four halves lambency two") {
    const auto& doc = load_json("weight2.json").at("bridge");
    for (const auto& b : doc) {
        auto S = stored_H(4, b.at("class").get<std::string>());
        auto m = twisted_H(2, b.at("m24").get<std::string>(), FracExponent(80));
        auto half = m[1].rescale(make_rational(1, 2));
        INFO(b.dump());
        CHECK(equal_to_common_order(S[1], half.split(FracExponent(15, 16))));
        if (b.at("class") == "6BC")
            CHECK(first_difference(S[3], -half.split(FracExponent(7, 16))) == FracExponent(599, 16));
        else
            CHECK(equal_to_common_order(S[3], -half.split(FracExponent(7, 16))));
    }
}

TEST_CASE("components stay on their exponent residues") {
    std::mt19937_64 rng(2024);
    const std::vector<long> ells{2, 3, 4, 5};
    for (int trial = 0; trial < 12; ++trial) {
        long ell = ells[rng() % ells.size()];
        auto cols = column_labels(ell);
        auto col = cols[rng() % cols.size()];
        auto H = twisted_H(ell, col, FracExponent(12));
        for (long r = 1; r < ell; ++r) {
            FracExponent want = FracExponent(-r * r, 4 * ell).frac();
            for (const auto& res : H[r].residues()) {
                INFO(ell << " " << col << " " << r);
                CHECK(res == want);
            }
        }
    }
}

TEST_CASE("weight two consistency") {
    auto r = verify_F_consistency(2, "3A");
    CHECK(r.pass);
    CHECK(r.variants == std::vector<std::string>{"F"});
    auto r7 = verify_F_consistency(7, "4A");
    CHECK(r7.pass);
    CHECK(r7.variants == std::vector<std::string>{"F", "F2"});
    CHECK(verify_F_consistency(13, "1A").pass);
    CHECK(verify_F_consistency(13, "1A").cataloged);
    CHECK_FALSE(verify_F_consistency(4, "8A").cataloged);
    for (long ell : {2L, 3L, 4L, 5L, 7L, 13L})
        for (const auto& col : column_labels(ell)) {
            auto rep = verify_F_consistency(ell, col);
            INFO("lambency " << ell << " class " << col << "\n" << joined(rep.problems));
            CHECK(rep.pass);
            if (rep.cataloged) CHECK(FracExponent(20) <= rep.order);
            if (ell <= 5 && rep.cataloged) CHECK(verify_F_consistency(ell, col, true, FracExponent(15)).pass);
        }
}

TEST_CASE("a wrong weight two form is caught") {
    auto H = stored_H(2, "3A");
    auto I = stored_H(2, "1A");
    auto lhs = (H[1] - make_rational(H.chi, 24) * I[1]) * unary_theta(2, 1, FracExponent(20));
    auto wrong = weight2(2, "3B", "F", FracExponent(20));
    CHECK(first_difference(lhs, wrong).has_value());
}

TEST_CASE("mock theta identities") {
    CHECK(mock_identities().size() == 18);
    for (const auto& id : mock_identities()) {
        auto rep = mock_identity_check(id.id, 20);
        INFO(id.id << " " << rep.detail);
        CHECK(rep.pass);
        CHECK(FracExponent(20) <= rep.order);
    }
    CHECK_THROWS_AS(mock_identity_check("ell9-none"), UnknownClass);
}

TEST_CASE("multiplier matrices") {
    CHECK(multiplier_rho(3, 2, 1, {1, 0, 0, 1}) == UnitMatrix::identity(2));
    for (long n : {2L, 3L, 5L, 12L}) CHECK(k_matrix(n).pow(2) == UnitMatrix::identity(n));
    auto J = j_matrix(4);
    CHECK(J.entries[0][0] == Rational(0));
    CHECK(J.entries[1][1] == make_rational(1, 2));
    CHECK(J.entries[2][2] == Rational(0));
    CHECK(J.entries[3][3] == make_rational(1, 2));
    CHECK(J.pow(2) == UnitMatrix::identity(4));
    CHECK(admissible_v(3) == 5);
    CHECK_THROWS_AS(multiplier_rho(3, 2, 1, {1, 1, 1, 1}), NotInGroup);
    CHECK_THROWS_AS(multiplier_rho(3, 2, 1, {1, 0, 1, 1}), NotInGroup);

    // h | n: e(-v c d / n h) times the identity
    auto s = multiplier_rho(3, 4, 2, {1, 0, 4, 1});
    CHECK(s == UnitMatrix::scalar(2, make_rational(-5 * 4, 8)));
    // h does not divide n, n even: J^(c(d+1)/n) K^(c/n) with the gcd correction
    auto t = multiplier_rho(3, 2, 8, {1, 0, 2, 1});
    auto want = UnitMatrix::scalar(2, make_rational(-5 * 2, 16) * make_rational(2, 2)) * j_matrix(2).pow(2) *
                k_matrix(2).pow(1);
    CHECK(t == want);
    CHECK_FALSE(t.entries[0][0].has_value());
    // n odd
    auto u = multiplier_rho(3, 3, 4, {1, 0, 3, 1});
    CHECK(u == UnitMatrix::scalar(2, make_rational(-5 * 3, 12) * 3) * j_matrix(2).pow(2) * k_matrix(2));
}

TEST_CASE("multiplier matrices are monomial roots of unity") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        long ell = std::vector<long>{2, 3, 4, 5, 7, 13}[rng() % 6];
        long n = 1 + static_cast<long>(rng() % 12), h = 1 + static_cast<long>(rng() % 12);
        // build (a b; c d) in Gamma_0(n) from d coprime to c
        long c = n * (static_cast<long>(rng() % 7) - 3);
        long d = c == 0 ? 1 : 1 + static_cast<long>(rng() % 20);
        while (std::gcd(c, d) != 1) ++d;
        // a d - b c = 1
        long a = 0, b = 0;
        for (long x = 0; x < std::abs(c) + 2; ++x)
            if (c == 0 || (x * d - 1) % c == 0) {
                a = c == 0 ? 1 : x;
                b = c == 0 ? 0 : (a * d - 1) / c;
                break;
            }
        REQUIRE(a * d - b * c == 1);
        auto m = multiplier_rho(ell, n, h, {a, b, c, d});
        CHECK(m.size() == ell - 1);
        for (const auto& row : m.entries) {
            long nonzero = 0;
            for (const auto& e : row)
                if (e) {
                    ++nonzero;
                    CHECK(*e >= 0);
                    CHECK(*e < 1);
                }
            CHECK(nonzero == 1);
        }
    }
}

TEST_CASE("paired classes") {
    auto p = pairing(3, "2B");
    CHECK(p.paired == "2C");
    CHECK(p.odd_equal_even_flip);
    CHECK(p.signs == std::vector<int>{1, -1});
    CHECK(pairing(5, "1A").paired == "2A");
    auto q = pairing(4, "3A", true, FracExponent(15));
    CHECK(q.paired == "6A");
    CHECK(q.signs == std::vector<int>{1, -1, 1});
    for (long ell : {3L, 4L, 5L, 7L, 13L})
        for (const auto& col : column_labels(ell)) {
            auto r = pairing(ell, col);
            INFO(ell << " " << col);
            CHECK(r.odd_equal_even_flip);
            CHECK_FALSE(r.sign_minus_one_to_r);
        }
    CHECK_THROWS_AS(pairing(2, "2A"), OutOfRange);
}

TEST_CASE("vanishing shadow classes have modular components") {
    for (long ell : {3L, 5L})
        for (const auto& col : column_labels(ell)) {
            auto H = twisted_H(ell, col, FracExponent(10));
            if (H.chi != 0 || H.chibar != 0) continue;
            auto rep = verify_F_consistency(ell, col, true, FracExponent(10));
            INFO(ell << " " << col);
            CHECK(rep.cataloged);
            CHECK(rep.pass);
        }
}
