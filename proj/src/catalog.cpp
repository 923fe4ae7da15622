#include "umbral/catalog.hpp"

#include "umbral/data.hpp"
#include "umbral/errors.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <sstream>

namespace umbral {

namespace {

// Dense integer power series c[0] + c[1] q + ... + c[n-1] q^(n-1).
using Dense = std::vector<Integer>;

Dense one(long n) {
    Dense d(static_cast<std::size_t>(std::max(0L, n)), Integer(0));
    if (n > 0) d[0] = 1;
    return d;
}

// d *= (1 + c q^k)
void mul_binomial(Dense& d, long c, long k) {
    if (k <= 0) {
        for (auto& x : d) x *= (1 + c);
        return;
    }
    for (long i = static_cast<long>(d.size()) - 1; i >= k; --i)
        if (d[static_cast<std::size_t>(i - k)] != 0) {
            if (c == 1)
                d[static_cast<std::size_t>(i)] += d[static_cast<std::size_t>(i - k)];
            else if (c == -1)
                d[static_cast<std::size_t>(i)] -= d[static_cast<std::size_t>(i - k)];
            else
                d[static_cast<std::size_t>(i)] += c * d[static_cast<std::size_t>(i - k)];
        }
}

// d /= (1 + c q^k), k >= 1
void div_binomial(Dense& d, long c, long k) {
    for (long i = k; i < static_cast<long>(d.size()); ++i)
        if (d[static_cast<std::size_t>(i - k)] != 0) {
            if (c == 1)
                d[static_cast<std::size_t>(i)] -= d[static_cast<std::size_t>(i - k)];
            else if (c == -1)
                d[static_cast<std::size_t>(i)] += d[static_cast<std::size_t>(i - k)];
            else
                d[static_cast<std::size_t>(i)] -= c * d[static_cast<std::size_t>(i - k)];
        }
}

// acc += sign * q^shift * d
void add_shifted(Dense& acc, const Dense& d, long shift, int sign) {
    for (long i = 0; i + shift < static_cast<long>(acc.size()) && i < static_cast<long>(d.size()); ++i) {
        if (d[static_cast<std::size_t>(i)] == 0) continue;
        if (sign > 0)
            acc[static_cast<std::size_t>(i + shift)] += d[static_cast<std::size_t>(i)];
        else
            acc[static_cast<std::size_t>(i + shift)] -= d[static_cast<std::size_t>(i)];
    }
}

FracSeries to_series(const Dense& d, FracExponent offset = FracExponent(0)) {
    std::vector<Rational> c(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) c[i] = Rational(d[i]);
    FracSeries s = FracSeries::from_coefficients(c, 0, FracExponent(static_cast<std::int64_t>(d.size())));
    return offset == FracExponent(0) ? s : s.shift(offset);
}

// number of dense terms needed so that q^offset * dense reaches cutoff
long terms_needed(FracExponent cutoff, FracExponent offset) {
    FracExponent span = cutoff - offset;
    return ceil_div(span.num(), span.den());
}

// d *= prod_{n>=1} (1 - q^(k n))^m
void euler_power(Dense& d, long k, long m) {
    long len = static_cast<long>(d.size());
    for (long n = k; n < len; n += k) {
        if (m > 0)
            for (long j = 0; j < m; ++j) mul_binomial(d, -1, n);
        else
            for (long j = 0; j < -m; ++j) div_binomial(d, -1, n);
    }
}

}  // namespace

long divisor_sigma(long n) {
    long s = 0;
    for (long d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            s += d;
            if (d * d != n) s += n / d;
        }
    return s;
}

FracSeries eta(FracExponent cutoff) { return eta_quotient({{Rational(1), 1}}, cutoff); }

FracSeries eta_quotient(const std::vector<EtaFactor>& spec, FracExponent cutoff) {
    // clear fractional scales by working at tau -> L tau, then rescale back
    long L = 1;
    for (const auto& f : spec) {
        if (f.scale <= 0) throw std::invalid_argument("eta scale must be positive");
        L = lcm64(L, f.scale.get_den().get_si());
    }
    FracExponent target = cutoff * FracExponent(L);
    FracExponent offset(0);
    for (const auto& f : spec) {
        long k = Rational(f.scale * L).get_num().get_si();
        offset = offset + FracExponent(k * f.power, 24);
    }
    long len = std::max(0L, terms_needed(target, offset));
    Dense d = one(len);
    for (const auto& f : spec) {
        long k = Rational(f.scale * L).get_num().get_si();
        if (f.power != 0) euler_power(d, k, f.power);
    }
    FracSeries s = to_series(d, offset).truncate(target);
    return L == 1 ? s : s.rescale(make_rational(1, L));
}

std::vector<EtaFactor> parse_eta_spec(const std::string& text) {
    std::vector<EtaFactor> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        auto caret = tok.find('^');
        std::string base = tok.substr(0, caret);
        long power = caret == std::string::npos ? 1 : std::stol(tok.substr(caret + 1));
        out.push_back({parse_rational(base), power});
    }
    return out;
}

int dedekind_epsilon(long a, long b, long c, long d) {
    if (a * d - b * c != 1)
        throw NotUnimodular("(" + std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(c) + "," +
                            std::to_string(d) + ") has determinant " + std::to_string(a * d - b * c));
    // epsilon(-gamma) = epsilon(gamma) e(1/4)
    if (c < 0 || (c == 0 && d == -1)) return (dedekind_epsilon(-a, -b, -c, -d) + 6) % 24;
    Rational x;
    if (c == 0) {
        x = make_rational(-b, 24);
    } else {
        auto saw = [](const Rational& v) -> Rational {
            if (v.get_den() == 1) return 0;
            mpz_class fl;
            mpz_fdiv_q(fl.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
            return v - Rational(fl) - make_rational(1, 2);
        };
        Rational s = 0;
        for (long m = 1; m < c; ++m) s += make_rational(m, c) * saw(make_rational(m * d, c));
        x = make_rational(-(a + d), 24 * c) + s / 2 + make_rational(1, 8);
    }
    Rational k = x * 24;
    if (k.get_den() != 1) throw std::logic_error("eta multiplier is not a 24th root of unity");
    long v = k.get_num().get_si() % 24;
    return static_cast<int>(v < 0 ? v + 24 : v);
}

FracSeries lambda(long N, FracExponent cutoff) {
    if (N < 2) throw OutOfRange("Lambda_N needs N >= 2");
    long len = std::max(0L, terms_needed(cutoff, FracExponent(0)));
    std::vector<Rational> c(static_cast<std::size_t>(len), Rational(0));
    if (len > 0) c[0] = make_rational(N * (N - 1), 24);
    for (long k = 1; k < len; ++k) {
        long s = divisor_sigma(k);
        c[static_cast<std::size_t>(k)] += N * s;
        if (N * k < len) c[static_cast<std::size_t>(N * k)] -= N * N * s;
    }
    return FracSeries::from_coefficients(c, 0, FracExponent(len)).truncate(cutoff);
}

FracSeries newform(const std::string& label, FracExponent cutoff) {
    auto eq = [&](const char* spec) { return eta_quotient(parse_eta_spec(spec), cutoff); };
    if (label == "f11") return eq("1^2 11^2");
    if (label == "f14") return eq("1 2 7 14");
    if (label == "f15") return eq("1 3 5 15");
    if (label == "f20") return eq("2^2 10^2");
    if (label == "f23b") return eq("1^2 23^2");
    if (label == "f23a")
        return eq("1^3 23^3 2^-1 46^-1") + Rational(3) * eq("1^2 23^2") + Rational(4) * eq("1 2 23 46") +
               Rational(4) * eq("2^2 46^2");
    if (label == "f44") {
        const auto& doc = load_json("newforms/f44.json");
        long order = doc.at("order").get<long>();
        if (FracExponent(order) < cutoff)
            throw DataExhausted("f44 is stored only below q^" + std::to_string(order) + ", requested q^" +
                                cutoff.to_string());
        std::vector<Rational> c;
        for (const auto& v : doc.at("coefficients")) c.emplace_back(v.get<long>());
        return FracSeries::from_coefficients(c, 0, FracExponent(order)).truncate(cutoff);
    }
    throw UnknownClass("no newform '" + label + "'");
}

FracSeries unary_theta(long m, long r, FracExponent cutoff) {
    if (m < 1) throw OutOfRange("unary theta index must be positive");
    std::vector<FracSeries::Term> terms;
    // (2mn+r)^2 / 4m < cutoff bounds |2mn+r|
    double bound = std::sqrt(std::max(0.0, 4.0 * m * static_cast<double>(cutoff.num()) / cutoff.den())) + 1;
    long nmax = static_cast<long>(bound / (2.0 * m)) + 2;
    for (long n = -nmax; n <= nmax; ++n) {
        long k = 2 * m * n + r;
        FracExponent e(k * k, 4 * m);
        if (e < cutoff && k != 0) terms.emplace_back(e, Rational(k));
    }
    return FracSeries::from_terms(terms, cutoff);
}

FracSeries q_pochhammer(int sign, long e, long step, long n, long cutoff) {
    Dense d = one(cutoff);
    for (long k = 0; k < n; ++k) mul_binomial(d, -sign, e + k * step);
    return to_series(d);
}

namespace {

// sum_n sign(n) q^{a(n)} R_n where R_n = R_{n-1} * update(n)
FracSeries eulerian(long N, const std::function<long(long)>& expo, const std::function<void(Dense&, long)>& update,
                    bool alternating, long n0 = 0) {
    Dense acc(static_cast<std::size_t>(N), Integer(0));
    Dense r = one(N);
    for (long n = n0;; ++n) {
        update(r, n);
        long a = expo(n);
        if (a >= N) break;
        add_shifted(acc, r, a, (alternating && (n % 2)) ? -1 : 1);
    }
    return to_series(acc);
}

}  // namespace

std::vector<std::string> mock_theta_labels() {
    return {"f", "phi", "chi", "omega", "rho", "mu", "U0", "U1", "S0", "S1", "T0", "T1", "phi10", "psi10", "X", "chi10"};
}

FracSeries mock_theta(const std::string& label, long N) {
    if (N <= 0) return FracSeries(1, FracExponent(N));
    if (label == "f")
        return eulerian(N, [](long n) { return n * n; },
                        [](Dense& r, long n) {
                            if (n > 0) {
                                div_binomial(r, 1, n);
                                div_binomial(r, 1, n);
                            }
                        },
                        false);
    if (label == "phi")
        return eulerian(N, [](long n) { return n * n; },
                        [](Dense& r, long n) {
                            if (n > 0) div_binomial(r, 1, 2 * n);
                        },
                        false);
    if (label == "chi")
        // 1 - x + x^2 = (1 + x^3) / (1 + x)
        return eulerian(N, [](long n) { return n * n; },
                        [](Dense& r, long n) {
                            if (n > 0) {
                                mul_binomial(r, 1, n);
                                div_binomial(r, 1, 3 * n);
                            }
                        },
                        false);
    if (label == "omega")
        return eulerian(N, [](long n) { return 2 * n * (n + 1); },
                        [](Dense& r, long n) {
                            div_binomial(r, -1, 2 * n + 1);
                            div_binomial(r, -1, 2 * n + 1);
                        },
                        false);
    if (label == "rho")
        // 1 + x + x^2 = (1 - x^3) / (1 - x)
        return eulerian(N, [](long n) { return 2 * n * (n + 1); },
                        [](Dense& r, long n) {
                            mul_binomial(r, -1, 2 * n + 1);
                            div_binomial(r, -1, 3 * (2 * n + 1));
                        },
                        false);
    if (label == "mu")
        return eulerian(N, [](long n) { return n * n; },
                        [](Dense& r, long n) {
                            if (n > 0) {
                                mul_binomial(r, -1, 2 * n - 1);
                                div_binomial(r, 1, 2 * n);
                                div_binomial(r, 1, 2 * n);
                            }
                        },
                        true);
    if (label == "U0")
        return eulerian(N, [](long n) { return n * n; },
                        [](Dense& r, long n) {
                            if (n > 0) {
                                mul_binomial(r, 1, 2 * n - 1);
                                div_binomial(r, 1, 4 * n);
                            }
                        },
                        false);
    if (label == "U1")
        return eulerian(N, [](long n) { return (n + 1) * (n + 1); },
                        [](Dense& r, long n) {
                            if (n > 0) mul_binomial(r, 1, 2 * n - 1);
                            div_binomial(r, 1, 4 * n + 2);
                        },
                        false);
    if (label == "S0" || label == "S1") {
        bool s1 = label == "S1";
        return eulerian(N, [s1](long n) { return s1 ? n * (n + 2) : n * n; },
                        [](Dense& r, long n) {
                            if (n > 0) {
                                mul_binomial(r, 1, 2 * n - 1);
                                div_binomial(r, 1, 2 * n);
                            }
                        },
                        false);
    }
    if (label == "T0" || label == "T1") {
        bool t1 = label == "T1";
        return eulerian(N, [t1](long n) { return t1 ? n * (n + 1) : (n + 1) * (n + 2); },
                        [](Dense& r, long n) {
                            if (n > 0) mul_binomial(r, 1, 2 * n);
                            div_binomial(r, 1, 2 * n + 1);
                        },
                        false);
    }
    if (label == "phi10" || label == "psi10") {
        bool psi = label == "psi10";
        return eulerian(N, [psi](long n) { return psi ? (n + 1) * (n + 2) / 2 : n * (n + 1) / 2; },
                        [](Dense& r, long n) { div_binomial(r, -1, 2 * n + 1); }, false);
    }
    if (label == "X")
        return eulerian(N, [](long n) { return n * n; },
                        [](Dense& r, long n) {
                            if (n > 0) {
                                div_binomial(r, 1, 2 * n - 1);
                                div_binomial(r, 1, 2 * n);
                            }
                        },
                        true);
    if (label == "chi10")
        return eulerian(N, [](long n) { return (n + 1) * (n + 1); },
                        [](Dense& r, long n) {
                            if (n == 0) {
                                div_binomial(r, 1, 1);
                            } else {
                                div_binomial(r, 1, 2 * n);
                                div_binomial(r, 1, 2 * n + 1);
                            }
                        },
                        true);
    throw UnknownClass("no mock theta function '" + label + "'");
}

}  // namespace umbral
