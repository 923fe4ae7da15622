#include "umbral/jacobi.hpp"

#include "umbral/catalog.hpp"
#include "umbral/errors.hpp"
#include "umbral/linalg.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace umbral {

namespace {

using T = WindowedSeries::Term;

std::int64_t gcd12(std::int64_t a) { return gcd64(12, a); }

// f_i^2 = theta_i(tau,z)^2 / theta_i(tau,0)^2 for i = 2, 3, 4
WindowedSeries f_squared(int i, FracExponent qcutoff) {
    WindowedSeries th = jacobi_theta(i, qcutoff + FracExponent(1));
    FracSeries th0 = th.specialize_z0();
    return (th * th).mul_series((th0 * th0).invert()).truncate(qcutoff);
}

struct Memo {
    std::recursive_mutex mu;
    std::map<std::pair<long, long>, WindowedSeries> forms;
};

Memo& memo() {
    static Memo m;
    return m;
}

WindowedSeries lin(std::initializer_list<std::pair<Rational, WindowedSeries>> parts, FracExponent qcutoff) {
    WindowedSeries acc = WindowedSeries::zero(qcutoff, true);
    for (const auto& [c, s] : parts) acc = acc + c * s;
    return acc.truncate(qcutoff);
}

WindowedSeries compute_gritsenko(long m, long n, FracExponent N) {
    auto g = [&](long mm, long nn) { return gritsenko(mm, nn, N); };
    auto p = [&](long mm) { return gritsenko(mm, 1, N); };
    auto q = [](long a, long b) { return make_rational(a, b); };
    if (n == 1) {
        switch (m) {
            case 2: {
                WindowedSeries a = f_squared(2, N), b = f_squared(3, N), c = f_squared(4, N);
                return (Rational(4) * (a + b + c)).truncate(N);
            }
            case 3: {
                WindowedSeries a = f_squared(2, N), b = f_squared(3, N), c = f_squared(4, N);
                return (Rational(2) * (a * b + b * c + c * a)).truncate(N);
            }
            case 4: {
                WindowedSeries a = f_squared(2, N), b = f_squared(3, N), c = f_squared(4, N);
                return (Rational(4) * (a * b * c)).truncate(N);
            }
            case 5: return lin({{q(1, 4), p(4) * p(2)}, {q(-1, 4), p(3) * p(3)}}, N);
            case 7: return lin({{1, p(3) * p(5)}, {-1, p(4) * p(4)}}, N);
            case 9: return lin({{1, p(3) * p(7)}, {-1, p(5) * p(5)}}, N);
            case 13: return lin({{1, p(5) * p(9)}, {-2, p(7) * p(7)}}, N);
            default: break;
        }
        long d = gcd12(m - 1);
        auto base = [&]() {
            return lin({{gcd12(m - 5), p(m - 4) * p(5)},
                        {gcd12(m - 3), p(m - 2) * p(3)},
                        {-2 * gcd12(m - 4), p(m - 3) * p(4)}},
                       N);
        };
        if (d == 1 && m > 5) return base();
        if (d == 2 && m > 10) return (q(1, 2) * base()).truncate(N);
        if (d == 3 && m > 9)
            return lin({{q(2, 3) * gcd12(m - 4), p(m - 3) * p(4)},
                        {q(1, 3) * gcd12(m - 7), p(m - 6) * p(7)},
                        {-gcd12(m - 5), p(m - 4) * p(5)}},
                       N);
        if (d == 4 && m > 16)
            return lin({{q(1, 4) * gcd12(m - 13), p(m - 12) * p(13)},
                        {q(1, 4) * gcd12(m - 5), p(m - 4) * p(5)},
                        {q(-1, 4) * gcd12(m - 9), p(m - 8) * p(9)}},
                       N);
        if (d == 6 && m > 18)
            return lin({{q(1, 3) * gcd12(m - 4), p(m - 3) * p(4)},
                        {q(1, 6) * gcd12(m - 7), p(m - 6) * p(7)},
                        {q(-1, 2) * gcd12(m - 5), p(m - 4) * p(5)}},
                       N);
        if (d == 12 && m > 24)
            return lin({{q(1, 6) * gcd12(m - 4), p(m - 3) * p(4)},
                        {q(-1, 4) * gcd12(m - 5), p(m - 4) * p(5)},
                        {q(1, 12) * gcd12(m - 7), p(m - 6) * p(7)}},
                       N);
        throw OutOfRange("no recursion defines phi^(" + std::to_string(m) + ")_1");
    }
    if (n == 2) {
        switch (m) {
            case 3: return lin({{1, p(2) * p(2)}, {-24, p(3)}}, N);
            case 4: return lin({{1, p(2) * p(3)}, {-18, p(4)}}, N);
            case 5: return lin({{1, p(2) * p(4)}, {-16, p(5)}}, N);
            default:
                return lin({{gcd12(m - 4), p(m - 3) * p(4)}, {-gcd12(m - 5), p(m - 4) * p(5)}, {-gcd12(m - 1), p(m)}},
                           N);
        }
    }
    if (n == m - 1) {
        WindowedSeries acc = p(2);
        for (long i = 1; i < m - 1; ++i) acc = (acc * p(2)).truncate(N);
        return acc;
    }
    if (n == m - 2) {
        WindowedSeries acc = p(3);
        for (long i = 0; i < m - 3; ++i) acc = (acc * p(2)).truncate(N);
        return acc;
    }
    return (g(m - 3, n - 1) * p(4)).truncate(N);
}

// P = prod_n (1-q^n)^2 (1-y^2 q^n)(1-y^-2 q^n) / ((1-y q^n)^2 (1-y^-1 q^n)^2) on rows q^0..q^(N-1),
// with |k| <= 2 * row
std::vector<std::vector<Integer>> psi_product(long N) {
    long K = 2 * N + 2;
    std::vector<std::vector<Integer>> G(static_cast<std::size_t>(N), std::vector<Integer>(2 * K + 1, Integer(0)));
    if (N == 0) return G;
    G[0][K] = 1;
    auto mul = [&](long n, long a) {
        for (long r = N - 1; r >= n; --r) {
            long lim = std::min(K, 2 * r);
            auto& dst = G[r];
            const auto& src = G[r - n];
            for (long k = -lim; k <= lim; ++k) {
                long s = k - a;
                if (s < -K || s > K) continue;
                const Integer& v = src[s + K];
                if (v != 0) dst[k + K] -= v;
            }
        }
    };
    auto div = [&](long n, long a) {
        for (long r = n; r < N; ++r) {
            long lim = std::min(K, 2 * r);
            auto& dst = G[r];
            const auto& src = G[r - n];
            for (long k = -lim; k <= lim; ++k) {
                long s = k - a;
                if (s < -K || s > K) continue;
                const Integer& v = src[s + K];
                if (v != 0) dst[k + K] += v;
            }
        }
    };
    for (long n = 1; n < N; ++n) {
        mul(n, 0);
        mul(n, 0);
        mul(n, 2);
        mul(n, -2);
        div(n, 1);
        div(n, 1);
        div(n, -1);
        div(n, -1);
    }
    return G;
}

WindowedSeries finite_part(const WindowedSeries& phi, long m, FracExponent N, Annulus ann) {
    WindowedSeries f = phi.truncate(N);
    Rational chi = f.specialize_z0().coeff(FracExponent(0));
    long W = (m - 1) + static_cast<long>(f.window().value().get_num().get_si() + 1);
    WindowedSeries psi = psi_one_one(N, W, ann);
    WindowedSeries prod = windowed_mul(psi, f, N, FracExponent(m - 1));
    WindowedSeries mu = appell_mu(m, 0, N, m - 1, ann);
    return prod - chi * mu;
}

FracExponent h_offset(long r, long m) { return FracExponent(r * r, 4 * m); }

}  // namespace

WindowedSeries jacobi_theta(int i, FracExponent qcutoff) {
    if (i < 1 || i > 4) throw OutOfRange("theta index must be 1..4");
    std::vector<T> terms;
    Rational cut = qcutoff.value();
    bool half = (i == 1 || i == 2);
    long L = static_cast<long>(std::sqrt(8.0 * std::max(0.0, cut.get_d()))) + 2;
    for (long n = -L; n <= L; ++n) {
        FracExponent qe = half ? FracExponent((2 * n + 1) * (2 * n + 1), 8) : FracExponent(n * n, 2);
        if (!(qe < qcutoff)) continue;
        FracExponent ye = half ? FracExponent(2 * n + 1, 2) : FracExponent(n);
        long sign = ((i == 1 || i == 4) && (n % 2 != 0)) ? -1 : 1;
        terms.push_back({qe, ye, sign});
    }
    return WindowedSeries::from_terms(terms, qcutoff, true);
}

WindowedSeries index_theta(long m, long r, FracExponent qcutoff) {
    if (m < 1) throw OutOfRange("theta index must be positive");
    std::vector<T> terms;
    double cut = qcutoff.value().get_d();
    long L = static_cast<long>(std::sqrt(std::max(0.0, cut) / m)) + std::abs(r) / (2 * m) + 2;
    for (long n = -L; n <= L; ++n) {
        long e = 2 * m * n + r;
        FracExponent qe(e * e, 4 * m);
        if (qe < qcutoff) terms.push_back({qe, FracExponent(e), 1});
    }
    return WindowedSeries::from_terms(terms, qcutoff, true);
}

WindowedSeries hat_theta(long m, long r, FracExponent qcutoff) {
    return index_theta(m, -r, qcutoff) - index_theta(m, r, qcutoff);
}

WindowedSeries gritsenko(long m, long n, FracExponent qcutoff) {
    if (m < 2 || m > 25 || n < 1 || n > m - 1)
        throw OutOfRange("phi^(" + std::to_string(m) + ")_" + std::to_string(n) + " needs 2 <= m <= 25, 1 <= n < m");
    Memo& M = memo();
    std::lock_guard<std::recursive_mutex> lock(M.mu);
    auto it = M.forms.find({m, n});
    if (it != M.forms.end() && !(it->second.qcutoff() < qcutoff)) return it->second.truncate(qcutoff);
    WindowedSeries s = compute_gritsenko(m, n, qcutoff);
    M.forms[{m, n}] = s;
    return s;
}

bool is_lambent(long ell) { return ell == 2 || ell == 3 || ell == 4 || ell == 5 || ell == 7 || ell == 13; }

WindowedSeries umbral_Z(long ell, FracExponent qcutoff) {
    if (!is_lambent(ell)) throw OutOfRange("lambency " + std::to_string(ell) + " is not one of 2,3,4,5,7,13");
    return Rational(2) * gritsenko(ell, 1, qcutoff);
}

long umbral_chi(long ell) {
    Rational c = umbral_Z(ell, FracExponent(1)).specialize_z0().coeff(FracExponent(0));
    return c.get_num().get_si();
}

WindowedSeries zeta_form(FracExponent qcutoff) {
    WindowedSeries t = jacobi_theta(1, qcutoff + FracExponent(1));
    WindowedSeries t2 = t * t, t4 = t2 * t2, t8 = t4 * t4;
    WindowedSeries t12 = t8 * t4;
    FracSeries e = eta_quotient({{Rational(1), -12}}, qcutoff + FracExponent(1));
    return t12.mul_series(e).truncate(qcutoff);
}

WindowedSeries psi_one_one(FracExponent qcutoff, long window, Annulus annulus) {
    if (annulus == Annulus::Entire) throw std::invalid_argument("Psi_{1,1} needs an annulus");
    long N = std::max<long>(0, static_cast<long>(ceil_div(qcutoff.num(), qcutoff.den())));
    auto P = psi_product(N);
    long K = 2 * N + 2;
    WindowedSeries::Layout l;
    l.qd = 1;
    l.q0 = 0;
    l.qcut = N;
    l.Y = window;
    l.bounded = false;
    l.ann = annulus;
    long w = 2 * window + 1;
    l.grid.assign(static_cast<std::size_t>(N * w), Integer(0));
    auto Pat = [&](long r, long k) -> const Integer& {
        static const Integer zero(0);
        return (k < -K || k > K) ? zero : P[r][k + K];
    };
    for (long r = 0; r < N; ++r) {
        Integer* row = &l.grid[static_cast<std::size_t>(r * w)];
        if (annulus == Annulus::Inner) {
            Integer run = 0;  // sum of P[j] for j < k
            for (long j = -K; j < -window; ++j) run += Pat(r, j);
            for (long k = -window; k <= window; ++k) {
                row[k + window] = -Pat(r, k) - 2 * run;
                run += Pat(r, k);
            }
        } else {
            Integer run = 0;  // sum of P[j] for j > k
            for (long j = K; j > window; --j) run += Pat(r, j);
            for (long k = window; k >= -window; --k) {
                row[k + window] = Pat(r, k) + 2 * run;
                run += Pat(r, k);
            }
        }
    }
    return WindowedSeries(std::move(l)).truncate(qcutoff);
}

WindowedSeries appell_mu(long m, long twoj, FracExponent qcutoff, long window, Annulus annulus) {
    if (m < 1 || twoj < 0 || twoj > m - 1) throw OutOfRange("mu^(m)_j needs 2j in {0, ..., m-1}");
    if (annulus == Annulus::Entire) throw std::invalid_argument("mu needs an annulus");
    long N = static_cast<long>(ceil_div(qcutoff.num(), qcutoff.den()));
    long sign = (twoj % 2 == 0) ? -1 : 1;
    long W = window;
    std::map<std::pair<long, long>, long> acc;
    for (long k = -N - 1; k <= N + 1; ++k) {
        bool small = annulus == Annulus::Inner ? k >= 0 : k >= 1;
        long lo = -W - 2 * m * k, hi = W - 2 * m * k;
        if (small) {
            lo = std::max(lo, -twoj);
            if (k > 0) hi = std::min(hi, ceil_div(N - m * k * k, k) - 1);
            for (long e = lo; e <= hi; ++e) {
                long qe = m * k * k + k * e;
                if (qe >= N) continue;
                acc[{qe, 2 * m * k + e}] += sign * std::min(e + twoj + 1, 2 * twoj + 2);
            }
        } else {
            hi = std::min(hi, twoj);
            if (k < 0) lo = std::max(lo, floor_div(N - m * k * k, k) + 1);
            for (long e = lo; e <= hi; ++e) {
                long qe = m * k * k + k * e;
                if (qe >= N) continue;
                acc[{qe, 2 * m * k + e}] += -sign * std::min(2 * twoj + 2, 1 + twoj - e);
            }
        }
    }
    std::vector<T> terms;
    for (const auto& [key, c] : acc)
        if (c != 0) terms.push_back({FracExponent(key.first), FracExponent(key.second), c});
    return WindowedSeries::from_terms(terms, FracExponent(N), false, W, annulus).truncate(qcutoff);
}

HVector theta_decompose(const WindowedSeries& phi, long m, FracExponent qcutoff, Annulus annulus) {
    WindowedSeries F = finite_part(phi, m, qcutoff, annulus);
    HVector h;
    h.lambency = m;
    for (long r = 1; r < m; ++r) h.components.push_back(-F.y_coefficient(FracExponent(r)).shift(-h_offset(r, m)));
    return h;
}

HVector extract_H(long ell, FracExponent qcutoff, Annulus annulus) {
    if (!is_lambent(ell)) throw OutOfRange("lambency " + std::to_string(ell) + " is not one of 2,3,4,5,7,13");
    FracExponent N(ceil_div((qcutoff + h_offset(ell - 1, ell)).num(), (qcutoff + h_offset(ell - 1, ell)).den()));
    HVector h = theta_decompose(umbral_Z(ell, N), ell, N, annulus);
    for (auto& c : h.components) c = c.truncate(qcutoff);
    return h;
}

ExtremalReport verify_extremal(long ell, FracExponent qcutoff) {
    ExtremalReport rep;
    HVector h = extract_H(ell, qcutoff);
    rep.polar_exponent = FracExponent(-1, 4 * ell);
    rep.polar_coefficient = h[1].coeff(rep.polar_exponent);
    if (rep.polar_coefficient != -2) rep.problems.push_back("H_1 polar coefficient is " + rational_string(rep.polar_coefficient));
    for (long r = 1; r < ell; ++r)
        for (const auto& [e, c] : h[r].terms()) {
            if (FracExponent(0) < e) break;
            if (r == 1 && e == rep.polar_exponent) continue;
            rep.problems.push_back("H_" + std::to_string(r) + " has a term " + rational_string(c) + " q^" + e.to_string());
        }
    rep.pass = rep.problems.empty();
    return rep;
}

ExtremalDimension extremal_space_dim(long m, std::optional<long> depth) {
    if (m < 2 || m > 25) throw OutOfRange("extremal dimension is available for 2 <= m <= 25");
    long nmax = depth ? *depth : std::max<long>(4, (m - 1) * (m - 1) / (4 * m));
    FracExponent N(nmax + 1);
    std::vector<WindowedSeries> basis{gritsenko(m, 1, N)};
    WindowedSeries z = zeta_form(N), zi = z;
    for (long i = 1; i <= (m - 1) / 6; ++i) {
        for (long j = 1; j <= m - 6 * i - 1; ++j) basis.push_back((zi * gritsenko(m - 6 * i, j, N)).truncate(N));
        zi = (zi * z).truncate(N);
    }
    std::vector<std::pair<long, long>> conds;
    for (long n = 0; n <= nmax; ++n)
        for (long r = 1; r < m; ++r)
            if (r * r >= 4 * m * n && !(n == 0 && r == 1)) conds.emplace_back(n, r);
    Matrix A(conds.size(), std::vector<Rational>(basis.size()));
    for (std::size_t b = 0; b < basis.size(); ++b) {
        WindowedSeries F = finite_part(basis[b], m, N, Annulus::Inner);
        for (std::size_t i = 0; i < conds.size(); ++i)
            A[i][b] = F.coeff(FracExponent(conds[i].first), FracExponent(conds[i].second));
    }
    ExtremalDimension d;
    d.m = m;
    d.nmax = nmax;
    d.unknowns = static_cast<long>(basis.size());
    d.equations = static_cast<long>(conds.size());
    d.rank = static_cast<long>(rank(A, basis.size()));
    d.dimension = d.unknowns - d.rank;
    return d;
}

IdentityReport verify_n4_identity(long ell, FracExponent qcutoff, long window) {
    WindowedSeries Z = umbral_Z(ell, qcutoff);
    Rational chi = Z.specialize_z0().coeff(FracExponent(0));
    long W = window + static_cast<long>(Z.window().value().get_num().get_si()) + 1;
    WindowedSeries lhs = windowed_mul(psi_one_one(qcutoff, W, Annulus::Inner), Z, qcutoff, FracExponent(window)) -
                         chi * appell_mu(ell, 0, qcutoff, window, Annulus::Inner);
    HVector h = theta_decompose(Z, ell, qcutoff);
    WindowedSeries rhs = WindowedSeries::zero(qcutoff, true);
    for (long r = 1; r < ell; ++r)
        rhs = rhs + hat_theta(ell, r, qcutoff + FracExponent(1)).mul_series(h[r]);
    WindowedSeries res = lhs - rhs.restrict_window(FracExponent(window)).truncate(qcutoff);
    IdentityReport rep;
    if (auto d = first_difference(res, WindowedSeries::zero(qcutoff, true)))
        rep.first_residual = "q^" + d->first.to_string() + " y^" + d->second.to_string();
    rep.pass = rep.first_residual.empty();
    return rep;
}

}  // namespace umbral
