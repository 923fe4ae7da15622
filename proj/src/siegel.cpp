#include "umbral/siegel.hpp"

#include "umbral/catalog.hpp"
#include "umbral/errors.hpp"
#include "umbral/jacobi.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

namespace umbral {

namespace {

FracExponent fe(long v) { return FracExponent(v); }

nlohmann::json exponent_json(const FracExponent& e) {
    if (e.den() == 1) return e.num();
    return e.to_string();
}

// generalized binomial coefficient c(c-1)...(c-k+1)/k!
Rational binomial(const Rational& c, long k) {
    Rational b = 1;
    for (long i = 0; i < k; ++i) b = b * (c - i) / (i + 1);
    return b;
}

// p^i q^j y^s coefficients of the product body, i <= I and j <= J
class Body {
public:
    Body(long I, long J) : I_(I), J_(J), cells_(static_cast<std::size_t>((I + 1) * (J + 1))) {
        at(0, 0)[0] = 1;
    }
    long I() const { return I_; }
    long J() const { return J_; }
    std::map<long, Rational>& at(long i, long j) { return cells_[static_cast<std::size_t>(i * (J_ + 1) + j)]; }
    const std::map<long, Rational>& at(long i, long j) const {
        return cells_[static_cast<std::size_t>(i * (J_ + 1) + j)];
    }

    // multiply by (1 - p^m q^n y^r)^c
    void multiply_factor(long m, long n, long r, const Rational& c) {
        long kmax;
        if (m == 0 && n == 0) {
            if (c < 0 || !is_integer(c))
                throw UnboundedSupport("factor (1 - y^" + std::to_string(r) + ")^" + rational_string(c) +
                                       " has infinite support in y");
            kmax = c.get_num().get_si();
        } else {
            kmax = std::min(m > 0 ? I_ / m : I_ + J_ + 1, n > 0 ? J_ / n : I_ + J_ + 1);
            if (c >= 0 && is_integer(c)) kmax = std::min(kmax, c.get_num().get_si());
        }
        std::vector<Rational> b;
        b.reserve(static_cast<std::size_t>(kmax + 1));
        for (long k = 0; k <= kmax; ++k) b.push_back(k % 2 == 0 ? binomial(c, k) : Rational(-binomial(c, k)));
        Body out(I_, J_);
        out.at(0, 0).clear();
        for (long i = 0; i <= I_; ++i)
            for (long j = 0; j <= J_; ++j) {
                const auto& src = at(i, j);
                if (src.empty()) continue;
                for (long k = 0; k <= kmax; ++k) {
                    long ti = i + k * m, tj = j + k * n;
                    if (ti > I_ || tj > J_) break;
                    if (b[static_cast<std::size_t>(k)] == 0) continue;
                    auto& dst = out.at(ti, tj);
                    for (const auto& [s, v] : src) {
                        auto& d = dst[s + k * r];
                        d += b[static_cast<std::size_t>(k)] * v;
                        if (d == 0) dst.erase(s + k * r);
                    }
                }
            }
        cells_ = std::move(out.cells_);
    }

private:
    long I_, J_;
    std::vector<std::map<long, Rational>> cells_;
};

long floor_of(const Rational& x) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q.get_si();
}

}  // namespace

bool TripleSeries::inside(const FracExponent& m, const FracExponent& n, long r) const {
    return !(fe(box_.max_m) < m) && !(fe(box_.max_n) < n) && std::abs(r) <= box_.window;
}

Rational TripleSeries::coeff(const FracExponent& m, const FracExponent& n, long r) const {
    if (!inside(m, n, r))
        throw OutOfRange("(" + m.to_string() + ", " + n.to_string() + ", " + std::to_string(r) +
                         ") lies outside the box m <= " + std::to_string(box_.max_m) +
                         ", n <= " + std::to_string(box_.max_n) + ", |r| <= " + std::to_string(box_.window));
    auto it = terms_.find(Key{m, n});
    if (it == terms_.end()) return 0;
    auto jt = it->second.find(r);
    return jt == it->second.end() ? Rational(0) : jt->second;
}

void TripleSeries::add(const FracExponent& m, const FracExponent& n, long r, const Rational& c) {
    if (c == 0 || !inside(m, n, r)) return;
    auto& row = terms_[Key{m, n}];
    auto& v = row[r];
    v += c;
    if (v == 0) {
        row.erase(r);
        if (row.empty()) terms_.erase(Key{m, n});
    }
}

std::size_t TripleSeries::size() const {
    std::size_t s = 0;
    for (const auto& [k, row] : terms_) s += row.size();
    return s;
}

std::vector<FracExponent> TripleSeries::m_exponents() const {
    std::vector<FracExponent> out;
    for (const auto& [k, row] : terms_)
        if (out.empty() || out.back() != k[0]) out.push_back(k[0]);
    return out;
}

WindowedSeries TripleSeries::slice(const FracExponent& m) const {
    std::vector<WindowedSeries::Term> t;
    for (const auto& [k, row] : terms_) {
        if (k[0] != m) continue;
        for (const auto& [r, c] : row) t.push_back({k[1], fe(r), c});
    }
    return WindowedSeries::from_terms(t, fe(box_.max_n + 1), false, box_.window);
}

std::string TripleSeries::json() const {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [k, row] : terms_)
        for (const auto& [r, c] : row)
            out.push_back({{"m", exponent_json(k[0])}, {"n", exponent_json(k[1])}, {"r", r}, {"c", rational_string(c)}});
    return out.dump();
}

bool positive_triple(long m, long n, long r) { return m > 0 || (m == 0 && (n > 0 || (n == 0 && r < 0))); }

WindowedSeries phi_ten_one(FracExponent qcutoff) {
    // theta_1 is stored without its unit -i, so -theta_1^2 is the stored square
    auto eta18 = WindowedSeries::from_fracseries(eta(qcutoff).pow(18));
    auto th = jacobi_theta(1, qcutoff);
    return windowed_mul(eta18, windowed_mul(th, th, qcutoff), qcutoff);
}

TripleSeries additive_lift(TripleBox box, unsigned jobs) {
    TripleSeries out(box);
    if (box.max_m < 1 || box.max_n < 0) return out;
    auto phi = phi_ten_one(fe(box.max_m * box.max_n + 1));
    std::vector<std::vector<std::tuple<long, long, Rational>>> slices(static_cast<std::size_t>(box.max_m));
    auto build = [&](long m) {
        auto& sl = slices[static_cast<std::size_t>(m - 1)];
        for (long n = 0; n <= box.max_n; ++n)
            for (long r = -box.window; r <= box.window; ++r) {
                long g = std::gcd(std::gcd(n, std::abs(r)), m);
                Rational c = 0;
                for (long j = 1; j <= g; ++j) {
                    if (g % j != 0) continue;
                    Rational pw = 1;
                    for (int e = 0; e < 9; ++e) pw *= j;
                    c += pw * phi.coeff(fe(n * m / (j * j)), fe(r / j));
                }
                if (c != 0) sl.emplace_back(n, r, c);
            }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(box.max_m)));
    if (jobs == 1) {
        for (long m = 1; m <= box.max_m; ++m) build(m);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < jobs; ++w)
            pool.emplace_back([&, w] {
                for (long m = 1 + static_cast<long>(w); m <= box.max_m; m += static_cast<long>(jobs)) build(m);
            });
        for (auto& t : pool) t.join();
    }
    for (long m = 1; m <= box.max_m; ++m)
        for (const auto& [n, r, c] : slices[static_cast<std::size_t>(m - 1)]) out.add(fe(m), fe(n), r, c);
    return out;
}

LiftPrefactor lift_prefactor(long ell) {
    if (!is_lambent(ell)) throw OutOfRange("lambency " + std::to_string(ell) + " is not lambent");
    auto Z = umbral_Z(ell, fe(1));
    LiftPrefactor p{0, 0, 0};
    for (const auto& [k, c] : Z.row(fe(0))) {
        Rational r = k.value();
        p.A += c;
        if (r > 0) p.B += r * c;
        p.C += r * r * c;
    }
    p.A /= 24;
    p.B /= 2;
    p.C /= 4;
    return p;
}

TripleSeries exponential_lift(long ell, TripleBox box) {
    auto pre = lift_prefactor(ell);
    TripleSeries out(box);
    if (!is_integer(pre.C)) throw DataCorrupt("y exponent " + rational_string(pre.C) + " of the prefactor is not integral");
    long I = floor_of(Rational(box.max_m) - pre.A);
    long J = floor_of(Rational(box.max_n) - pre.B);
    if (I < 0 || J < 0) return out;
    auto Z = umbral_Z(ell, fe(I * J + 1));
    Body body(I, J);
    for (long m = 0; m <= I; ++m)
        for (long n = 0; n <= J; ++n)
            for (const auto& [k, c] : Z.row(fe(m * n))) {
                if (k.den() != 1) throw DataCorrupt("Z has a half-integral y exponent");
                if (positive_triple(m, n, k.num())) body.multiply_factor(m, n, k.num(), c);
            }
    long C = pre.C.get_num().get_si();
    auto A = FracExponent::from_rational(pre.A), B = FracExponent::from_rational(pre.B);
    for (long i = 0; i <= I; ++i)
        for (long j = 0; j <= J; ++j)
            for (const auto& [s, c] : body.at(i, j)) out.add(A + fe(i), B + fe(j), s + C, c);
    return out;
}

std::string IgusaReport::to_string() const {
    std::ostringstream os;
    if (pass) {
        os << "equal on " << cells << " cells (" << nonzero << " nonzero)";
    } else if (first_difference) {
        const auto& d = *first_difference;
        os << "first difference at (m, n, r) = (" << d[0] << ", " << d[1] << ", " << d[2] << "): additive "
           << rational_string(additive) << ", exponential " << rational_string(exponential);
    }
    return os.str();
}

IgusaReport compare_igusa(TripleBox box, unsigned jobs) {
    auto add = additive_lift(box, jobs);
    auto exp = exponential_lift(2, box);
    IgusaReport rep;
    rep.pass = true;
    for (long m = 0; m <= box.max_m; ++m)
        for (long n = 0; n <= box.max_n; ++n)
            for (long r = -box.window; r <= box.window; ++r) {
                ++rep.cells;
                Rational a = add.coeff(fe(m), fe(n), r), e = exp.coeff(fe(m), fe(n), r);
                if (a != 0) ++rep.nonzero;
                if (a != e && rep.pass) {
                    rep.pass = false;
                    rep.first_difference = std::array<long, 3>{m, n, r};
                    rep.additive = a;
                    rep.exponential = e;
                }
            }
    return rep;
}

}  // namespace umbral
