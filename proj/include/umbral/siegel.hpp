#pragma once

#include "umbral/frac_exponent.hpp"
#include "umbral/rational.hpp"
#include "umbral/windowed.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>

namespace umbral {

// coefficients are exact for m <= max_m, n <= max_n and |r| <= window
struct TripleBox {
    long max_m = 3;
    long max_n = 3;
    long window = 6;
};

// sum c(m, n, r) p^m q^n y^r inside a box; m and n may be fractional, r is integral
class TripleSeries {
public:
    using Key = std::array<FracExponent, 2>;

    TripleSeries() = default;
    explicit TripleSeries(TripleBox box) : box_(box) {}

    const TripleBox& box() const { return box_; }
    bool inside(const FracExponent& m, const FracExponent& n, long r) const;
    // OutOfRange outside the box
    Rational coeff(const FracExponent& m, const FracExponent& n, long r) const;
    // terms outside the box are dropped
    void add(const FracExponent& m, const FracExponent& n, long r, const Rational& c);

    // nonzero coefficients keyed by (m, n) and then r
    const std::map<Key, std::map<long, Rational>>& terms() const { return terms_; }
    std::size_t size() const;
    // exponents m that carry a nonzero coefficient
    std::vector<FracExponent> m_exponents() const;
    // the Fourier-Jacobi coefficient of p^m as a two-variable series, exact for n <= max_n
    WindowedSeries slice(const FracExponent& m) const;

    // [{"m":..,"n":..,"r":..,"c":"num/den"}] sorted by (m, n, r); fractional m or n are quoted "a/b"
    std::string json() const;

private:
    TripleBox box_;
    std::map<Key, std::map<long, Rational>> terms_;
};

// (m, n, r) > 0: m > 0, or m = 0 and n > 0, or m = n = 0 and r < 0
bool positive_triple(long m, long n, long r);

// phi_{10,1} = -eta^18 theta_1^2, the cusp form of weight 10 and index 1
WindowedSeries phi_ten_one(FracExponent qcutoff);
// sum_{m >= 1} (phi_{10,1} | V_m) p^m with the j^9 divisor-sum rule; slices are built on up to jobs threads
TripleSeries additive_lift(TripleBox box = {}, unsigned jobs = 1);

struct LiftPrefactor {
    Rational A, B, C;
};
// A = (1/24) sum_r c(0,r), B = (1/2) sum_{r>0} r c(0,r), C = (1/4) sum_r r^2 c(0,r) from the q^0 row of Z^(l)
LiftPrefactor lift_prefactor(long ell);
// p^A q^B y^C prod_{(m,n,r)>0} (1 - p^m q^n y^r)^{c(mn, r)} with c read from Z^(l); OutOfRange unless lambent
TripleSeries exponential_lift(long ell, TripleBox box = {});

struct IgusaReport {
    bool pass = false;
    long cells = 0;    // box cells compared
    long nonzero = 0;  // cells with a nonzero coefficient
    std::optional<std::array<long, 3>> first_difference;
    Rational additive, exponential;  // values at the first difference
    std::string to_string() const;
};
// additive against exponential lift at lambency two, cell by cell in (m, n, r) order
IgusaReport compare_igusa(TripleBox box = {}, unsigned jobs = 1);

}  // namespace umbral
