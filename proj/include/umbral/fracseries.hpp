#pragma once

#include "umbral/frac_exponent.hpp"
#include "umbral/rational.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace umbral {

// Truncated Laurent series in q^(1/D) with exact rational coefficients.
// Every coefficient with exponent below cutoff() is known exactly; nothing
// is known at or above it.
class FracSeries {
public:
    using Term = std::pair<FracExponent, Rational>;

    FracSeries() = default;
    // the zero series O(q^cutoff) on the lattice (1/denom)Z
    FracSeries(std::int64_t denom, FracExponent cutoff);

    static FracSeries constant(const Rational& c, FracExponent cutoff);
    static FracSeries monomial(const Rational& c, FracExponent e, FracExponent cutoff);
    static FracSeries from_terms(const std::vector<Term>& terms, FracExponent cutoff);
    // integral exponents: coeffs[i] at q^(start + i)
    static FracSeries from_coefficients(const std::vector<Rational>& coeffs, std::int64_t start,
                                        FracExponent cutoff);

    std::int64_t denom() const { return d_; }
    FracExponent cutoff() const { return FracExponent(cut_, d_); }
    bool is_zero() const { return c_.empty(); }
    // lowest exponent with nonzero coefficient; nullopt for the zero series
    std::optional<FracExponent> valuation() const;
    // valuation, or the cutoff for the zero series
    FracExponent order() const;

    Rational coeff(const FracExponent& e) const;
    std::vector<Term> terms() const;

    FracSeries truncate(const FracExponent& cutoff) const;
    FracSeries with_denom(std::int64_t d) const;

    FracSeries operator-() const;
    FracSeries& operator+=(const FracSeries& o);
    FracSeries& operator-=(const FracSeries& o);
    FracSeries& operator*=(const Rational& s);
    friend FracSeries operator+(FracSeries a, const FracSeries& b) { return a += b; }
    friend FracSeries operator-(FracSeries a, const FracSeries& b) { return a -= b; }
    friend FracSeries operator*(FracSeries a, const Rational& s) { return a *= s; }
    friend FracSeries operator*(const Rational& s, FracSeries a) { return a *= s; }
    friend FracSeries operator*(const FracSeries& a, const FracSeries& b);
    // same cutoff and same coefficients
    friend bool operator==(const FracSeries& a, const FracSeries& b) = default;

    FracSeries invert() const;
    FracSeries pow(long n) const;
    // exponent e -> t*e for a positive rational t
    FracSeries rescale(const Rational& t) const;
    // keep only exponents congruent to residue modulo 1
    FracSeries split(const FracExponent& residue) const;
    // multiply by q^e
    FracSeries shift(const FracExponent& e) const;
    // coefficient at exponent e multiplied by f(e)
    FracSeries twist(const std::function<Rational(const FracExponent&)>& f) const;
    // q -> -q; requires integral exponents
    FracSeries negate_q() const;

    // exponent residues mod 1 that carry nonzero coefficients
    std::vector<FracExponent> residues() const;

    std::string to_string() const;

    // internal layout, exposed for tight loops elsewhere in the library
    std::int64_t start_num() const { return start_; }
    std::int64_t cut_num() const { return cut_; }
    const std::vector<Rational>& raw() const { return c_; }

private:
    void trim();
    void lift(std::int64_t d);

    std::int64_t d_ = 1;
    std::int64_t start_ = 0;  // numerator of the exponent of c_[0]
    std::int64_t cut_ = 0;    // numerator of the cutoff
    std::vector<Rational> c_;
};

// First exponent below the common cutoff where a and b disagree.
std::optional<FracExponent> first_difference(const FracSeries& a, const FracSeries& b);
bool equal_to_common_order(const FracSeries& a, const FracSeries& b);
FracExponent min_cutoff(const FracSeries& a, const FracSeries& b);

}  // namespace umbral
