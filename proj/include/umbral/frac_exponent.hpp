#pragma once

#include "umbral/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>

namespace umbral {

// A reduced fraction num/den with den > 0, used for q-exponents.
class FracExponent {
public:
    constexpr FracExponent() = default;
    FracExponent(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational value() const { return Rational(make_rational(num_, den_)); }
    static FracExponent from_rational(const Rational& r);

    friend FracExponent operator+(const FracExponent& a, const FracExponent& b);
    friend FracExponent operator-(const FracExponent& a, const FracExponent& b);
    friend FracExponent operator*(const FracExponent& a, const FracExponent& b);
    FracExponent operator-() const { return FracExponent(-num_, den_); }

    friend bool operator==(const FracExponent& a, const FracExponent& b) = default;
    friend std::strong_ordering operator<=>(const FracExponent& a, const FracExponent& b);

    // numerator of this exponent on the lattice (1/d)Z; throws if it is not on it
    std::int64_t on_lattice(std::int64_t d) const;
    // fractional part in [0,1)
    FracExponent frac() const;

    std::string to_string() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace umbral
