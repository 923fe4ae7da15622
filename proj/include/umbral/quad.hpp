#pragma once

#include "umbral/rational.hpp"

#include <string>

namespace umbral {

// rat + irr * sqrt(disc), disc square-free, disc = 0 exactly when irr = 0.
class QuadValue {
public:
    QuadValue() = default;
    QuadValue(const Rational& rat);  // NOLINT: rationals embed implicitly
    QuadValue(const Rational& rat, const Rational& irr, long disc);

    static QuadValue from_int(long v) { return QuadValue(Rational(v)); }
    // b_n = (-1 + sqrt(-n)) / 2 and a_n = sqrt(-n)
    static QuadValue b(long n);
    static QuadValue a(long n);

    const Rational& rat() const { return rat_; }
    const Rational& irr() const { return irr_; }
    long disc() const { return disc_; }

    bool is_rational() const { return irr_ == 0; }
    bool is_real() const { return irr_ == 0 || disc_ > 0; }

    QuadValue conj() const;
    // |x|^2 = x * complex conjugate, rational for disc < 0 or real values
    Rational norm_sq() const;

    QuadValue operator-() const;
    friend QuadValue operator+(const QuadValue& x, const QuadValue& y);
    friend QuadValue operator-(const QuadValue& x, const QuadValue& y);
    friend QuadValue operator*(const QuadValue& x, const QuadValue& y);
    friend bool operator==(const QuadValue& x, const QuadValue& y);
    friend bool operator!=(const QuadValue& x, const QuadValue& y) { return !(x == y); }

    QuadValue& operator+=(const QuadValue& y) { return *this = *this + y; }
    QuadValue& operator*=(const QuadValue& y) { return *this = *this * y; }

    // complex conjugation (differs from Galois conj() when disc > 0)
    QuadValue complex_conj() const;

    std::string to_string() const;

private:
    void normalize();

    Rational rat_ = 0;
    Rational irr_ = 0;
    long disc_ = 0;
};

// Square-free part of n together with the square factor: n = s * f^2.
long squarefree_part(long n, long* factor = nullptr);

}  // namespace umbral
