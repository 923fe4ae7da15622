#pragma once

#include "umbral/fracseries.hpp"

#include <optional>
#include <string>
#include <vector>

namespace umbral {

// Expansion region for meromorphic blocks. Inner is |q| < |y| < 1 and Outer
// is 1 < |y| < |q|^-1; Entire objects (weak Jacobi forms) combine with both.
enum class Annulus { Entire, Inner, Outer };

// Two-variable series sum c(n, k) q^n y^k, exact for n < qcutoff.
// Exponents n lie in (1/qdenom)Z and k in (1/ydenom)Z with ydenom 1 or 2.
// A bounded series stores every nonzero coefficient of each q-row; an
// unbounded one is only known for |k| <= window.
class WindowedSeries {
public:
    WindowedSeries() = default;

    static WindowedSeries zero(FracExponent qcutoff, bool bounded, long window = 0,
                               Annulus annulus = Annulus::Entire);
    // y-free series embedded as the y^0 row
    static WindowedSeries from_fracseries(const FracSeries& s);
    // from explicit terms (q exponent, y exponent, coefficient)
    struct Term {
        FracExponent q;
        FracExponent y;
        Rational c;
    };
    static WindowedSeries from_terms(const std::vector<Term>& terms, FracExponent qcutoff, bool bounded,
                                     long window = 0, Annulus annulus = Annulus::Entire);

    std::int64_t qdenom() const { return qd_; }
    int ydenom() const { return yd_; }
    FracExponent qcutoff() const { return FracExponent(qcut_, qd_); }
    FracExponent qstart() const { return FracExponent(q0_, qd_); }
    bool bounded() const { return bounded_; }
    Annulus annulus() const { return ann_; }
    // half-width of the y window (unbounded) or of the stored support (bounded)
    FracExponent window() const { return FracExponent(Y_, yd_); }
    bool is_zero() const;

    // largest |k| with nonzero coefficient in the row q^n (bounded series)
    std::optional<FracExponent> support_bound(const FracExponent& n) const;

    Rational coeff(const FracExponent& n, const FracExponent& k) const;
    // [y^k] as a one-variable series
    FracSeries y_coefficient(const FracExponent& k) const;
    // row q^n as (k, coefficient) pairs with nonzero coefficients
    std::vector<std::pair<FracExponent, Rational>> row(const FracExponent& n) const;
    std::vector<FracExponent> row_exponents() const;

    FracSeries specialize_z0() const;
    // sum_k k c(n,k) q^n, the z-derivative at z = 0 with 2 pi i removed
    FracSeries dz_at_z0() const;

    WindowedSeries operator-() const;
    friend WindowedSeries operator+(const WindowedSeries& a, const WindowedSeries& b);
    friend WindowedSeries operator-(const WindowedSeries& a, const WindowedSeries& b) { return a + (-b); }
    friend WindowedSeries operator*(const Rational& s, const WindowedSeries& a);
    friend bool operator==(const WindowedSeries& a, const WindowedSeries& b);

    WindowedSeries truncate(const FracExponent& qcutoff) const;
    // forget everything outside |k| <= w (the result is unbounded)
    WindowedSeries restrict_window(const FracExponent& w) const;
    WindowedSeries with_annulus(Annulus a) const;
    // multiply by a y-free series
    WindowedSeries mul_series(const FracSeries& s) const;
    // z -> z + 1/2, i.e. c(n,k) -> (-1)^k c(n,k); integral k only
    WindowedSeries shift_y_half() const;
    // z -> t z for a positive integer t, i.e. y -> y^t
    WindowedSeries scale_y(long t) const;
    // multiply by q^a y^b
    WindowedSeries shift(const FracExponent& a, const FracExponent& b) const;

    // "(q_num/q_den, y_pow) -> rational" lines, sorted
    std::string dump() const;

    // raw layout: value = scale * grid[row * (2Y+1) + (k + Y)] at q^((q0+row)/qd) y^(k/yd)
    struct Layout {
        std::int64_t qd = 1, q0 = 0, qcut = 0;
        int yd = 1;
        std::int64_t Y = 0;
        bool bounded = true;
        Annulus ann = Annulus::Entire;
        Rational scale = 1;
        std::vector<Integer> grid;
    };
    explicit WindowedSeries(Layout l);
    Layout layout() const;

    friend WindowedSeries windowed_mul(const WindowedSeries& a, const WindowedSeries& b,
                                       std::optional<FracExponent> qcutoff,
                                       std::optional<FracExponent> ywindow);

private:
    std::int64_t rows() const { return qcut_ - q0_; }
    std::int64_t width() const { return 2 * Y_ + 1; }
    const Integer& at(std::int64_t r, std::int64_t k) const {
        return grid_[static_cast<std::size_t>(r * width() + (k + Y_))];
    }
    void normalize();
    void lift(std::int64_t qd, int yd);
    void set_window(std::int64_t Y);
    void rescale_common(const Rational& s);

    std::int64_t qd_ = 1, q0_ = 0, qcut_ = 0;
    int yd_ = 1;
    std::int64_t Y_ = 0;
    bool bounded_ = true;
    Annulus ann_ = Annulus::Entire;
    Rational scale_ = 1;
    std::vector<Integer> grid_;
};

WindowedSeries windowed_mul(const WindowedSeries& a, const WindowedSeries& b,
                            std::optional<FracExponent> qcutoff = std::nullopt,
                            std::optional<FracExponent> ywindow = std::nullopt);
inline WindowedSeries operator*(const WindowedSeries& a, const WindowedSeries& b) { return windowed_mul(a, b); }

// first (q, y) where two series differ inside their common region, if any
std::optional<std::pair<FracExponent, FracExponent>> first_difference(const WindowedSeries& a,
                                                                      const WindowedSeries& b);

const char* annulus_name(Annulus a);

}  // namespace umbral
