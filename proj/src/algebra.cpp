#include "umbral/errors.hpp"
#include "umbral/frac_exponent.hpp"
#include "umbral/quad.hpp"
#include "umbral/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace umbral {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& text) {
    std::string t;
    for (char c : text)
        if (c != ' ') t.push_back(c);
    if (t.empty()) throw DataCorrupt("empty rational");
    if (t[0] == '+') t.erase(0, 1);
    Rational r;
    if (r.set_str(t, 10) != 0) throw DataCorrupt("bad rational '" + text + "'");
    if (r.get_den() == 0) throw DataCorrupt("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

std::string rational_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rational_short(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return rational_string(r);
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::int64_t mod_pos(std::int64_t a, std::int64_t b) {
    std::int64_t m = a % b;
    return m < 0 ? m + b : m;
}

// ---------------------------------------------------------------- QuadValue

long squarefree_part(long n, long* factor) {
    if (n == 0) {
        if (factor) *factor = 0;
        return 0;
    }
    long sign = n < 0 ? -1 : 1;
    long m = n < 0 ? -n : n;
    long f = 1;
    for (long p = 2; p * p <= m; ++p) {
        while (m % (p * p) == 0) {
            m /= p * p;
            f *= p;
        }
    }
    if (factor) *factor = f;
    return sign * m;
}

QuadValue::QuadValue(const Rational& rat) : rat_(rat) {}

QuadValue::QuadValue(const Rational& rat, const Rational& irr, long disc)
    : rat_(rat), irr_(irr), disc_(disc) {
    normalize();
}

void QuadValue::normalize() {
    if (irr_ == 0 || disc_ == 0) {
        irr_ = 0;
        disc_ = 0;
        return;
    }
    long f = 1;
    long s = squarefree_part(disc_, &f);
    irr_ *= f;
    disc_ = s;
    if (disc_ == 1) {
        rat_ += irr_;
        irr_ = 0;
        disc_ = 0;
    }
}

QuadValue QuadValue::b(long n) { return QuadValue(make_rational(-1, 2), make_rational(1, 2), -n); }
QuadValue QuadValue::a(long n) { return QuadValue(Rational(0), Rational(1), -n); }

QuadValue QuadValue::conj() const {
    QuadValue r = *this;
    r.irr_ = -r.irr_;
    return r;
}

QuadValue QuadValue::complex_conj() const { return disc_ < 0 ? conj() : *this; }

Rational QuadValue::norm_sq() const {
    if (disc_ < 0) return rat_ * rat_ - irr_ * irr_ * disc_;
    if (disc_ == 0) return rat_ * rat_;
    QuadValue sq = *this * *this;
    if (!sq.is_rational()) throw MixedDiscriminant("norm of a real irrational value is irrational");
    return sq.rat();
}

QuadValue QuadValue::operator-() const {
    QuadValue r = *this;
    r.rat_ = -r.rat_;
    r.irr_ = -r.irr_;
    return r;
}

static long common_disc(const QuadValue& x, const QuadValue& y) {
    if (x.irr() == 0) return y.disc();
    if (y.irr() == 0) return x.disc();
    if (x.disc() != y.disc())
        throw MixedDiscriminant("sqrt(" + std::to_string(x.disc()) + ") vs sqrt(" +
                                std::to_string(y.disc()) + ")");
    return x.disc();
}

QuadValue operator+(const QuadValue& x, const QuadValue& y) {
    long d = common_disc(x, y);
    return QuadValue(x.rat_ + y.rat_, x.irr_ + y.irr_, d);
}

QuadValue operator-(const QuadValue& x, const QuadValue& y) { return x + (-y); }

QuadValue operator*(const QuadValue& x, const QuadValue& y) {
    long d = common_disc(x, y);
    Rational rat = x.rat_ * y.rat_ + x.irr_ * y.irr_ * d;
    Rational irr = x.rat_ * y.irr_ + x.irr_ * y.rat_;
    return QuadValue(rat, irr, d);
}

bool operator==(const QuadValue& x, const QuadValue& y) {
    return x.rat_ == y.rat_ && x.irr_ == y.irr_ && x.disc_ == y.disc_;
}

std::string QuadValue::to_string() const {
    if (irr_ == 0) return rational_short(rat_);
    std::string s;
    if (rat_ != 0) s = rational_short(rat_) + (irr_ > 0 ? "+" : "");
    s += rational_short(irr_) + "*sqrt(" + std::to_string(disc_) + ")";
    return s;
}

// ------------------------------------------------------------- FracExponent

FracExponent::FracExponent(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("zero exponent denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    if (g == 0) g = 1;
    num_ = num / g;
    den_ = den / g;
}

FracExponent FracExponent::from_rational(const Rational& r) {
    return FracExponent(r.get_num().get_si(), r.get_den().get_si());
}

FracExponent operator+(const FracExponent& a, const FracExponent& b) {
    std::int64_t l = std::lcm(a.den_, b.den_);
    return FracExponent(a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l);
}

FracExponent operator-(const FracExponent& a, const FracExponent& b) { return a + (-b); }

FracExponent operator*(const FracExponent& a, const FracExponent& b) {
    return FracExponent(a.num_ * b.num_, a.den_ * b.den_);
}

std::strong_ordering operator<=>(const FracExponent& a, const FracExponent& b) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::int64_t FracExponent::on_lattice(std::int64_t d) const {
    if ((num_ * d) % den_ != 0)
        throw std::invalid_argument("exponent " + to_string() + " not on lattice 1/" + std::to_string(d));
    return num_ * d / den_;
}

FracExponent FracExponent::frac() const { return FracExponent(mod_pos(num_, den_), den_); }

std::string FracExponent::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace umbral
