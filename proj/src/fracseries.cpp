#include "umbral/fracseries.hpp"

#include "umbral/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace umbral {

namespace {

bool all_integral(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (x.get_den() != 1) return false;
    return true;
}

std::string exp_text(const FracExponent& e) { return "q^{" + e.to_string() + "}"; }

}  // namespace

FracSeries::FracSeries(std::int64_t denom, FracExponent cutoff) {
    d_ = lcm64(denom, cutoff.den());
    cut_ = cutoff.on_lattice(d_);
    start_ = cut_;
}

FracSeries FracSeries::constant(const Rational& c, FracExponent cutoff) {
    return monomial(c, FracExponent(0), cutoff);
}

FracSeries FracSeries::monomial(const Rational& c, FracExponent e, FracExponent cutoff) {
    FracSeries s(e.den(), cutoff);
    if (e < cutoff && c != 0) {
        s.start_ = e.on_lattice(s.d_);
        s.c_.push_back(c);
    }
    return s;
}

FracSeries FracSeries::from_terms(const std::vector<Term>& terms, FracExponent cutoff) {
    std::int64_t d = cutoff.den();
    for (const auto& t : terms) d = lcm64(d, t.first.den());
    FracSeries s(d, cutoff);
    std::map<std::int64_t, Rational> acc;
    for (const auto& t : terms) {
        if (!(t.first < cutoff)) continue;
        acc[t.first.on_lattice(d)] += t.second;
    }
    if (!acc.empty()) {
        s.start_ = acc.begin()->first;
        s.c_.assign(static_cast<std::size_t>(acc.rbegin()->first - s.start_ + 1), Rational(0));
        for (auto& [k, v] : acc) s.c_[static_cast<std::size_t>(k - s.start_)] = v;
    }
    s.trim();
    return s;
}

FracSeries FracSeries::from_coefficients(const std::vector<Rational>& coeffs, std::int64_t start,
                                         FracExponent cutoff) {
    FracSeries s(1, cutoff);
    s.start_ = start * s.d_;
    if (s.d_ == 1) {
        std::int64_t room = std::max<std::int64_t>(0, s.cut_ - start);
        std::size_t n = std::min<std::size_t>(coeffs.size(), static_cast<std::size_t>(room));
        s.c_.assign(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(n));
    } else {
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            std::int64_t e = (start + static_cast<std::int64_t>(i)) * s.d_;
            if (e >= s.cut_) break;
            s.c_.resize(static_cast<std::size_t>(e - s.start_ + 1), Rational(0));
            s.c_.back() = coeffs[i];
        }
    }
    s.trim();
    return s;
}

void FracSeries::trim() {
    std::size_t lo = 0;
    while (lo < c_.size() && c_[lo] == 0) ++lo;
    if (lo == c_.size()) {
        c_.clear();
        start_ = cut_;
        return;
    }
    std::size_t hi = c_.size();
    while (hi > lo && c_[hi - 1] == 0) --hi;
    if (lo > 0 || hi < c_.size()) {
        c_.erase(c_.begin() + static_cast<std::ptrdiff_t>(hi), c_.end());
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lo));
        start_ += static_cast<std::int64_t>(lo);
    }
    // shrink the lattice to the coarsest one carrying every exponent
    std::int64_t g = std::gcd(d_, cut_);
    for (std::size_t i = 0; i < c_.size() && g > 1; ++i)
        if (c_[i] != 0) g = std::gcd(g, start_ + static_cast<std::int64_t>(i));
    if (g > 1) {
        std::vector<Rational> nc;
        nc.reserve(c_.size() / static_cast<std::size_t>(g) + 1);
        for (std::size_t i = 0; i < c_.size(); i += static_cast<std::size_t>(g)) nc.push_back(c_[i]);
        c_ = std::move(nc);
        start_ /= g;
        cut_ /= g;
        d_ /= g;
    }
}

void FracSeries::lift(std::int64_t d) {
    if (d == d_) return;
    std::int64_t k = d / d_;
    if (k * d_ != d) throw std::logic_error("lattice lift to a non-multiple");
    if (!c_.empty()) {
        std::vector<Rational> nc(static_cast<std::size_t>((static_cast<std::int64_t>(c_.size()) - 1) * k + 1),
                                 Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) nc[i * static_cast<std::size_t>(k)] = c_[i];
        c_ = std::move(nc);
    }
    start_ *= k;
    cut_ *= k;
    d_ = d;
}

std::optional<FracExponent> FracSeries::valuation() const {
    if (c_.empty()) return std::nullopt;
    return FracExponent(start_, d_);
}

FracExponent FracSeries::order() const { return c_.empty() ? cutoff() : FracExponent(start_, d_); }

Rational FracSeries::coeff(const FracExponent& e) const {
    if (!(e < cutoff()))
        throw CutoffUnderflow("coefficient at q^" + e.to_string() + " requested beyond cutoff q^" +
                              cutoff().to_string());
    if ((e.num() * d_) % e.den() != 0) return 0;
    std::int64_t k = e.num() * d_ / e.den() - start_;
    if (k < 0 || k >= static_cast<std::int64_t>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(k)];
}

std::vector<FracSeries::Term> FracSeries::terms() const {
    std::vector<Term> out;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) out.emplace_back(FracExponent(start_ + static_cast<std::int64_t>(i), d_), c_[i]);
    return out;
}

FracSeries FracSeries::truncate(const FracExponent& cutoff) const {
    if (this->cutoff() < cutoff)
        throw CutoffUnderflow("truncation to q^" + cutoff.to_string() + " exceeds known order q^" +
                              this->cutoff().to_string());
    FracSeries s = *this;
    s.lift(lcm64(d_, cutoff.den()));
    s.cut_ = cutoff.on_lattice(s.d_);
    if (!s.c_.empty()) {
        std::int64_t keep = s.cut_ - s.start_;
        if (keep <= 0)
            s.c_.clear();
        else if (keep < static_cast<std::int64_t>(s.c_.size()))
            s.c_.resize(static_cast<std::size_t>(keep));
    }
    s.trim();
    return s;
}

FracSeries FracSeries::with_denom(std::int64_t d) const {
    FracSeries s = *this;
    s.lift(lcm64(d, d_));
    return s;
}

FracSeries FracSeries::operator-() const {
    FracSeries s = *this;
    for (auto& x : s.c_) x = -x;
    return s;
}

FracSeries& FracSeries::operator+=(const FracSeries& o) {
    std::int64_t d = lcm64(d_, o.d_);
    FracSeries b = o;
    lift(d);
    b.lift(d);
    std::int64_t cut = std::min(cut_, b.cut_);
    if (b.c_.empty()) {
        cut_ = cut;
        *this = truncate(FracExponent(cut, d));
        return *this;
    }
    if (c_.empty()) {
        b.cut_ = cut;
        *this = b.truncate(FracExponent(cut, d));
        return *this;
    }
    std::int64_t lo = std::min(start_, b.start_);
    std::int64_t hi = std::max(start_ + static_cast<std::int64_t>(c_.size()),
                               b.start_ + static_cast<std::int64_t>(b.c_.size()));
    hi = std::min(hi, cut);
    std::vector<Rational> nc(static_cast<std::size_t>(std::max<std::int64_t>(0, hi - lo)), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        std::int64_t k = start_ + static_cast<std::int64_t>(i);
        if (k < hi) nc[static_cast<std::size_t>(k - lo)] += c_[i];
    }
    for (std::size_t i = 0; i < b.c_.size(); ++i) {
        std::int64_t k = b.start_ + static_cast<std::int64_t>(i);
        if (k < hi) nc[static_cast<std::size_t>(k - lo)] += b.c_[i];
    }
    c_ = std::move(nc);
    start_ = lo;
    cut_ = cut;
    trim();
    return *this;
}

FracSeries& FracSeries::operator-=(const FracSeries& o) { return *this += -o; }

FracSeries& FracSeries::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        start_ = cut_;
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

FracSeries operator*(const FracSeries& a0, const FracSeries& b0) {
    std::int64_t d = lcm64(a0.d_, b0.d_);
    FracSeries a = a0, b = b0;
    a.lift(d);
    b.lift(d);
    std::int64_t va = a.c_.empty() ? a.cut_ : a.start_;
    std::int64_t vb = b.c_.empty() ? b.cut_ : b.start_;
    FracSeries r;
    r.d_ = d;
    r.cut_ = std::min(va + b.cut_, vb + a.cut_);
    r.start_ = r.cut_;
    if (a.c_.empty() || b.c_.empty()) {
        r.trim();
        return r;
    }
    std::int64_t base = a.start_ + b.start_;
    std::int64_t len = r.cut_ - base;
    if (len <= 0) {
        r.trim();
        return r;
    }
    std::size_t n = static_cast<std::size_t>(len);
    std::size_t na = std::min(a.c_.size(), n), nb = std::min(b.c_.size(), n);
    if (all_integral(a.c_) && all_integral(b.c_)) {
        std::vector<Integer> acc(n, Integer(0));
        for (std::size_t i = 0; i < na; ++i) {
            const mpz_class& ai = a.c_[i].get_num();
            if (ai == 0) continue;
            std::size_t lim = std::min(nb, n - i);
            for (std::size_t j = 0; j < lim; ++j) {
                const mpz_class& bj = b.c_[j].get_num();
                if (bj == 0) continue;
                mpz_addmul(acc[i + j].get_mpz_t(), ai.get_mpz_t(), bj.get_mpz_t());
            }
        }
        r.c_.resize(n);
        for (std::size_t k = 0; k < n; ++k) r.c_[k] = Rational(acc[k]);
    } else {
        r.c_.assign(n, Rational(0));
        Rational t;
        for (std::size_t i = 0; i < na; ++i) {
            if (a.c_[i] == 0) continue;
            std::size_t lim = std::min(nb, n - i);
            for (std::size_t j = 0; j < lim; ++j) {
                if (b.c_[j] == 0) continue;
                t = a.c_[i] * b.c_[j];
                r.c_[i + j] += t;
            }
        }
    }
    r.start_ = base;
    r.trim();
    return r;
}

FracSeries FracSeries::invert() const {
    if (c_.empty() || c_[0] == 0)
        throw NotInvertible("series has no leading coefficient below q^" + cutoff().to_string());
    std::int64_t v = start_;
    std::int64_t prec = cut_ - v;
    std::size_t n = static_cast<std::size_t>(prec);
    FracSeries r;
    r.d_ = d_;
    r.start_ = -v;
    r.cut_ = -v + prec;
    const Rational& a0 = c_[0];
    bool unit = all_integral(c_) && (a0 == 1 || a0 == -1);
    if (unit) {
        int s = a0 == 1 ? 1 : -1;
        std::vector<Integer> a(n, Integer(0)), b(n, Integer(0));
        for (std::size_t i = 0; i < std::min(n, c_.size()); ++i) a[i] = c_[i].get_num();
        b[0] = s;
        Integer acc;
        for (std::size_t k = 1; k < n; ++k) {
            acc = 0;
            for (std::size_t j = 1; j <= k; ++j)
                if (a[j] != 0) mpz_addmul(acc.get_mpz_t(), a[j].get_mpz_t(), b[k - j].get_mpz_t());
            b[k] = s == 1 ? Integer(-acc) : acc;
        }
        r.c_.resize(n);
        for (std::size_t k = 0; k < n; ++k) r.c_[k] = Rational(b[k]);
    } else {
        Rational inv0 = 1 / a0;
        r.c_.assign(n, Rational(0));
        r.c_[0] = inv0;
        Rational acc;
        for (std::size_t k = 1; k < n; ++k) {
            acc = 0;
            for (std::size_t j = 1; j <= k && j < c_.size(); ++j)
                if (c_[j] != 0) acc += c_[j] * r.c_[k - j];
            r.c_[k] = -acc * inv0;
        }
    }
    r.trim();
    return r;
}

FracSeries FracSeries::pow(long n) const {
    if (n < 0) return invert().pow(-n);
    FracSeries result = constant(1, FracExponent(cut_ - (c_.empty() ? cut_ : start_), d_));
    FracSeries base = *this;
    bool first = true;
    while (n > 0) {
        if (n & 1) {
            result = first ? base : result * base;
            first = false;
        }
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

FracSeries FracSeries::rescale(const Rational& t) const {
    if (t <= 0) throw std::invalid_argument("rescale factor must be positive");
    std::int64_t p = t.get_num().get_si(), q = t.get_den().get_si();
    FracSeries s;
    s.d_ = d_ * q;
    s.cut_ = cut_ * p;
    s.start_ = start_ * p;
    if (!c_.empty()) {
        s.c_.assign(static_cast<std::size_t>((static_cast<std::int64_t>(c_.size()) - 1) * p + 1), Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) s.c_[i * static_cast<std::size_t>(p)] = c_[i];
    } else {
        s.start_ = s.cut_;
    }
    s.trim();
    return s;
}

FracSeries FracSeries::split(const FracExponent& residue) const {
    FracSeries s = *this;
    if (d_ % residue.den() != 0) {
        s.c_.clear();
        s.start_ = s.cut_;
        s.trim();
        return s;
    }
    std::int64_t r = mod_pos(residue.num() * (d_ / residue.den()), d_);
    for (std::size_t i = 0; i < s.c_.size(); ++i)
        if (mod_pos(s.start_ + static_cast<std::int64_t>(i), d_) != r) s.c_[i] = 0;
    s.trim();
    return s;
}

FracSeries FracSeries::shift(const FracExponent& e) const {
    FracSeries s = *this;
    s.lift(lcm64(d_, e.den()));
    std::int64_t k = e.on_lattice(s.d_);
    s.start_ += k;
    s.cut_ += k;
    s.trim();
    return s;
}

FracSeries FracSeries::twist(const std::function<Rational(const FracExponent&)>& f) const {
    FracSeries s = *this;
    for (std::size_t i = 0; i < s.c_.size(); ++i)
        if (s.c_[i] != 0) s.c_[i] *= f(FracExponent(s.start_ + static_cast<std::int64_t>(i), d_));
    s.trim();
    return s;
}

FracSeries FracSeries::negate_q() const {
    return twist([](const FracExponent& e) -> Rational {
        if (e.den() != 1) throw std::invalid_argument("q -> -q needs integral exponents");
        return (e.num() % 2 == 0) ? 1 : -1;
    });
}

std::vector<FracExponent> FracSeries::residues() const {
    std::vector<FracExponent> out;
    for (const auto& t : terms()) {
        FracExponent r = t.first.frac();
        if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string FracSeries::to_string() const {
    if (c_.empty()) return "O(" + exp_text(cutoff()) + ")";
    FracExponent v(start_, d_);
    std::string s = exp_text(v) + "*(";
    bool first = true;
    for (const auto& [e, c] : terms()) {
        FracExponent rel = e - v;
        std::string cs = rational_short(c);
        if (first) {
            s += cs;
        } else if (c < 0) {
            s += " - " + rational_short(-c);
        } else {
            s += " + " + cs;
        }
        if (rel != FracExponent(0)) s += "*" + exp_text(rel);
        first = false;
    }
    s += " + O(" + exp_text(cutoff() - v) + "))";
    return s;
}

FracExponent min_cutoff(const FracSeries& a, const FracSeries& b) {
    return std::min(a.cutoff(), b.cutoff());
}

std::optional<FracExponent> first_difference(const FracSeries& a, const FracSeries& b) {
    FracExponent cut = min_cutoff(a, b);
    FracSeries diff = a.truncate(cut) - b.truncate(cut);
    return diff.valuation();
}

bool equal_to_common_order(const FracSeries& a, const FracSeries& b) {
    return !first_difference(a, b).has_value();
}

}  // namespace umbral
