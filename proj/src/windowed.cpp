#include "umbral/windowed.hpp"

#include "umbral/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace umbral {

namespace {

Annulus combine(Annulus a, Annulus b) {
    if (a == Annulus::Entire) return b;
    if (b == Annulus::Entire || a == b) return a;
    throw std::invalid_argument("cannot combine series expanded in different annuli");
}

std::string exponent_text(const FracExponent& e) { return std::to_string(e.num()) + "/" + std::to_string(e.den()); }

struct RowExtent {
    std::int64_t lo = 1, hi = 0;  // empty when lo > hi
    bool empty() const { return lo > hi; }
};

}  // namespace

const char* annulus_name(Annulus a) {
    switch (a) {
        case Annulus::Entire: return "entire";
        case Annulus::Inner: return "|q|<|y|<1";
        case Annulus::Outer: return "1<|y|<|q|^-1";
    }
    return "?";
}

WindowedSeries::WindowedSeries(Layout l)
    : qd_(l.qd), q0_(l.q0), qcut_(l.qcut), yd_(l.yd), Y_(l.Y), bounded_(l.bounded), ann_(l.ann),
      scale_(l.scale), grid_(std::move(l.grid)) {
    if (q0_ > qcut_) q0_ = qcut_;
    grid_.resize(static_cast<std::size_t>(rows() * width()), Integer(0));
    normalize();
}

WindowedSeries::Layout WindowedSeries::layout() const {
    return Layout{qd_, q0_, qcut_, yd_, Y_, bounded_, ann_, scale_, grid_};
}

WindowedSeries WindowedSeries::zero(FracExponent qcutoff, bool bounded, long window, Annulus annulus) {
    Layout l;
    l.qd = qcutoff.den();
    l.qcut = qcutoff.num();
    l.q0 = l.qcut;
    l.Y = bounded ? 0 : window;
    l.bounded = bounded;
    l.ann = annulus;
    return WindowedSeries(std::move(l));
}

WindowedSeries WindowedSeries::from_fracseries(const FracSeries& s) {
    std::vector<Term> t;
    for (const auto& [e, c] : s.terms()) t.push_back({e, FracExponent(0), c});
    return from_terms(t, s.cutoff(), true);
}

WindowedSeries WindowedSeries::from_terms(const std::vector<Term>& terms, FracExponent qcutoff, bool bounded,
                                          long window, Annulus annulus) {
    std::int64_t qd = qcutoff.den();
    std::int64_t yd = 1;
    for (const auto& t : terms) {
        qd = lcm64(qd, t.q.den());
        yd = lcm64(yd, t.y.den());
    }
    if (yd > 2) throw std::invalid_argument("y exponents must lie in (1/2)Z");
    std::int64_t Y = bounded ? 0 : window * yd;
    std::int64_t q0 = qcutoff.on_lattice(qd);
    Integer dl = 1;
    for (const auto& t : terms) {
        if (!(t.q < qcutoff)) continue;
        q0 = std::min(q0, t.q.on_lattice(qd));
        if (bounded) Y = std::max<std::int64_t>(Y, std::abs(t.y.on_lattice(yd)));
        mpz_lcm(dl.get_mpz_t(), dl.get_mpz_t(), t.c.get_den().get_mpz_t());
    }
    Layout l;
    l.qd = qd;
    l.q0 = q0;
    l.qcut = qcutoff.on_lattice(qd);
    l.yd = static_cast<int>(yd);
    l.Y = Y;
    l.bounded = bounded;
    l.ann = annulus;
    l.scale = Rational(1) / Rational(dl);
    std::int64_t w = 2 * Y + 1;
    l.grid.assign(static_cast<std::size_t>((l.qcut - q0) * w), Integer(0));
    for (const auto& t : terms) {
        if (!(t.q < qcutoff)) continue;
        std::int64_t k = t.y.on_lattice(yd);
        if (std::abs(k) > Y) continue;
        std::int64_t r = t.q.on_lattice(qd) - q0;
        Rational v = t.c * Rational(dl);
        l.grid[static_cast<std::size_t>(r * w + k + Y)] += v.get_num();
    }
    return WindowedSeries(std::move(l));
}

bool WindowedSeries::is_zero() const { return grid_.empty(); }

void WindowedSeries::normalize() {
    bool any = false;
    Integer g = 0;
    for (const auto& x : grid_)
        if (x != 0) {
            any = true;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        }
    if (!any || scale_ == 0) {
        grid_.clear();
        q0_ = qcut_;
        scale_ = 1;
        if (bounded_) Y_ = 0;
        std::int64_t gq = std::gcd(qd_, qcut_);
        if (gq > 1) {
            qd_ /= gq;
            qcut_ /= gq;
            q0_ = qcut_;
        }
        return;
    }
    if (g != 1) {
        for (auto& x : grid_)
            if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        scale_ *= Rational(g);
    }
    std::int64_t w = width();
    std::int64_t first = -1;
    std::int64_t ymax = 0;
    std::int64_t gq = std::gcd(qd_, qcut_);
    std::int64_t gy = yd_ == 2 ? 2 : 1;
    for (std::int64_t r = 0; r < rows(); ++r) {
        bool nz = false;
        for (std::int64_t k = -Y_; k <= Y_; ++k)
            if (at(r, k) != 0) {
                nz = true;
                ymax = std::max(ymax, std::abs(k));
                if (k % 2 != 0) gy = 1;
            }
        if (nz) {
            if (first < 0) first = r;
            gq = std::gcd(gq, q0_ + r);
        }
    }
    std::int64_t newY = bounded_ ? ymax : Y_;
    std::int64_t yf = (gy == 2) ? 2 : 1;
    if (first == 0 && gq == 1 && newY == Y_ && yf == 1) return;
    Layout l;
    l.qd = qd_ / gq;
    l.q0 = (q0_ + first) / gq;
    l.qcut = qcut_ / gq;
    l.yd = yd_ / static_cast<int>(yf);
    l.Y = newY / yf;
    l.bounded = bounded_;
    l.ann = ann_;
    l.scale = scale_;
    std::int64_t nw = 2 * l.Y + 1;
    l.grid.assign(static_cast<std::size_t>((l.qcut - l.q0) * nw), Integer(0));
    for (std::int64_t r = first; r < rows(); ++r) {
        if ((q0_ + r) % gq != 0) continue;
        std::int64_t nr = (q0_ + r) / gq - l.q0;
        for (std::int64_t k = -l.Y * yf; k <= l.Y * yf; k += yf) {
            const Integer& v = grid_[static_cast<std::size_t>(r * w + k + Y_)];
            if (v != 0) l.grid[static_cast<std::size_t>(nr * nw + k / yf + l.Y)] = v;
        }
    }
    qd_ = l.qd;
    q0_ = l.q0;
    qcut_ = l.qcut;
    yd_ = l.yd;
    Y_ = l.Y;
    grid_ = std::move(l.grid);
}

void WindowedSeries::lift(std::int64_t qd, int yd) {
    if (qd == qd_ && yd == yd_) return;
    std::int64_t kq = qd / qd_, ky = yd / yd_;
    if (kq * qd_ != qd || ky * yd_ != yd) throw std::logic_error("lattice lift to a non-multiple");
    std::int64_t nrows = rows() * kq, nY = Y_ * ky, nw = 2 * nY + 1;
    std::vector<Integer> g(static_cast<std::size_t>(nrows * nw), Integer(0));
    for (std::int64_t r = 0; r < rows(); ++r)
        for (std::int64_t k = -Y_; k <= Y_; ++k) {
            const Integer& v = at(r, k);
            if (v != 0) g[static_cast<std::size_t>(r * kq * nw + k * ky + nY)] = v;
        }
    qd_ = qd;
    q0_ *= kq;
    qcut_ *= kq;
    yd_ = yd;
    Y_ = nY;
    grid_ = std::move(g);
}

void WindowedSeries::set_window(std::int64_t Y) {
    if (Y == Y_) return;
    std::int64_t nw = 2 * Y + 1;
    std::vector<Integer> g(static_cast<std::size_t>(rows() * nw), Integer(0));
    std::int64_t lim = std::min(Y, Y_);
    for (std::int64_t r = 0; r < rows(); ++r)
        for (std::int64_t k = -lim; k <= lim; ++k) g[static_cast<std::size_t>(r * nw + k + Y)] = at(r, k);
    Y_ = Y;
    grid_ = std::move(g);
}

void WindowedSeries::rescale_common(const Rational& s) {
    // change scale_ to s, which must divide scale_ in the sense that scale_/s is integral
    Rational f = scale_ / s;
    if (f.get_den() != 1) throw std::logic_error("non-integral rescale");
    if (f != 1)
        for (auto& x : grid_)
            if (x != 0) x *= f.get_num();
    scale_ = s;
}

std::optional<FracExponent> WindowedSeries::support_bound(const FracExponent& n) const {
    if (!bounded_) return std::nullopt;
    if ((n.num() * qd_) % n.den() != 0) return std::nullopt;
    std::int64_t r = n.num() * qd_ / n.den() - q0_;
    if (r < 0 || r >= rows()) return std::nullopt;
    for (std::int64_t k = Y_; k >= 0; --k)
        if (at(r, k) != 0 || at(r, -k) != 0) return FracExponent(k, yd_);
    return std::nullopt;
}

Rational WindowedSeries::coeff(const FracExponent& n, const FracExponent& k) const {
    if (!(n < qcutoff()))
        throw CutoffUnderflow("coefficient at q^" + n.to_string() + " beyond cutoff q^" + qcutoff().to_string());
    if ((n.num() * qd_) % n.den() != 0 || (k.num() * yd_) % k.den() != 0) return 0;
    std::int64_t kk = k.num() * yd_ / k.den();
    if (std::abs(kk) > Y_) {
        if (bounded_) return 0;
        throw WindowTooNarrow("y^" + k.to_string() + " lies outside the window |k| <= " + window().to_string());
    }
    std::int64_t r = n.num() * qd_ / n.den() - q0_;
    if (r < 0) return 0;
    return scale_ * Rational(at(r, kk));
}

FracSeries WindowedSeries::y_coefficient(const FracExponent& k) const {
    std::vector<FracSeries::Term> t;
    if ((k.num() * yd_) % k.den() == 0) {
        std::int64_t kk = k.num() * yd_ / k.den();
        if (std::abs(kk) > Y_) {
            if (!bounded_)
                throw WindowTooNarrow("y^" + k.to_string() + " lies outside the window |k| <= " +
                                      window().to_string());
        } else {
            for (std::int64_t r = 0; r < rows(); ++r)
                if (at(r, kk) != 0) t.emplace_back(FracExponent(q0_ + r, qd_), scale_ * Rational(at(r, kk)));
        }
    }
    return FracSeries::from_terms(t, qcutoff());
}

std::vector<std::pair<FracExponent, Rational>> WindowedSeries::row(const FracExponent& n) const {
    std::vector<std::pair<FracExponent, Rational>> out;
    if (!(n < qcutoff())) throw CutoffUnderflow("row q^" + n.to_string() + " beyond cutoff");
    if ((n.num() * qd_) % n.den() != 0) return out;
    std::int64_t r = n.num() * qd_ / n.den() - q0_;
    if (r < 0) return out;
    for (std::int64_t k = -Y_; k <= Y_; ++k)
        if (at(r, k) != 0) out.emplace_back(FracExponent(k, yd_), scale_ * Rational(at(r, k)));
    return out;
}

std::vector<FracExponent> WindowedSeries::row_exponents() const {
    std::vector<FracExponent> out;
    for (std::int64_t r = 0; r < rows(); ++r)
        for (std::int64_t k = -Y_; k <= Y_; ++k)
            if (at(r, k) != 0) {
                out.emplace_back(q0_ + r, qd_);
                break;
            }
    return out;
}

FracSeries WindowedSeries::specialize_z0() const {
    if (!bounded_) throw UnboundedSupport("evaluation at z = 0 needs y-polynomial rows");
    std::vector<FracSeries::Term> t;
    for (std::int64_t r = 0; r < rows(); ++r) {
        Integer s = 0;
        for (std::int64_t k = -Y_; k <= Y_; ++k) s += at(r, k);
        if (s != 0) t.emplace_back(FracExponent(q0_ + r, qd_), scale_ * Rational(s));
    }
    return FracSeries::from_terms(t, qcutoff());
}

FracSeries WindowedSeries::dz_at_z0() const {
    if (!bounded_) throw UnboundedSupport("z-derivative at z = 0 needs y-polynomial rows");
    std::vector<FracSeries::Term> t;
    for (std::int64_t r = 0; r < rows(); ++r) {
        Integer s = 0;
        for (std::int64_t k = -Y_; k <= Y_; ++k)
            if (at(r, k) != 0) s += at(r, k) * k;
        if (s != 0) t.emplace_back(FracExponent(q0_ + r, qd_), scale_ * Rational(s) / Rational(yd_));
    }
    return FracSeries::from_terms(t, qcutoff());
}

WindowedSeries WindowedSeries::operator-() const {
    WindowedSeries s = *this;
    s.scale_ = -s.scale_;
    return s;
}

WindowedSeries operator*(const Rational& s, const WindowedSeries& a) {
    WindowedSeries r = a;
    r.scale_ *= s;
    if (s == 0) r.normalize();
    return r;
}

WindowedSeries operator+(const WindowedSeries& a0, const WindowedSeries& b0) {
    WindowedSeries a = a0, b = b0;
    Annulus ann = combine(a.ann_, b.ann_);
    std::int64_t qd = lcm64(a.qd_, b.qd_);
    int yd = static_cast<int>(lcm64(a.yd_, b.yd_));
    a.lift(qd, yd);
    b.lift(qd, yd);
    bool bounded = a.bounded_ && b.bounded_;
    std::int64_t Y;
    if (bounded)
        Y = std::max(a.Y_, b.Y_);
    else if (!a.bounded_ && !b.bounded_)
        Y = std::min(a.Y_, b.Y_);
    else
        Y = a.bounded_ ? b.Y_ : a.Y_;
    std::int64_t qcut = std::min(a.qcut_, b.qcut_);
    std::int64_t q0 = std::min({a.q0_, b.q0_, qcut});
    // common scale: gcd of numerators over lcm of denominators
    Rational s;
    if (a.is_zero())
        s = b.scale_;
    else if (b.is_zero())
        s = a.scale_;
    else {
        Integer gn, ld;
        mpz_gcd(gn.get_mpz_t(), a.scale_.get_num().get_mpz_t(), b.scale_.get_num().get_mpz_t());
        mpz_lcm(ld.get_mpz_t(), a.scale_.get_den().get_mpz_t(), b.scale_.get_den().get_mpz_t());
        s = Rational(gn) / Rational(ld);
    }
    WindowedSeries::Layout l;
    l.qd = qd;
    l.q0 = q0;
    l.qcut = qcut;
    l.yd = yd;
    l.Y = Y;
    l.bounded = bounded;
    l.ann = ann;
    l.scale = s;
    std::int64_t w = 2 * Y + 1;
    l.grid.assign(static_cast<std::size_t>((qcut - q0) * w), Integer(0));
    for (WindowedSeries* p : {&a, &b}) {
        if (p->is_zero()) continue;
        p->rescale_common(s);
        std::int64_t lim = std::min(Y, p->Y_);
        for (std::int64_t r = 0; r < p->rows(); ++r) {
            std::int64_t nr = p->q0_ + r - q0;
            if (nr >= qcut - q0) break;
            for (std::int64_t k = -lim; k <= lim; ++k) {
                const Integer& v = p->at(r, k);
                if (v != 0) l.grid[static_cast<std::size_t>(nr * w + k + Y)] += v;
            }
        }
    }
    return WindowedSeries(std::move(l));
}

bool operator==(const WindowedSeries& a, const WindowedSeries& b) {
    return a.qd_ == b.qd_ && a.q0_ == b.q0_ && a.qcut_ == b.qcut_ && a.yd_ == b.yd_ && a.Y_ == b.Y_ &&
           a.bounded_ == b.bounded_ && a.ann_ == b.ann_ && a.scale_ == b.scale_ && a.grid_ == b.grid_;
}

WindowedSeries WindowedSeries::truncate(const FracExponent& qcutoff) const {
    if (this->qcutoff() < qcutoff)
        throw CutoffUnderflow("truncation to q^" + qcutoff.to_string() + " exceeds known order q^" +
                              this->qcutoff().to_string());
    WindowedSeries s = *this;
    s.lift(lcm64(qd_, qcutoff.den()), yd_);
    std::int64_t nc = qcutoff.on_lattice(s.qd_);
    std::int64_t nrows = std::max<std::int64_t>(0, nc - s.q0_);
    s.grid_.resize(static_cast<std::size_t>(nrows * s.width()));
    s.qcut_ = nc;
    if (s.q0_ > nc) s.q0_ = nc;
    s.normalize();
    return s;
}

WindowedSeries WindowedSeries::restrict_window(const FracExponent& w) const {
    WindowedSeries s = *this;
    int yd = static_cast<int>(lcm64(yd_, w.den()));
    s.lift(qd_, yd);
    std::int64_t Y = w.on_lattice(yd);
    if (!s.bounded_ && Y > s.Y_)
        throw WindowTooNarrow("window " + w.to_string() + " exceeds the known window " + window().to_string());
    s.set_window(Y);
    s.bounded_ = false;
    s.normalize();
    return s;
}

WindowedSeries WindowedSeries::with_annulus(Annulus a) const {
    WindowedSeries s = *this;
    s.ann_ = a;
    return s;
}

WindowedSeries WindowedSeries::mul_series(const FracSeries& s) const {
    return windowed_mul(*this, from_fracseries(s));
}

WindowedSeries WindowedSeries::shift_y_half() const {
    if (yd_ != 1) throw std::invalid_argument("z -> z + 1/2 needs integral y exponents");
    WindowedSeries s = *this;
    for (std::int64_t r = 0; r < rows(); ++r)
        for (std::int64_t k = -Y_; k <= Y_; ++k)
            if (k % 2 != 0) {
                Integer& v = s.grid_[static_cast<std::size_t>(r * width() + k + Y_)];
                v = -v;
            }
    return s;
}

WindowedSeries WindowedSeries::scale_y(long t) const {
    if (t < 1) throw std::invalid_argument("y scaling must be positive");
    Layout l = layout();
    l.Y = Y_ * t;
    std::int64_t nw = 2 * l.Y + 1;
    l.grid.assign(static_cast<std::size_t>(rows() * nw), Integer(0));
    for (std::int64_t r = 0; r < rows(); ++r)
        for (std::int64_t k = -Y_; k <= Y_; ++k)
            if (at(r, k) != 0) l.grid[static_cast<std::size_t>(r * nw + k * t + l.Y)] = at(r, k);
    return WindowedSeries(std::move(l));
}

WindowedSeries WindowedSeries::shift(const FracExponent& a, const FracExponent& b) const {
    WindowedSeries s = *this;
    s.lift(lcm64(qd_, a.den()), static_cast<int>(lcm64(yd_, b.den())));
    std::int64_t dq = a.on_lattice(s.qd_), dy = b.on_lattice(s.yd_);
    Layout l = s.layout();
    l.q0 += dq;
    l.qcut += dq;
    l.Y = s.bounded_ ? s.Y_ + std::abs(dy) : s.Y_ - std::abs(dy);
    if (l.Y < 0) throw WindowTooNarrow("y shift exceeds the window");
    std::int64_t nw = 2 * l.Y + 1;
    l.grid.assign(static_cast<std::size_t>(s.rows() * nw), Integer(0));
    for (std::int64_t r = 0; r < s.rows(); ++r)
        for (std::int64_t k = -s.Y_; k <= s.Y_; ++k) {
            std::int64_t nk = k + dy;
            if (std::abs(nk) > l.Y) continue;
            const Integer& v = s.at(r, k);
            if (v != 0) l.grid[static_cast<std::size_t>(r * nw + nk + l.Y)] = v;
        }
    return WindowedSeries(std::move(l));
}

std::string WindowedSeries::dump() const {
    std::ostringstream os;
    for (std::int64_t r = 0; r < rows(); ++r)
        for (std::int64_t k = -Y_; k <= Y_; ++k)
            if (at(r, k) != 0) {
                FracExponent y(k, yd_);
                os << "(" << exponent_text(FracExponent(q0_ + r, qd_)) << ", " << y.to_string() << ") -> "
                   << rational_string(scale_ * Rational(at(r, k))) << "\n";
            }
    return os.str();
}

WindowedSeries windowed_mul(const WindowedSeries& a0, const WindowedSeries& b0, std::optional<FracExponent> qcutoff,
                            std::optional<FracExponent> ywindow) {
    if (!a0.bounded_ && !b0.bounded_)
        throw UnboundedSupport("product of two series without y-support bounds");
    Annulus ann = combine(a0.ann_, b0.ann_);
    WindowedSeries a = a0, b = b0;
    std::int64_t qd = lcm64(a.qd_, b.qd_);
    if (qcutoff) qd = lcm64(qd, qcutoff->den());
    int yd = static_cast<int>(lcm64(a.yd_, b.yd_));
    if (ywindow) yd = static_cast<int>(lcm64(yd, ywindow->den()));
    a.lift(qd, yd);
    b.lift(qd, yd);
    std::int64_t va = a.is_zero() ? a.qcut_ : a.q0_;
    std::int64_t vb = b.is_zero() ? b.qcut_ : b.q0_;
    std::int64_t qcut = std::min(va + b.qcut_, vb + a.qcut_);
    if (qcutoff) {
        std::int64_t want = qcutoff->on_lattice(qd);
        if (want > qcut)
            throw CutoffUnderflow("product known only below q^" + FracExponent(qcut, qd).to_string() +
                                  ", requested q^" + qcutoff->to_string());
        qcut = want;
    }
    std::int64_t q0 = std::min(a.q0_ + b.q0_, qcut);

    auto extents = [](const WindowedSeries& s) {
        std::vector<RowExtent> e(static_cast<std::size_t>(s.rows()));
        for (std::int64_t r = 0; r < s.rows(); ++r)
            for (std::int64_t k = -s.Y_; k <= s.Y_; ++k)
                if (s.at(r, k) != 0) {
                    auto& x = e[static_cast<std::size_t>(r)];
                    if (x.empty()) x.lo = k;
                    x.hi = k;
                }
        return e;
    };
    std::vector<RowExtent> ea = extents(a), eb = extents(b);

    bool bounded = a.bounded_ && b.bounded_ && !ywindow;
    std::int64_t Y;
    if (a.bounded_ && b.bounded_) {
        Y = ywindow ? ywindow->on_lattice(yd) : a.Y_ + b.Y_;
    } else {
        const WindowedSeries& u = a.bounded_ ? b : a;
        const WindowedSeries& d = a.bounded_ ? a : b;
        const std::vector<RowExtent>& ed = a.bounded_ ? ea : eb;
        std::int64_t vu = u.is_zero() ? u.qcut_ : u.q0_;
        std::int64_t need = 0;
        for (std::int64_t r = 0; r < d.rows(); ++r) {
            if (d.q0_ + r + vu >= qcut) break;
            const auto& x = ed[static_cast<std::size_t>(r)];
            if (!x.empty()) need = std::max({need, std::abs(x.lo), std::abs(x.hi)});
        }
        std::int64_t avail = u.Y_ - need;
        if (ywindow) {
            std::int64_t want = ywindow->on_lattice(yd);
            if (want > avail)
                throw WindowTooNarrow("product needs a window of " + FracExponent(want + need, yd).to_string() +
                                      " but the unbounded factor is known only to " +
                                      FracExponent(u.Y_, yd).to_string());
            Y = want;
        } else {
            if (avail < 0) throw WindowTooNarrow("unbounded factor window is narrower than the support of the other");
            Y = avail;
        }
    }

    WindowedSeries::Layout l;
    l.qd = qd;
    l.q0 = q0;
    l.qcut = qcut;
    l.yd = yd;
    l.Y = Y;
    l.bounded = bounded;
    l.ann = ann;
    l.scale = a.scale_ * b.scale_;
    std::int64_t w = 2 * Y + 1;
    std::int64_t nrows = qcut - q0;
    l.grid.assign(static_cast<std::size_t>(std::max<std::int64_t>(0, nrows) * w), Integer(0));
    for (std::int64_t ra = 0; ra < a.rows(); ++ra) {
        const auto& xa = ea[static_cast<std::size_t>(ra)];
        if (xa.empty()) continue;
        for (std::int64_t rb = 0; rb < b.rows(); ++rb) {
            std::int64_t qexp = a.q0_ + ra + b.q0_ + rb;
            if (qexp >= qcut) break;
            const auto& xb = eb[static_cast<std::size_t>(rb)];
            if (xb.empty()) continue;
            Integer* out = &l.grid[static_cast<std::size_t>((qexp - q0) * w + Y)];
            for (std::int64_t ka = xa.lo; ka <= xa.hi; ++ka) {
                const Integer& va_ = a.at(ra, ka);
                if (va_ == 0) continue;
                std::int64_t lo = std::max(xb.lo, -Y - ka), hi = std::min(xb.hi, Y - ka);
                for (std::int64_t kb = lo; kb <= hi; ++kb) {
                    const Integer& vb_ = b.at(rb, kb);
                    if (vb_ != 0) mpz_addmul(out[ka + kb].get_mpz_t(), va_.get_mpz_t(), vb_.get_mpz_t());
                }
            }
        }
    }
    return WindowedSeries(std::move(l));
}

std::optional<std::pair<FracExponent, FracExponent>> first_difference(const WindowedSeries& a,
                                                                      const WindowedSeries& b) {
    WindowedSeries d = a - b;
    for (const auto& n : d.row_exponents()) {
        auto r = d.row(n);
        if (!r.empty()) return std::make_pair(n, r.front().first);
    }
    return std::nullopt;
}

}  // namespace umbral
