#include "umbral/mckay.hpp"

#include "umbral/data.hpp"
#include "umbral/errors.hpp"
#include "umbral/groups.hpp"
#include "umbral/jacobi.hpp"
#include "umbral/reps.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

namespace umbral {

namespace {

long ceil_rational(const Rational& x) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q.get_si();
}

// integral cutoff that covers c / t after rescaling by t
FracExponent inner_cutoff(const FracExponent& c, const Rational& t) {
    return FracExponent(ceil_rational(c.value() / t) + 1);
}

FracSeries clip(const FracSeries& s, const FracExponent& c) {
    return c < s.cutoff() ? s.truncate(c) : s;
}

long chi_total(long ell) { return 24 / (ell - 1); }

std::string str(const FracExponent& e) { return e.to_string(); }

Weight2Term parse_term(const nlohmann::json& j) {
    Weight2Term t;
    t.coeff = parse_rational(j.at("coeff").get<std::string>());
    if (j.contains("lambda")) {
        t.kind = Weight2Term::Kind::Lambda;
        t.level = j.at("lambda").get<long>();
        t.arg = parse_rational(j.value("arg", std::string("1")));
    } else if (j.contains("newform")) {
        t.kind = Weight2Term::Kind::Newform;
        t.label = j.at("newform").get<std::string>();
        t.arg = parse_rational(j.value("arg", std::string("1")));
    } else if (j.contains("eta")) {
        t.kind = Weight2Term::Kind::Eta;
        t.label = j.at("eta").get<std::string>();
        t.eta = parse_eta_spec(t.label);
    } else if (j.contains("twist_of")) {
        t.kind = Weight2Term::Kind::Twist;
        t.label = j.at("twist_of").get<std::string>();
    } else {
        throw DataCorrupt("weight two term without a block: " + j.dump());
    }
    return t;
}

std::vector<Weight2Term> parse_terms(const nlohmann::json& j) {
    std::vector<Weight2Term> out;
    for (const auto& t : j) out.push_back(parse_term(t));
    return out;
}

struct Catalog {
    std::vector<Weight2Formula> forms;
    std::map<std::string, std::string> bridge;  // lambency four column -> M24 column
    std::map<std::string, std::pair<Rational, std::vector<EtaFactor>>> star_eta;
};

const Catalog& catalog() {
    static std::mutex m;
    static std::unique_ptr<Catalog> cat;
    std::lock_guard<std::mutex> lock(m);
    if (cat) return *cat;
    const auto& doc = load_json("weight2.json");
    auto c = std::make_unique<Catalog>();
    try {
        for (const auto& r : doc.at("forms")) {
            Weight2Formula f;
            f.lambency = r.at("lambency").get<long>();
            f.cls = r.at("class").get<std::string>();
            f.variant = r.at("variant").get<std::string>();
            f.terms = parse_terms(r.at("terms"));
            if (r.contains("alternatives"))
                for (const auto& a : r.at("alternatives")) f.alternatives.push_back(parse_terms(a));
            c->forms.push_back(std::move(f));
        }
        for (const auto& b : doc.at("bridge"))
            c->bridge[b.at("class").get<std::string>()] = b.at("m24").get<std::string>();
        for (const auto& s : doc.at("star_eta"))
            c->star_eta[s.at("class").get<std::string>()] = {parse_rational(s.at("coeff").get<std::string>()),
                                                             parse_eta_spec(s.at("eta").get<std::string>())};
    } catch (const nlohmann::json::exception& e) {
        throw DataCorrupt(std::string("weight two catalog: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw DataCorrupt(std::string("weight two catalog: ") + e.what());
    }
    cat = std::move(c);
    return *cat;
}

// depth to which a newform is available, if finite
std::optional<FracExponent> newform_limit(const std::string& label) {
    if (label != "f44") return std::nullopt;
    return FracExponent(load_json("newforms/f44.json").at("order").get<long>());
}

// e(1/4) F(tau+1): q^e picks up e(e + 1/4), real only for e in 1/4 + Z/2
FracSeries quarter_twist(const FracSeries& f) {
    return f.twist([](const FracExponent& e) -> Rational {
        FracExponent r = e.frac();
        if (r == FracExponent(1, 4)) return -1;
        if (r == FracExponent(3, 4)) return 1;
        throw DataCorrupt("e(1/4) twist of a term at q^" + e.to_string() + " is not real");
    });
}

struct ClassData {
    long chi = 0, chibar = 0, n = 1, h = 1;
};

ClassData class_data(long ell, const std::string& column) {
    ClassData d;
    if (ell == 2) {
        for (const auto& c : m24_classes())
            if (c.label == column) {
                d.chi = d.chibar = c.chi;
                auto bar = c.gamma.find('|');
                d.n = std::stol(c.gamma.substr(0, bar));
                d.h = std::stol(c.gamma.substr(bar + 1));
                return d;
            }
        throw UnknownClass("no M24 class " + column);
    }
    const auto& info = generate(ell).cls(split_label(column).front());
    d.chi = info.chi;
    d.chibar = info.chibar;
    d.n = info.n;
    d.h = info.h;
    return d;
}

// identity-class components from the weight zero Jacobi form, cached at the deepest order asked for
HVector identity_H(long ell, const FracExponent& cutoff) {
    static std::mutex m;
    static std::map<long, HVector> cache;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(ell);
    if (it == cache.end() || it->second.components.front().cutoff() < cutoff) {
        FracExponent want = FracExponent(ceil_rational(cutoff.value()) + 1);
        if (it != cache.end()) want = std::max(want, it->second.components.front().cutoff() + FracExponent(4));
        it = cache.insert_or_assign(ell, extract_H(ell, want)).first;
    }
    HVector out;
    out.lambency = ell;
    for (const auto& c : it->second.components) out.components.push_back(clip(c, cutoff));
    return out;
}

TwistedH blank(long ell, const std::string& column) {
    TwistedH H;
    H.lambency = ell;
    H.label = column;
    auto d = class_data(ell, column);
    H.chi = d.chi;
    H.chibar = d.chibar;
    H.n = d.n;
    H.h = d.h;
    return H;
}

void finish(TwistedH& H, const FracExponent& cutoff) {
    for (auto& c : H.components) {
        if (c.cutoff() < cutoff) {
            if (!H.cap || c.cutoff() < *H.cap) H.cap = c.cutoff();
        } else {
            c = c.truncate(cutoff);
        }
    }
}

FracSeries eta_q(const char* spec, const FracExponent& cutoff) { return eta_quotient(parse_eta_spec(spec), cutoff); }

TwistedH build_ell2(const std::string& col, const FracExponent& c) {
    TwistedH H = blank(2, col);
    H.source = col == "1A" ? "jacobi" : "weight2";
    FracExponent work = c + FracExponent(1);
    auto I = identity_H(2, work);
    auto F = weight2(2, col, "F", work);
    FracSeries g = make_rational(H.chi, 24) * I[1] + F * eta_q("1^3", work + FracExponent(1)).invert();
    H.components.push_back(g);
    finish(H, c);
    return H;
}

TwistedH build_ell3(const std::string& col, const FracExponent& c) {
    TwistedH H = blank(3, col);
    H.source = "weight2";
    FracExponent work = c + FracExponent(1);
    auto I = identity_H(3, work);
    std::string z = paired_column(3, col);
    auto F = weight2(3, col, "F", work), Fz = weight2(3, z, "F", work);
    auto p1 = eta_q("4^2 2^-5", work), p2 = eta_q("2^1 1^-2 4^-2", work);
    H.components.push_back(make_rational(H.chibar, 12) * I[1] + make_rational(1, 2) * p1 * (F + Fz));
    H.components.push_back(make_rational(H.chi, 12) * I[2] + make_rational(1, 4) * p2 * (F - Fz));
    finish(H, c);
    return H;
}

TwistedH build_ell4(const std::string& col, const FracExponent& c) {
    const auto& cat = catalog();
    TwistedH H = blank(4, col);
    H.source = "weight2";
    FracExponent work = c + FracExponent(1);
    FracSeries star;
    if (auto b = cat.bridge.find(col); b != cat.bridge.end()) {
        FracExponent deeper = FracExponent(2) * work + FracExponent(1);
        star = twisted_H(2, b->second, deeper)[1].rescale(make_rational(1, 2));
    } else if (auto e = cat.star_eta.find(col); e != cat.star_eta.end()) {
        star = e->second.first * eta_quotient(e->second.second, work);
    } else {
        throw DataCorrupt("no construction of H_1 - H_3 for class " + col + " at lambency 4");
    }
    FracSeries h1 = star.split(FracExponent(15, 16));
    FracSeries h3 = -star.split(FracExponent(7, 16));
    if (!(star - h1 + h3).is_zero())
        throw DataCorrupt("H_1 - H_3 for class " + col + " has terms off the residues -1/16 and 7/16");

    auto I = identity_H(4, work);
    FracSeries h2 = make_rational(H.chi, 8) * I[2];
    std::string z = paired_column(4, col);
    const Weight2Formula* own = find_weight2(4, col, "R2");
    const Weight2Formula* pair = find_weight2(4, z, "R2");
    auto s2inv = unary_theta(4, 2, work + FracExponent(1)).invert();
    if (own)
        h2 += weight2(4, col, "R2", work + FracExponent(1)) * s2inv;
    else if (pair)
        h2 -= weight2(4, z, "R2", work + FracExponent(1)) * s2inv;
    H.components = {h1, h2, h3};
    finish(H, c);
    return H;
}

TwistedH build_ell5(const std::string& col, const FracExponent& c) {
    TwistedH H = blank(5, col);
    H.source = "weight2";
    FracExponent work = c + FracExponent(2);
    auto I = identity_H(5, work);
    std::string z = paired_column(5, col);
    auto F = weight2(5, col, "F", work), Fz = weight2(5, z, "F", work);
    auto F2 = weight2(5, col, "F2", work), F2z = weight2(5, z, "F2", work);
    const Rational half(1, 2);
    FracSeries A = half * (F + Fz), B = half * (F2 + F2z);
    FracSeries C = half * (F - Fz), D = half * (F2z - F2);
    FracExponent sc = work + FracExponent(1);
    auto S1 = unary_theta(5, 1, sc), S2 = unary_theta(5, 2, sc), S3 = unary_theta(5, 3, sc),
         S4 = unary_theta(5, 4, sc);
    FracSeries det = S1 * S2 - S3 * S4;
    auto v = det.valuation();
    if (!v || det.coeff(*v) == 0) throw DeterminantNotUnit("degenerate theta determinant at lambency 5");
    FracSeries inv = det.invert();
    FracSeries h1 = (A * S2 - B * S3) * inv, h3 = (S1 * B - S4 * A) * inv;
    FracSeries h2 = (C * S1 - D * S4) * inv, h4 = (S2 * D - S3 * C) * inv;
    H.components = {h1 + make_rational(H.chibar, 6) * I[1], h2 + make_rational(H.chi, 6) * I[2],
                    h3 + make_rational(H.chibar, 6) * I[3], h4 + make_rational(H.chi, 6) * I[4]};
    finish(H, c);
    return H;
}

TwistedH build_ell7_13(long ell, const std::string& col, const FracExponent& c) {
    if (col == "1A" || col == "2A") {
        TwistedH H = blank(ell, col);
        H.source = "jacobi";
        auto I = identity_H(ell, c);
        for (long r = 1; r < ell; ++r) {
            int sign = (col == "2A" && r % 2 == 0) ? -1 : 1;
            H.components.push_back(Rational(sign) * I[r]);
        }
        return H;
    }
    TwistedH H = stored_H(ell, col);
    for (auto& comp : H.components) {
        if (comp.cutoff() < c)
            throw DataExhausted("class " + col + " at lambency " + std::to_string(ell) +
                                " is tabulated only below q^" + comp.cutoff().to_string());
        comp = comp.truncate(c);
    }
    return H;
}

}  // namespace

const std::vector<Weight2Formula>& weight2_catalog() { return catalog().forms; }

const Weight2Formula* find_weight2(long ell, const std::string& cls, const std::string& variant) {
    for (const auto& f : catalog().forms)
        if (f.lambency == ell && f.cls == cls && f.variant == variant) return &f;
    return nullptr;
}

FracSeries evaluate_terms(long ell, const std::string& variant, const std::vector<Weight2Term>& terms,
                          FracExponent cutoff) {
    FracSeries sum(cutoff.den(), cutoff);
    for (const auto& t : terms) {
        FracSeries s;
        switch (t.kind) {
            case Weight2Term::Kind::Lambda:
                s = lambda(t.level, inner_cutoff(cutoff, t.arg)).rescale(t.arg);
                break;
            case Weight2Term::Kind::Newform: {
                FracExponent inner = inner_cutoff(cutoff, t.arg);
                if (auto lim = newform_limit(t.label); lim && *lim < inner) inner = *lim;
                s = newform(t.label, inner).rescale(t.arg);
                break;
            }
            case Weight2Term::Kind::Eta:
                s = eta_quotient(t.eta, cutoff);
                break;
            case Weight2Term::Kind::Twist:
                s = quarter_twist(weight2(ell, t.label, variant, cutoff));
                break;
        }
        sum += t.coeff * clip(s, cutoff);
    }
    return sum;
}

FracSeries weight2(long ell, const std::string& cls, const std::string& variant, FracExponent cutoff) {
    const Weight2Formula* f = find_weight2(ell, cls, variant);
    if (!f) {
        std::string col = column_label(ell, cls);
        f = find_weight2(ell, col, variant);
    }
    if (!f)
        throw UnknownClass("no weight two form " + variant + " for class " + cls + " at lambency " +
                           std::to_string(ell));
    return evaluate_terms(ell, variant, f->terms, cutoff);
}

std::vector<std::string> column_labels(long ell) { return coefficient_table(ell, 1).columns; }

std::string column_label(long ell, const std::string& cls) {
    auto cols = column_labels(ell);
    for (const auto& c : cols)
        if (c == cls) return c;
    for (const auto& c : cols) {
        auto parts = split_label(c);
        if (std::find(parts.begin(), parts.end(), cls) != parts.end()) return c;
    }
    throw UnknownClass("no class " + cls + " at lambency " + std::to_string(ell));
}

std::string paired_column(long ell, const std::string& column) {
    if (ell == 2) return column;
    return column_label(ell, generate(ell).cls(split_label(column).front()).paired);
}

TwistedH twisted_H(long ell, const std::string& cls, FracExponent qcutoff) {
    if (!is_lambent(ell)) throw OutOfRange("lambency " + std::to_string(ell) + " is not in {2,3,4,5,7,13}");
    std::string col = column_label(ell, cls);
    switch (ell) {
        case 2: return build_ell2(col, qcutoff);
        case 3: return build_ell3(col, qcutoff);
        case 4: return build_ell4(col, qcutoff);
        case 5: return build_ell5(col, qcutoff);
        case 7:
        case 13: return build_ell7_13(ell, col, qcutoff);
        default: throw OutOfRange("lambency " + std::to_string(ell) + " is not in {2,3,4,5,7,13}");
    }
}

TwistedH stored_H(long ell, const std::string& cls) {
    std::string col = column_label(ell, cls);
    TwistedH H = blank(ell, col);
    H.source = "stored";
    for (long r = 1; r < ell; ++r) {
        const auto& t = coefficient_table(ell, r);
        std::size_t j = static_cast<std::size_t>(std::find(t.columns.begin(), t.columns.end(), col) - t.columns.begin());
        if (j == t.columns.size()) throw DataCorrupt("column " + col + " missing from table r=" + std::to_string(r));
        std::vector<FracSeries::Term> terms;
        long last = t.rows.empty() ? 0 : t.rows.back().first;
        for (const auto& [key, vals] : t.rows) terms.emplace_back(FracExponent(key, 4 * ell), Rational(vals[j]));
        H.components.push_back(FracSeries::from_terms(terms, FracExponent(last + 1, 4 * ell)));
    }
    return H;
}

ColumnCheck compare_with_table(const TwistedH& H) {
    ColumnCheck rep;
    long ell = H.lambency;
    for (long r = 1; r < ell; ++r) {
        const auto& t = coefficient_table(ell, r);
        std::size_t j =
            static_cast<std::size_t>(std::find(t.columns.begin(), t.columns.end(), H.label) - t.columns.begin());
        if (j == t.columns.size()) {
            rep.problems.push_back("no column " + H.label);
            continue;
        }
        const FracSeries& s = H[r];
        std::set<FracExponent> keys;
        for (const auto& [key, vals] : t.rows) {
            FracExponent e(key, 4 * ell);
            keys.insert(e);
            if (!(e < s.cutoff())) {
                ++rep.rows_beyond;
                continue;
            }
            ++rep.rows_checked;
            if (s.coeff(e) != Rational(vals[j]))
                rep.problems.push_back("r=" + std::to_string(r) + " q^" + str(e) + ": computed " +
                                       rational_short(s.coeff(e)) + ", table " + vals[j].get_str());
        }
        FracExponent deepest = t.rows.empty() ? FracExponent(0) : FracExponent(t.rows.back().first, 4 * ell);
        for (const auto& [e, v] : s.terms())
            if (v != 0 && !(deepest < e) && !keys.count(e))
                rep.problems.push_back("r=" + std::to_string(r) + " q^" + str(e) + ": computed " +
                                       rational_short(v) + " where the table has no row");
    }
    rep.pass = rep.problems.empty() && rep.rows_checked > 0;
    return rep;
}

ConsistencyReport verify_F_consistency(long ell, const std::string& cls, bool computed, FracExponent qcutoff) {
    ConsistencyReport rep;
    std::string col = column_label(ell, cls);
    std::vector<std::string> variants;
    for (const char* v : {"F", "F2", "R2"})
        if (find_weight2(ell, col, v)) variants.push_back(v);
    bool implicit_zero = variants.empty() && (col == "1A" || col == "2A");
    if (implicit_zero) variants.push_back("F");
    rep.cataloged = !variants.empty();
    if (!rep.cataloged) {
        rep.pass = true;
        return rep;
    }
    FracExponent work = qcutoff + FracExponent(1);
    TwistedH H = computed ? twisted_H(ell, col, work) : stored_H(ell, col);
    TwistedH I = computed ? twisted_H(ell, "1A", work) : stored_H(ell, "1A");
    long chi = chi_total(ell);
    std::vector<FracSeries> hat, S;
    for (long r = 1; r < ell; ++r) {
        hat.push_back(H[r] - make_rational(H.chi_r(r), chi) * I[r]);
        S.push_back(unary_theta(ell, r, work + FracExponent(ell)));
    }
    auto at = [](const std::vector<FracSeries>& v, long r) -> const FracSeries& {
        return v[static_cast<std::size_t>(r - 1)];
    };
    bool first = true;
    for (const auto& v : variants) {
        FracSeries lhs;
        if (v == "F") {
            lhs = at(hat, 1) * at(S, 1);
            for (long r = 2; r < ell; ++r) lhs += at(hat, r) * at(S, r);
        } else if (v == "F2") {
            lhs = at(hat, 1) * at(S, ell - 1);
            for (long r = 2; r < ell; ++r) lhs += Rational(r % 2 == 1 ? 1 : -1) * at(hat, r) * at(S, ell - r);
        } else {
            lhs = at(hat, 2) * at(S, 2);
        }
        FracSeries rhs = implicit_zero ? FracSeries(lhs.cutoff().den(), lhs.cutoff()) : weight2(ell, col, v, lhs.cutoff());
        FracExponent common = min_cutoff(lhs, rhs);
        if (first || common < rep.order) rep.order = common;
        first = false;
        rep.variants.push_back(v);
        if (auto d = first_difference(lhs, rhs))
            rep.problems.push_back(v + " differs at q^" + str(*d) + ": series " + rational_short(lhs.coeff(*d)) +
                                   ", form " + rational_short(rhs.coeff(*d)));
    }
    rep.pass = rep.problems.empty();
    return rep;
}

namespace {

struct Piece {
    Rational coeff = 1;
    bool is_h = false;
    std::string cls;
    long r = 1;
    FracExponent shift;
    std::string mock;
    long scale = 1;
    bool negate = false;
};
using Side = std::vector<Piece>;

struct IdentityDef {
    MockIdentity info;
    std::vector<Side> sides;
};

Piece hp(const std::string& cls, long r, long coeff = 1) {
    Piece p;
    p.is_h = true;
    p.cls = cls;
    p.r = r;
    p.coeff = coeff;
    return p;
}

Piece mp(long coeff, FracExponent shift, const std::string& mock, long scale = 1, bool negate = false) {
    Piece p;
    p.coeff = coeff;
    p.shift = shift;
    p.mock = mock;
    p.scale = scale;
    p.negate = negate;
    return p;
}

const std::vector<IdentityDef>& identity_defs() {
    static const std::vector<IdentityDef> defs = [] {
        FracExponent m8(-1, 8), m12(-1, 12), t3(2, 3), m16(-1, 16), s16(7, 16), m20(-1, 20), n20(-9, 20),
            m5(-1, 5), p5(1, 5), z(0), one(1);
        std::vector<IdentityDef> d;
        d.push_back({{"ell2-4B", 2, "H_4B = -2 q^(-1/8) mu(q)"}, {{hp("4B", 1)}, {mp(-2, m8, "mu")}}});
        d.push_back({{"ell2-8A", 2, "H_8A = -2 q^(-1/8) U0(q)"}, {{hp("8A", 1)}, {mp(-2, m8, "U0")}}});
        d.push_back({{"ell3-f", 3, "H_2B,1 = H_2C,1 = H_4C,1 = -2 q^(-1/12) f(q^2)"},
                     {{hp("2B", 1)}, {hp("2C", 1)}, {hp("4C", 1)}, {mp(-2, m12, "f", 2)}}});
        d.push_back({{"ell3-chi", 3, "H_6C,1 = H_6D,1 = -2 q^(-1/12) chi(q^2)"},
                     {{hp("6C", 1)}, {hp("6D", 1)}, {mp(-2, m12, "chi", 2)}}});
        d.push_back({{"ell3-phi", 3, "H_8C,1 = H_8D,1 = -2 q^(-1/12) phi(-q^2)"},
                     {{hp("8C", 1)}, {hp("8D", 1)}, {mp(-2, m12, "phi", 2, true)}}});
        d.push_back({{"ell3-omega", 3, "H_2B,2 = -H_2C,2 = -4 q^(2/3) omega(-q)"},
                     {{hp("2B", 2)}, {hp("2C", 2, -1)}, {mp(-4, t3, "omega", 1, true)}}});
        d.push_back({{"ell3-rho", 3, "H_6C,2 = -H_6D,2 = 2 q^(2/3) rho(-q)"},
                     {{hp("6C", 2)}, {hp("6D", 2, -1)}, {mp(2, t3, "rho", 1, true)}}});
        d.push_back({{"ell4-2C-1", 4, "H_2C,1 = q^(-1/16) (-2 S0(q) + 4 T0(q))"},
                     {{hp("2C", 1)}, {mp(-2, m16, "S0"), mp(4, m16, "T0")}}});
        d.push_back({{"ell4-2C-3", 4, "H_2C,3 = q^(7/16) (2 S1(q) - 4 T1(q))"},
                     {{hp("2C", 3)}, {mp(2, s16, "S1"), mp(-4, s16, "T1")}}});
        d.push_back({{"ell4-4C-1", 4, "H_4C,1 = -2 q^(-1/16) S0(q)"}, {{hp("4C", 1)}, {mp(-2, m16, "S0")}}});
        d.push_back({{"ell4-4C-3", 4, "H_4C,3 = 2 q^(7/16) S1(q)"}, {{hp("4C", 3)}, {mp(2, s16, "S1")}}});
        d.push_back({{"ell4-mu", 4, "mu(q) = S0(q^2) - 2 T0(q^2) + q (S1(q^2) - 2 T1(q^2)) = U0(q) - 2 U1(q)"},
                     {{mp(1, z, "mu")},
                      {mp(1, z, "S0", 2), mp(-2, z, "T0", 2), mp(1, one, "S1", 2), mp(-2, one, "T1", 2)},
                      {mp(1, z, "U0"), mp(-2, z, "U1")}}});
        d.push_back({{"ell4-U0", 4, "U0(q) = S0(q^2) + q S1(q^2)"},
                     {{mp(1, z, "U0")}, {mp(1, z, "S0", 2), mp(1, one, "S1", 2)}}});
        d.push_back({{"ell4-U1", 4, "U1(q) = T0(q^2) + q T1(q^2)"},
                     {{mp(1, z, "U1")}, {mp(1, z, "T0", 2), mp(1, one, "T1", 2)}}});
        d.push_back({{"ell5-X", 5, "H_2B,1 = H_2C,1 = H_4CD,1 = -2 q^(-1/20) X(q^2)"},
                     {{hp("2B", 1)}, {hp("2C", 1)}, {hp("4CD", 1)}, {mp(-2, m20, "X", 2)}}});
        d.push_back({{"ell5-chi10", 5, "H_2B,3 = H_2C,3 = H_4CD,3 = -2 q^(-9/20) chi10(q^2)"},
                     {{hp("2B", 3)}, {hp("2C", 3)}, {hp("4CD", 3)}, {mp(-2, n20, "chi10", 2)}}});
        d.push_back({{"ell5-psi10", 5, "H_2C,2 = -H_2B,2 = 2 q^(-1/5) psi10(-q)"},
                     {{hp("2C", 2)}, {hp("2B", 2, -1)}, {mp(2, m5, "psi10", 1, true)}}});
        d.push_back({{"ell5-phi10", 5, "H_2C,4 = -H_2B,4 = -2 q^(1/5) phi10(-q)"},
                     {{hp("2C", 4)}, {hp("2B", 4, -1)}, {mp(-2, p5, "phi10", 1, true)}}});
        return d;
    }();
    return defs;
}

FracSeries evaluate_piece(long ell, const Piece& p, const FracExponent& c) {
    if (p.is_h) return p.coeff * twisted_H(ell, p.cls, c)[p.r];
    long inner = ceil_rational((c - p.shift).value() / p.scale) + 1;
    FracSeries m = mock_theta(p.mock, std::max(inner, 1L));
    if (p.negate) m = m.negate_q();
    m = m.rescale(Rational(p.scale)).shift(p.shift);
    return p.coeff * clip(m, c);
}

}  // namespace

const std::vector<MockIdentity>& mock_identities() {
    static const std::vector<MockIdentity> ids = [] {
        std::vector<MockIdentity> out;
        for (const auto& d : identity_defs()) out.push_back(d.info);
        return out;
    }();
    return ids;
}

IdentityCheck mock_identity_check(const std::string& id, long order) {
    const auto& defs = identity_defs();
    auto it = std::find_if(defs.begin(), defs.end(), [&](const IdentityDef& d) { return d.info.id == id; });
    if (it == defs.end()) throw UnknownClass("no mock theta identity '" + id + "'");
    IdentityCheck rep;
    rep.id = id;
    FracExponent c(order);
    std::vector<FracSeries> sides;
    for (const auto& side : it->sides) {
        FracSeries s = evaluate_piece(it->info.lambency, side.front(), c);
        for (std::size_t i = 1; i < side.size(); ++i) s += evaluate_piece(it->info.lambency, side[i], c);
        sides.push_back(s);
    }
    rep.order = sides.front().cutoff();
    rep.pass = true;
    for (std::size_t i = 1; i < sides.size(); ++i) {
        rep.order = std::min(rep.order, min_cutoff(sides.front(), sides[i]));
        if (auto d = first_difference(sides.front(), sides[i])) {
            rep.pass = false;
            if (rep.detail.empty())
                rep.detail = "side " + std::to_string(i + 1) + " differs at q^" + str(*d) + ": " +
                             rational_short(sides[i].coeff(*d)) + " vs " + rational_short(sides.front().coeff(*d));
        }
    }
    if (rep.order < FracExponent(order)) {
        rep.pass = false;
        if (rep.detail.empty()) rep.detail = "only exact below q^" + str(rep.order);
    }
    return rep;
}

namespace {

Rational mod_one(const Rational& x) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return x - Rational(f);
}

}  // namespace

UnitMatrix UnitMatrix::identity(long size) { return scalar(size, Rational(0)); }

UnitMatrix UnitMatrix::scalar(long size, const Rational& x) {
    UnitMatrix m;
    m.entries.assign(static_cast<std::size_t>(size), std::vector<std::optional<Rational>>(static_cast<std::size_t>(size)));
    for (long i = 0; i < size; ++i) m.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = mod_one(x);
    return m;
}

UnitMatrix operator*(const UnitMatrix& a, const UnitMatrix& b) {
    std::size_t n = a.entries.size();
    UnitMatrix out;
    out.entries.assign(n, std::vector<std::optional<Rational>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (!a.entries[i][k]) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (!b.entries[k][j]) continue;
                if (out.entries[i][j]) throw std::invalid_argument("product of monomial matrices is not monomial");
                out.entries[i][j] = mod_one(*a.entries[i][k] + *b.entries[k][j]);
            }
        }
    return out;
}

UnitMatrix UnitMatrix::pow(long k) const {
    // every matrix used here has finite order dividing something small; negative powers via the inverse
    UnitMatrix base = *this;
    if (k < 0) {
        std::size_t n = entries.size();
        UnitMatrix inv;
        inv.entries.assign(n, std::vector<std::optional<Rational>>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (entries[i][j]) inv.entries[j][i] = mod_one(-*entries[i][j]);
        base = inv;
        k = -k;
    }
    UnitMatrix out = identity(size());
    while (k > 0) {
        if (k & 1) out = out * base;
        base = base * base;
        k >>= 1;
    }
    return out;
}

std::string UnitMatrix::to_string() const {
    std::string out;
    for (const auto& row : entries) {
        std::string line;
        for (const auto& e : row) {
            if (!line.empty()) line += " ";
            line += e ? "e(" + rational_short(*e) + ")" : "0";
        }
        out += "[" + line + "]\n";
    }
    return out;
}

UnitMatrix j_matrix(long size) {
    UnitMatrix m = UnitMatrix::identity(size);
    for (long i = 1; i < size; i += 2) m.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = make_rational(1, 2);
    return m;
}

UnitMatrix k_matrix(long size) {
    UnitMatrix m;
    m.entries.assign(static_cast<std::size_t>(size), std::vector<std::optional<Rational>>(static_cast<std::size_t>(size)));
    for (long i = 0; i < size; ++i) m.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(size - 1 - i)] = Rational(0);
    return m;
}

long admissible_v(long ell) {
    switch (ell) {
        case 2: return 1;
        case 3: return 5;
        case 4: return 3;
        case 5: return 7;
        case 7: return 1;
        case 13: return 7;
        default: throw OutOfRange("lambency " + std::to_string(ell) + " is not in {2,3,4,5,7,13}");
    }
}

UnitMatrix multiplier_rho(long ell, long n, long h, const std::array<long, 4>& gamma) {
    auto [a, b, c, d] = gamma;
    if (n < 1 || h < 1) throw OutOfRange("n and h must be positive");
    if (a * d - b * c != 1) throw NotInGroup("matrix is not in SL2(Z)");
    if (c % n != 0) throw NotInGroup("lower left entry is not divisible by " + std::to_string(n));
    long v = admissible_v(ell);
    long size = ell - 1;
    Rational base = Rational(-v * c * d) / Rational(n * h);
    if (n % h == 0) return UnitMatrix::scalar(size, base);
    long g = std::gcd(n, h);
    Rational x = (n % 2 == 0) ? base * make_rational(g, n) : base * make_rational(n, g);
    return UnitMatrix::scalar(size, x) * j_matrix(size).pow(c * (d + 1) / n) * k_matrix(size).pow(c / n);
}

PairingReport pairing(long ell, const std::string& cls, bool computed, FracExponent qcutoff) {
    if (ell == 2) throw OutOfRange("lambency 2 has no central involution");
    PairingReport rep;
    std::string col = column_label(ell, cls);
    rep.paired = generate(ell).cls(split_label(col).front()).paired;
    std::string zcol = column_label(ell, rep.paired);
    rep.self_paired = zcol == col;
    TwistedH a = computed ? twisted_H(ell, col, qcutoff) : stored_H(ell, col);
    TwistedH b = computed ? twisted_H(ell, zcol, qcutoff) : stored_H(ell, zcol);
    rep.odd_equal_even_flip = rep.sign_minus_one_to_r = true;
    for (long r = 1; r < ell; ++r) {
        bool plus = equal_to_common_order(a[r], b[r]);
        bool minus = equal_to_common_order(-a[r], b[r]);
        int s = plus && minus ? 2 : plus ? 1 : minus ? -1 : 0;
        rep.signs.push_back(s);
        int rule = r % 2 == 1 ? 1 : -1;
        if (s != 2 && s != rule) rep.odd_equal_even_flip = false;
        if (s != 2 && s != -rule) rep.sign_minus_one_to_r = false;
    }
    return rep;
}

FracExponent table_cutoff(long ell) {
    long deepest = 0;
    for (long r = 1; r < ell; ++r) {
        const auto& t = coefficient_table(ell, r);
        if (!t.rows.empty()) deepest = std::max(deepest, t.rows.back().first);
    }
    return FracExponent(deepest / (4 * ell) + 1);
}

TableVerification verify_tables(long ell, unsigned jobs) {
    if (!is_lambent(ell)) throw OutOfRange("lambency " + std::to_string(ell) + " is not in {2,3,4,5,7,13}");
    TableVerification out;
    out.lambency = ell;
    FracExponent cut = table_cutoff(ell);
    auto labels = column_labels(ell);
    out.columns.resize(labels.size() + 1);
    auto run = [&](std::size_t i) {
        auto& col = out.columns[i];
        if (i == 0) {
            auto h = extract_H(ell, cut);
            TwistedH H = blank(ell, "1A");
            H.components = h.components;
            H.source = "extract";
            col.label = "1A";
            col.source = H.source;
            col.checked = true;
            col.check = compare_with_table(H);
            return;
        }
        col.label = labels[i - 1];
        if ((ell == 7 || ell == 13) && col.label != "1A" && col.label != "2A") {
            col.source = "stored";
            return;
        }
        auto H = twisted_H(ell, col.label, cut);
        col.source = H.source;
        col.cap = H.cap;
        col.checked = true;
        col.check = compare_with_table(H);
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(out.columns.size())));
    if (jobs == 1) {
        for (std::size_t i = 0; i < out.columns.size(); ++i) run(i);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(jobs);
        for (unsigned w = 0; w < jobs; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < out.columns.size(); i += jobs) run(i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    out.pass = true;
    for (const auto& c : out.columns)
        if (c.checked && !c.check.pass) out.pass = false;
    return out;
}

}  // namespace umbral
