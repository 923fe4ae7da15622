#include "umbral/reps.hpp"

#include "umbral/data.hpp"
#include "umbral/errors.hpp"
#include "umbral/groups.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>
#include <set>

namespace umbral {

std::vector<std::string> split_label(const std::string& label) {
    std::size_t i = 0;
    while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i]))) ++i;
    if (i == 0 || i == label.size()) return {label};
    std::vector<std::string> out;
    for (std::size_t j = i; j < label.size(); ++j) out.push_back(label.substr(0, i) + label[j]);
    return out;
}

std::size_t CharacterTable::class_index(const std::string& label) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i] == label) return i;
    throw UnknownClass("no class " + label + " at lambency " + std::to_string(lambency));
}

long CharacterTable::degree(std::size_t irr) const {
    return values.at(irr).front().rat().get_num().get_si();
}

std::vector<std::size_t> CharacterTable::expand(const std::string& label) const {
    std::vector<std::size_t> out;
    for (const auto& part : split_label(label)) out.push_back(class_index(part));
    return out;
}

namespace {

QuadValue parse_quad(const nlohmann::json& v) {
    return QuadValue(parse_rational(v.at("rat").get<std::string>()),
                     parse_rational(v.at("irr").get<std::string>()), v.at("disc").get<long>());
}

CharacterTable load_table(long ell) {
    const auto& doc = load_json("characters/ell" + std::to_string(ell) + ".json");
    CharacterTable t;
    try {
        t.lambency = doc.at("lambency").get<long>();
        t.classes = doc.at("classes").get<std::vector<std::string>>();
        for (const auto& [p, row] : doc.at("power_maps").items())
            t.power_maps[std::stol(p)] = row.get<std::vector<std::string>>();
        t.fs = doc.at("fs").get<std::vector<int>>();
        for (const auto& row : doc.at("characters")) {
            std::vector<QuadValue> vals;
            for (const auto& v : row) vals.push_back(parse_quad(v));
            t.values.push_back(std::move(vals));
        }
    } catch (const nlohmann::json::exception& e) {
        throw DataCorrupt("character table " + std::to_string(ell) + ": " + e.what());
    }
    const std::size_t k = t.classes.size();
    if (t.values.size() != k || t.fs.size() != k)
        throw DataCorrupt("character table " + std::to_string(ell) + " is not square");
    for (const auto& row : t.values)
        if (row.size() != k) throw DataCorrupt("ragged character table " + std::to_string(ell));
    for (const auto& [p, row] : t.power_maps)
        if (row.size() != k) throw DataCorrupt("ragged power map " + std::to_string(p));
    for (std::size_t c = 0; c < k; ++c) {
        Rational norm = 0;
        for (std::size_t i = 0; i < k; ++i) norm += t.values[i][c].norm_sq();
        if (!is_integer(norm) || norm <= 0)
            throw DataCorrupt("column " + t.classes[c] + " has norm " + rational_string(norm));
        t.centralizers.push_back(norm.get_num().get_si());
    }
    return t;
}

}  // namespace

const CharacterTable& character_table(long ell) {
    static std::mutex m;
    static std::map<long, std::unique_ptr<CharacterTable>> cache;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(ell);
    if (it == cache.end()) {
        if (ell != 2 && ell != 3 && ell != 4 && ell != 5 && ell != 7 && ell != 13)
            throw OutOfRange("lambency " + std::to_string(ell));
        it = cache.emplace(ell, std::make_unique<CharacterTable>(load_table(ell))).first;
    }
    return *it->second;
}

namespace {

// Sum of rationals times sqrt(s) over square-free s, sqrt(s) = i sqrt(|s|) for
// s < 0; distinct square roots are linearly independent.
class RadicalSum {
public:
    void add(const QuadValue& x, const QuadValue& y) {
        term(x.rat() * y.rat(), 1, 1);
        term(x.rat() * y.irr(), 1, y.disc());
        term(x.irr() * y.rat(), x.disc(), 1);
        term(x.irr() * y.irr(), x.disc(), y.disc());
    }
    void add(const QuadValue& x) {
        term(x.rat(), 1, 1);
        term(x.irr(), x.disc(), 1);
    }
    std::optional<Rational> rational() const {
        Rational out = 0;
        for (const auto& [d, c] : c_) {
            if (c == 0) continue;
            if (d != 1) return std::nullopt;
            out = c;
        }
        return out;
    }
    std::string to_string() const {
        std::string out;
        for (const auto& [d, c] : c_) {
            if (c == 0) continue;
            if (!out.empty()) out += " + ";
            out += rational_string(c) + (d == 1 ? "" : "*sqrt(" + std::to_string(d) + ")");
        }
        return out.empty() ? "0" : out;
    }

private:
    void term(const Rational& c, long d1, long d2) {
        if (c == 0) return;
        long f = 1;
        long s = squarefree_part(d1 * d2, &f);
        Rational v = c * f;
        if (d1 < 0 && d2 < 0) v = -v;
        c_[s] += v;
    }
    std::map<long, Rational> c_;
};

long label_order(const std::string& label) {
    std::size_t i = 0;
    while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i]))) ++i;
    return std::stol(label.substr(0, i));
}

// field generated by the values of an irreducible: 1 for rational, else the square-free discriminant
long character_field(const CharacterTable& t, std::size_t i) {
    long d = 1;
    for (const auto& v : t.values[i])
        if (!v.is_rational()) d = v.disc();
    return d;
}

bool faithful_on_z(const CharacterTable& t, std::size_t i) {
    // z is the class 2A for every generated group
    std::size_t z = t.class_index("2A");
    return t.values[i][z] == -t.values[i][0];
}

}  // namespace

TableCheck validate_table(long ell) {
    const auto& t = character_table(ell);
    TableCheck out;
    const std::size_t k = t.classes.size();
    const long order = t.group_order();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            RadicalSum s;
            for (std::size_t c = 0; c < k; ++c)
                s.add(t.values[i][c] * QuadValue(make_rational(order / t.centralizers[c])),
                      t.values[j][c].complex_conj());
            auto v = s.rational();
            Rational want = i == j ? Rational(order) : Rational(0);
            if (!v || *v != want)
                out.problems.push_back("rows chi" + std::to_string(i + 1) + ", chi" + std::to_string(j + 1) +
                                       " give " + s.to_string());
        }
    }
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
            RadicalSum s;
            for (std::size_t i = 0; i < k; ++i) s.add(t.values[i][a], t.values[i][b].complex_conj());
            auto v = s.rational();
            if (!v || *v != 0)
                out.problems.push_back("columns " + t.classes[a] + ", " + t.classes[b] + " give " + s.to_string());
        }
        if (order % t.centralizers[a] != 0) out.problems.push_back("centralizer of " + t.classes[a]);
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (t.values[i][0].irr() != 0 || t.values[i][0].rat() <= 0 || !is_integer(t.values[i][0].rat()))
            out.problems.push_back("degree of chi" + std::to_string(i + 1));
        bool real = std::all_of(t.values[i].begin(), t.values[i].end(), [](const QuadValue& v) { return v.is_real(); });
        if ((t.fs[i] == 0) == real) out.problems.push_back("FS indicator of chi" + std::to_string(i + 1));
    }
    for (const auto& [p, row] : t.power_maps) {
        for (std::size_t c = 0; c < k; ++c) {
            long o = label_order(t.classes[c]);
            try {
                long want = o / std::gcd(o, p);
                if (label_order(row[c]) != want)
                    out.problems.push_back("power map " + std::to_string(p) + " at " + t.classes[c]);
                t.class_index(row[c]);
            } catch (const UnknownClass&) {
                out.problems.push_back("power map " + std::to_string(p) + " names " + row[c]);
            }
        }
    }
    out.pass = out.problems.empty();
    return out;
}

const std::vector<Integer>* CoefficientTable::row(long d4l) const {
    for (const auto& [d, v] : rows)
        if (d == d4l) return &v;
    return nullptr;
}

std::vector<Integer> CoefficientTable::per_class(const std::vector<Integer>& values) const {
    const auto& t = character_table(lambency);
    std::vector<Integer> out(t.classes.size());
    std::vector<bool> hit(t.classes.size(), false);
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (std::size_t k : t.expand(columns[c])) {
            out[k] = values.at(c);
            hit[k] = true;
        }
    if (std::find(hit.begin(), hit.end(), false) != hit.end())
        throw DataCorrupt("coefficient columns do not cover every class at lambency " + std::to_string(lambency));
    return out;
}

const CoefficientTable& coefficient_table(long ell, long r) {
    static std::mutex m;
    static std::map<std::pair<long, long>, std::unique_ptr<CoefficientTable>> cache;
    std::lock_guard<std::mutex> lock(m);
    auto key = std::make_pair(ell, r);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
    const auto& doc = load_json("coefficients/ell" + std::to_string(ell) + "_r" + std::to_string(r) + ".json");
    auto t = std::make_unique<CoefficientTable>();
    try {
        t->lambency = doc.at("lambency").get<long>();
        t->r = doc.at("r").get<long>();
        t->columns = doc.at("columns").get<std::vector<std::string>>();
        t->gamma = doc.at("gamma").get<std::vector<std::string>>();
        for (const auto& row : doc.at("rows")) {
            auto v = row.get<std::vector<long>>();
            if (v.size() != t->columns.size() + 1) throw DataCorrupt("ragged coefficient row");
            std::vector<Integer> vals;
            for (std::size_t i = 1; i < v.size(); ++i) vals.emplace_back(v[i]);
            t->rows.emplace_back(v[0], std::move(vals));
        }
    } catch (const nlohmann::json::exception& e) {
        throw DataCorrupt("coefficient table " + std::to_string(ell) + "," + std::to_string(r) + ": " + e.what());
    }
    return *cache.emplace(key, std::move(t)).first->second;
}

bool Multiplicities::doublet() const {
    bool any = false;
    for (const auto& c : counts) {
        if (!is_integer(c)) return false;
        if (c != 0) any = true;
        if (mpz_odd_p(c.get_num_mpz_t())) return false;
    }
    return any;
}

std::string Multiplicities::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const Rational& c = counts[i];
        if (c == 0) continue;
        std::string name = "chi" + std::to_string(i + 1);
        if (out.empty()) {
            out = c == 1 ? name : c == -1 ? "-" + name : rational_short(c) + " " + name;
        } else if (c > 0) {
            out += c == 1 ? " + " + name : " + " + rational_short(c) + " " + name;
        } else {
            out += c == -1 ? " - " + name : " - " + rational_short(-c) + " " + name;
        }
    }
    return out.empty() ? "0" : out;
}

Multiplicities decompose(long ell, long r, long d4l, const std::vector<Integer>& per_class) {
    const auto& t = character_table(ell);
    if (per_class.size() != t.classes.size())
        throw std::invalid_argument("decompose needs one coefficient per class");
    Multiplicities m;
    m.lambency = ell;
    m.r = r;
    m.d4l = d4l;
    m.integral = true;
    m.nonnegative = true;
    for (std::size_t i = 0; i < t.classes.size(); ++i) {
        RadicalSum s;
        for (std::size_t c = 0; c < t.classes.size(); ++c)
            s.add(t.values[i][c].complex_conj(),
                  QuadValue(Rational(per_class[c]) / Rational(t.centralizers[c])));
        auto v = s.rational();
        if (!v) throw MixedDiscriminant("multiplicity of chi" + std::to_string(i + 1) + " is " + s.to_string());
        if (!is_integer(*v)) m.integral = false;
        if (*v < 0) m.nonnegative = false;
        m.counts.push_back(*v);
    }
    return m;
}

std::vector<Integer> recompose(const Multiplicities& m) {
    const auto& t = character_table(m.lambency);
    std::vector<Integer> out;
    for (std::size_t c = 0; c < t.classes.size(); ++c) {
        RadicalSum s;
        for (std::size_t i = 0; i < m.counts.size(); ++i) s.add(t.values[i][c], QuadValue(m.counts[i]));
        auto v = s.rational();
        if (!v || !is_integer(*v)) throw MixedDiscriminant("recomposed value at " + t.classes[c] + " is " + s.to_string());
        out.push_back(v->get_num());
    }
    return out;
}

DecompositionReport verify_decomposition_tables(long ell) {
    DecompositionReport rep;
    const auto& t = character_table(ell);
    for (long r = 1; r < ell; ++r) {
        const auto& coeffs = coefficient_table(ell, r);
        const auto& doc = load_json("decompositions/ell" + std::to_string(ell) + "_r" + std::to_string(r) + ".json");
        std::vector<long> irr = doc.at("irreducibles").get<std::vector<long>>();
        for (const auto& row : doc.at("rows")) {
            auto v = row.get<std::vector<long>>();
            long d4l = v.at(0);
            std::string where = "r=" + std::to_string(r) + " row " + std::to_string(d4l);
            const auto* c = coeffs.row(d4l);
            if (!c) {
                rep.problems.push_back(where + ": no coefficients");
                continue;
            }
            auto m = decompose(ell, r, d4l, coeffs.per_class(*c));
            ++rep.rows_checked;
            std::vector<Rational> want(t.classes.size(), Rational(0));
            for (std::size_t i = 0; i < irr.size(); ++i) want[static_cast<std::size_t>(irr[i] - 1)] = v.at(i + 1);
            if (m.counts != want) rep.problems.push_back(where + ": computed " + m.to_string());
            bool polar = d4l < 0;
            if (!m.integral || (!m.nonnegative && !polar))
                rep.problems.push_back(where + ": multiplicities " + m.to_string());
            if (ell > 2) {
                for (std::size_t i = 0; i < m.counts.size(); ++i) {
                    if (m.counts[i] == 0) continue;
                    if (faithful_on_z(t, i) != (r % 2 == 0))
                        rep.problems.push_back(where + ": chi" + std::to_string(i + 1) + " breaks the parity rule");
                }
            }
        }
    }
    rep.pass = rep.problems.empty() && rep.rows_checked > 0;
    return rep;
}

DiscriminantReport discriminant_report(long ell, std::optional<long> depth) {
    const auto& t = character_table(ell);
    const auto& doc = load_json("discriminants.json").at(std::to_string(ell));
    DiscriminantReport rep;
    rep.expected_n = doc.at("n").get<std::vector<long>>();
    auto fail = [&](const std::string& s) { rep.problems.push_back(s); };

    // discriminants: -D = 4 ell d with a nonzero coefficient of H at the identity class
    std::map<long, long> component;  // -D -> r
    for (long r = 1; r < ell; ++r)
        for (const auto& [d4l, v] : coefficient_table(ell, r).rows)
            if (d4l > 0 && v.at(0) != 0 && (!depth || d4l <= *depth)) component[d4l] = r;
    long top = component.empty() ? 0 : component.rbegin()->first;
    std::set<long> orders;
    for (const auto& c : t.classes) orders.insert(label_order(c));
    for (long n : orders) {
        if (n <= 1) continue;
        for (long lam = 1; n * lam * lam <= top; ++lam)
            if (std::gcd(n, lam) == 1 && component.count(n * lam * lam)) {
                rep.type_n.push_back(n);
                break;
            }
    }
    if (rep.type_n != rep.expected_n) {
        std::string got;
        for (long n : rep.type_n) got += " " + std::to_string(n);
        fail("type-n list differs:" + got);
    }

    auto is_square_multiple = [&](long minus_d, long* n_out) {
        for (long n : rep.expected_n)
            for (long lam = 1; n * lam * lam <= minus_d; ++lam)
                if (n * lam * lam == minus_d) {
                    if (n_out) *n_out = n;
                    return true;
                }
        return false;
    };
    auto type_of = [&](std::size_t i) -> std::optional<long> {
        long d = character_field(t, i);
        if (d == 1) return std::nullopt;
        for (long n : rep.expected_n)
            if (squarefree_part(-n) == d) return n;
        return std::nullopt;
    };
    auto of_type = [&](std::size_t i, long n) { return character_field(t, i) == squarefree_part(-n); };
    auto conjugate_of = [&](std::size_t i) -> std::optional<std::size_t> {
        for (std::size_t j = 0; j < t.classes.size(); ++j) {
            bool same = true;
            for (std::size_t c = 0; c < t.classes.size() && same; ++c)
                same = t.values[j][c] == t.values[i][c].complex_conj();
            if (same) return j;
        }
        return std::nullopt;
    };

    // FS indicator zero exactly for the type-n irreducibles
    std::set<std::pair<long, long>> stored;
    for (const auto& p : doc.at("pairs")) stored.emplace(p.at(0).get<long>(), p.at(1).get<long>());
    for (std::size_t i = 0; i < t.classes.size(); ++i) {
        bool typed = type_of(i).has_value();
        if ((t.fs[i] == 0) != typed) fail("chi" + std::to_string(i + 1) + " FS indicator vs type");
        if (t.fs[i] == 0) {
            auto j = conjugate_of(i);
            if (!j) {
                fail("chi" + std::to_string(i + 1) + " has no conjugate");
            } else if (i < *j) {
                rep.pairs.emplace_back(static_cast<long>(i + 1), static_cast<long>(*j + 1));
            }
        }
    }
    if (std::set<std::pair<long, long>>(rep.pairs.begin(), rep.pairs.end()) != stored) fail("type-n pairs differ");

    auto decomposition_at = [&](long minus_d) -> std::optional<Multiplicities> {
        auto it = component.find(minus_d);
        if (it == component.end()) return std::nullopt;
        const auto& ct = coefficient_table(ell, it->second);
        return decompose(ell, it->second, minus_d, ct.per_class(*ct.row(minus_d)));
    };
    auto has_dual_pair = [&](const Multiplicities& m, long n) {
        for (std::size_t i = 0; i < m.counts.size(); ++i) {
            if (m.counts[i] == 0 || !of_type(i, n)) continue;
            auto j = conjugate_of(i);
            if (j && *j != i && m.counts[*j] != 0) return true;
        }
        return false;
    };

    // smallest lambda_n: K is a single dual pair of type n
    for (long n : rep.expected_n) {
        std::optional<long> lam;
        for (long l = 1; n * l * l <= top && !lam; ++l)
            if (component.count(n * l * l)) lam = l;
        if (!lam) {
            fail("no discriminant -" + std::to_string(n) + " lambda^2 within depth");
            continue;
        }
        long md = n * *lam * *lam;
        auto m = *decomposition_at(md);
        std::vector<std::size_t> nz;
        for (std::size_t i = 0; i < m.counts.size(); ++i)
            if (m.counts[i] != 0) nz.push_back(i);
        bool ok = nz.size() == 2 && m.counts[nz[0]] == 1 && m.counts[nz[1]] == 1 && of_type(nz[0], n) &&
                  conjugate_of(nz[0]) == nz[1];
        rep.lines.push_back("n=" + std::to_string(n) + " lambda=" + std::to_string(*lam) + " -D=" +
                            std::to_string(md) + ": " + m.to_string() + (ok ? "" : "  (not a dual pair)"));
        if (!ok) fail("minimal discriminant for n=" + std::to_string(n) + " is " + m.to_string());
    }

    // listed samples: each is -n lambda^2, so must carry a type-n dual pair and not be a doublet
    for (const auto& s : doc.at("samples")) {
        long md = s.get<long>();
        if (depth && md > *depth) continue;
        auto m = decomposition_at(md);
        if (!m) {
            fail("-D=" + std::to_string(md) + " is not a discriminant within the tables");
            continue;
        }
        long n = 0;
        bool form = is_square_multiple(md, &n);
        bool ok = form && !m->doublet() && has_dual_pair(*m, n);
        rep.lines.push_back("-D=" + std::to_string(md) + ": " + m->to_string() + (m->doublet() ? " doublet" : " not a doublet"));
        if (!ok) fail("-D=" + std::to_string(md) + " breaks the doublet rule");
    }

    // the rule across every tabulated discriminant, recorded without affecting the verdict
    for (const auto& [md, r] : component) {
        auto m = *decomposition_at(md);
        long n = 0;
        bool form = is_square_multiple(md, &n);
        if (form == m.doublet() || (form && !has_dual_pair(m, n)))
            rep.counterexamples.push_back("-D=" + std::to_string(md) + ": " + m.to_string());
    }
    rep.pass = rep.problems.empty();
    return rep;
}

TableCheck check_self_paired(long ell) {
    const auto& t = character_table(ell);
    const auto& g = generate(ell);
    TableCheck out;
    for (const auto& c : g.classes) {
        if (c.paired != c.label) continue;
        std::size_t k = t.class_index(c.label);
        for (std::size_t i = 0; i < t.classes.size(); ++i)
            if (faithful_on_z(t, i) && !(t.values[i][k] == QuadValue(Rational(0))))
                out.problems.push_back("chi" + std::to_string(i + 1) + " at self-paired " + c.label);
    }
    out.pass = out.problems.empty();
    return out;
}

}  // namespace umbral
