// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Failures that coincide exactly with the cells listed in errata.json are
// still reported as FAIL but do not change the exit status.

#include "umbral/data.hpp"
#include "umbral/errors.hpp"
#include "umbral/fracseries.hpp"
#include "umbral/groups.hpp"
#include "umbral/jacobi.hpp"
#include "umbral/mckay.hpp"
#include "umbral/reps.hpp"
#include "umbral/siegel.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace umbral;

namespace {

const std::vector<long> kLambencies = {2, 3, 4, 5, 7, 13};

struct Outcome {
    bool pass = true;
    std::vector<std::string> unexpected;  // failures not covered by the errata
    std::vector<std::string> errata;      // failures that are listed errata
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            unexpected.push_back(what);
        }
    }
};

std::string joined(const std::vector<std::string>& v, const std::string& sep = "; ") {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : sep) + x;
    return s;
}

std::string tag(long ell) { return "lambency " + std::to_string(ell); }

std::set<std::string> coefficient_errata() {
    std::set<std::string> out;
    for (const auto& e : load_json("errata.json").at("coefficients")) {
        long ell = e.at("lambency").get<long>();
        FracExponent q(e.at("d4l").get<long>(), 4 * ell);
        out.insert(tag(ell) + " column " + e.at("column").get<std::string>() + " r=" +
                   std::to_string(e.at("r").get<long>()) + " q^" + q.to_string() + ": computed " +
                   std::to_string(e.at("computed").get<long>()) + ", table " +
                   std::to_string(e.at("table").get<long>()));
    }
    return out;
}

std::set<std::string> decomposition_errata() {
    std::set<std::string> out;
    for (const auto& e : load_json("errata.json").at("decompositions"))
        out.insert(tag(e.at("lambency").get<long>()) + " r=" + std::to_string(e.at("r").get<long>()) + " row " +
                   std::to_string(e.at("d4l").get<long>()));
    return out;
}

Outcome identity_columns(const std::map<long, TableVerification>& tables) {
    Outcome o;
    long rows = 0;
    for (const auto& [ell, t] : tables) {
        const auto& col = t.columns.front();
        o.require(col.check.pass, tag(ell) + " 1A: " + joined(col.check.problems));
        o.require(col.check.rows_beyond == 0, tag(ell) + " 1A stops before the deepest row");
        rows += col.check.rows_checked;
    }
    o.notes.push_back(std::to_string(rows) + " tabulated identity coefficients");
    return o;
}

Outcome twisted_columns(const std::map<long, TableVerification>& tables) {
    Outcome o;
    auto known = coefficient_errata();
    long cols = 0, rows = 0;
    for (const auto& [ell, t] : tables)
        for (const auto& col : t.columns) {
            if (col.source == "extract" || !col.checked) continue;
            ++cols;
            rows += col.check.rows_checked;
            for (const auto& p : col.check.problems) {
                std::string line = tag(ell) + " column " + col.label + " " + p;
                if (known.count(line)) {
                    o.pass = false;
                    o.errata.push_back(line);
                } else {
                    o.require(false, line);
                }
            }
            if (col.cap)
                o.notes.push_back(col.label + " exact below q^" + col.cap->to_string() + " (" +
                                  std::to_string(col.check.rows_beyond) + " rows unchecked)");
            else
                o.require(col.check.rows_beyond == 0, tag(ell) + " column " + col.label + " stops early");
        }
    o.notes.insert(o.notes.begin(), std::to_string(cols) + " columns, " + std::to_string(rows) + " cells");
    return o;
}

Outcome extremality() {
    Outcome o;
    for (long ell : kLambencies) {
        auto rep = verify_extremal(ell);
        o.require(rep.pass && rep.polar_coefficient == -2 && rep.polar_exponent == FracExponent(-1, 4 * ell),
                  tag(ell) + " extremal: " + joined(rep.problems));
        FracExponent cut(10);
        auto z0 = umbral_Z(ell, cut).specialize_z0();
        o.require(z0 == FracSeries::constant(Rational(24) / (ell - 1), cut) && umbral_chi(ell) == 24 / (ell - 1),
                  tag(ell) + " Z(tau, 0) is not 24/(l-1)");
    }
    return o;
}

Outcome extremal_dimensions() {
    Outcome o;
    for (long m : {9L, 25L}) {
        auto d = extremal_space_dim(m);
        o.require(d.dimension == 0, "m=" + std::to_string(m) + " dimension " + std::to_string(d.dimension));
    }
    // every weak form with q^0 row a + b(y + 1/y) satisfies (m-1)(a+2b) = 12b
    long candidates = 0;
    for (long m = 2; m <= 25; ++m) {
        auto phi = gritsenko(m, 1, FracExponent(1));
        auto row = phi.row(FracExponent(0));
        bool shape = true;
        for (const auto& [k, c] : row)
            shape = shape && (k == FracExponent(0) || k == FracExponent(1) || k == FracExponent(-1));
        if (!shape) continue;
        ++candidates;
        Rational a = phi.coeff(FracExponent(0), FracExponent(0)), b = phi.coeff(FracExponent(0), FracExponent(1));
        o.require((m - 1) * (a + 2 * b) == 12 * b, "relation fails for phi^(" + std::to_string(m) + ")_1");
    }
    for (long ell : kLambencies) {
        auto z = umbral_Z(ell, FracExponent(1));
        Rational a = z.coeff(FracExponent(0), FracExponent(0)), b = z.coeff(FracExponent(0), FracExponent(1));
        ++candidates;
        o.require((ell - 1) * (a + 2 * b) == 12 * b, "relation fails for Z^(" + std::to_string(ell) + ")");
    }
    o.notes.push_back("relation checked on " + std::to_string(candidates) + " forms");
    return o;
}

Outcome mock_theta() {
    Outcome o;
    std::map<long, long> count;
    for (const auto& id : mock_identities()) {
        auto r = mock_identity_check(id.id, 20);
        ++count[id.lambency];
        o.require(r.pass && !(r.order < FracExponent(20)), id.id + ": " + r.detail);
    }
    o.require(count == std::map<long, long>{{2, 2}, {3, 5}, {4, 7}, {5, 4}}, "identity count per lambency");
    o.notes.push_back(std::to_string(mock_identities().size()) + " identities below q^20");
    return o;
}

Outcome weight_two() {
    Outcome o;
    long n = 0;
    for (long ell : kLambencies)
        for (const auto& col : column_labels(ell)) {
            auto rep = verify_F_consistency(ell, col);
            if (!rep.cataloged) continue;
            ++n;
            o.require(rep.pass, tag(ell) + " " + col + ": " + joined(rep.problems));
        }
    o.notes.push_back(std::to_string(n) + " classes");
    return o;
}

long unsigned_order(const GroupData& g) {
    std::set<std::vector<int>> seen;
    for (const auto& x : g.elements) seen.insert(x.unsigned_image());
    return static_cast<long>(seen.size());
}

Outcome group_data() {
    Outcome o;
    const std::map<long, long> orders{{3, 190080}, {4, 2688}, {5, 240}, {7, 24}, {13, 4}};
    for (const auto& [ell, order] : orders) {
        const auto& g = generate(ell);
        o.require(g.order == order, tag(ell) + " order " + std::to_string(g.order));
        auto rep = verify_group(ell);
        o.require(rep.pass, tag(ell) + ": " + joined(rep.problems));
        for (const auto& c : g.classes) o.require(c.pitilde == c.pi * c.pibar, tag(ell) + " " + c.label + " Pi~");
    }
    const std::map<long, long> cards{{3, 12}, {5, 6}, {7, 4}, {13, 2}};
    for (const auto& [ell, n] : cards)
        o.require(shuffle_group(n) == unsigned_order(generate(ell)), "shuffles of " + std::to_string(n) + " cards");
    return o;
}

Outcome dynkin() {
    Outcome o;
    using S = std::set<std::string>;
    const std::vector<std::tuple<long, std::string, S>> sets{
        {3, "2B", S{"1A", "2B", "3A", "4C", "5A", "6C", "3B", "4B", "2C"}},
        {4, "2C", S{"1A", "2C", "3A", "4C", "6A", "4A", "2B", "2A"}},
        {5, "4A", S{"2A", "2C", "6A"}},
        {5, "4B", S{"2A", "2C", "6A"}},
        {7, "4A", S{"1A", "4A", "2A"}}};
    for (const auto& [ell, cls, want] : sets)
        o.require(squared_class_set(ell, cls) == want, tag(ell) + " " + cls + " class set");
    auto b = check_ell4_to_ell2();
    o.require(b.pass, "lambency four to two: " + joined(b.lines));
    for (const auto& l : b.lines) o.require(l.rfind("4B", 0) != 0, "4B should be the exception: " + l);
    return o;
}

Outcome characters() {
    Outcome o;
    auto known = decomposition_errata();
    long rows = 0;
    for (long ell : kLambencies) {
        auto t = validate_table(ell);
        o.require(t.pass, tag(ell) + " orthogonality: " + joined(t.problems));
        auto d = verify_decomposition_tables(ell);
        rows += d.rows_checked;
        for (const auto& p : d.problems) {
            std::string key = tag(ell) + " " + p.substr(0, p.find(':'));
            if (known.count(key)) {
                o.pass = false;
                o.errata.push_back(tag(ell) + " " + p);
            } else {
                o.require(false, tag(ell) + " " + p);
            }
        }
        if (ell != 2) {
            auto s = check_self_paired(ell);
            o.require(s.pass, tag(ell) + " self-paired classes: " + joined(s.problems));
        }
    }
    o.notes.push_back(std::to_string(rows) + " decomposition rows");
    return o;
}

Outcome discriminants() {
    Outcome o;
    for (long ell : kLambencies) {
        auto rep = discriminant_report(ell);
        o.require(rep.pass && rep.type_n == rep.expected_n, tag(ell) + ": " + joined(rep.problems));
    }
    return o;
}

Outcome siegel() {
    Outcome o;
    auto rep = compare_igusa({3, 3, 6});
    o.require(rep.pass, rep.to_string());
    o.notes.push_back(rep.to_string());
    return o;
}

FracSeries random_series(std::mt19937_64& rng, std::int64_t denom) {
    std::uniform_int_distribution<long> coef(-9, 9), len(0, 12), lead(-5, 3), cut(4, 20);
    std::int64_t start = lead(rng);
    std::int64_t c = start + cut(rng);
    std::vector<FracSeries::Term> terms;
    for (long i = 0, n = len(rng); i < n; ++i) {
        std::int64_t e = start + static_cast<std::int64_t>(rng() % static_cast<unsigned>(c - start));
        terms.emplace_back(FracExponent(e, denom), make_rational(coef(rng), 1 + static_cast<long>(rng() % 4)));
    }
    return FracSeries::from_terms(terms, FracExponent(c, denom));
}

Outcome properties() {
    Outcome o;
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 150; ++i) {
        std::int64_t d = i % 2 == 0 ? 4 : 12;
        auto a = random_series(rng, d), b = random_series(rng, d), c = random_series(rng, 1);
        o.require(equal_to_common_order(a * b, b * a), "commutativity");
        o.require(equal_to_common_order((a * b) * c, a * (b * c)), "associativity");
        o.require(equal_to_common_order(a * (b + c), a * b + a * c), "distributivity");
        FracSeries sum(d, a.cutoff());
        for (std::int64_t k = 0; k < d; ++k) sum += a.split(FracExponent(k, d));
        o.require(equal_to_common_order(sum, a) && sum.cutoff() == a.cutoff(), "split partition");
    }
    // theta coefficients of Z rebuild its y^r rows, and both annuli give the same H
    for (long ell : kLambencies) {
        FracExponent N(6);
        HVector h = theta_decompose(umbral_Z(ell, N), ell, N);
        WindowedSeries rebuilt = WindowedSeries::zero(N, true);
        for (long r = 1; r < ell; ++r) rebuilt = rebuilt + hat_theta(ell, r, N + FracExponent(1)).mul_series(h[r]);
        for (long r = 1; r < ell; ++r)
            for (long n = 0; n < 6; ++n)
                o.require(rebuilt.coeff(FracExponent(n), FracExponent(r)) ==
                              -h[r].coeff(FracExponent(n) - FracExponent(r * r, 4 * ell)),
                          tag(ell) + " theta round trip");
    }
    HVector inner = extract_H(2, FracExponent(12), Annulus::Inner), outer = extract_H(2, FracExponent(12), Annulus::Outer);
    o.require(inner[1] == outer[1], "lambency 2 annulus independence");
    o.notes.push_back("seed 20240601");
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) set_data_dir(argv[1]);
    std::map<long, TableVerification> tables;
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"identity-class regeneration", [&] { return identity_columns(tables); }},
        {"twisted regeneration", [&] { return twisted_columns(tables); }},
        {"extremality and Z(tau,0)", [] { return extremality(); }},
        {"extremal dimensions and the linear relation", [] { return extremal_dimensions(); }},
        {"mock theta identities", [] { return mock_theta(); }},
        {"weight two consistency", [] { return weight_two(); }},
        {"group data", [] { return group_data(); }},
        {"class sets and Frame shape doubling", [] { return dynkin(); }},
        {"character tables and decompositions", [] { return characters(); }},
        {"discriminant suite", [] { return discriminants(); }},
        {"Siegel cross-check", [] { return siegel(); }},
        {"property suites", [] { return properties(); }},
    };
    int unexpected = 0, listed = 0, passed = 0;
    auto t0 = std::chrono::steady_clock::now();
    try {
        // criteria 1 and 2 share one pass over the coefficient tables
        for (long ell : kLambencies) tables.emplace(ell, verify_tables(ell, 4));
    } catch (const Error& e) {
        std::cout << "table verification aborted: " << e.what() << "\n";
        return 1;
    }
    std::cout.precision(2);
    std::cout << std::fixed << "coefficient tables computed in "
              << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s\n";
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const Error& e) {
            o.require(false, e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << ": " << criteria[i].first;
        if (!o.notes.empty()) line << " [" << joined(o.notes) << "]";
        if (!o.unexpected.empty()) line << " unexpected: " << joined(o.unexpected);
        if (!o.errata.empty()) line << " listed table errata: " << joined(o.errata);
        line.precision(2);
        line << std::fixed << " (" << secs << " s)";
        std::cout << line.str() << "\n";
        if (o.pass)
            ++passed;
        else if (o.unexpected.empty())
            ++listed;
        else
            ++unexpected;
    }
    std::cout << passed << " of " << criteria.size() << " criteria pass, " << listed
              << " fail only on listed table errata, " << unexpected << " fail otherwise\n";
    return unexpected == 0 ? 0 : 1;
}
