#include "umbral/cli.hpp"

#include "umbral/data.hpp"
#include "umbral/errors.hpp"
#include "umbral/groups.hpp"
#include "umbral/jacobi.hpp"
#include "umbral/mckay.hpp"
#include "umbral/reps.hpp"
#include "umbral/siegel.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace umbral {

namespace {

using nlohmann::json;

const std::vector<std::string> kVerbs = {"coeffs",  "extract",    "twist",        "verify-tables",
                                         "verify-identities", "verify-group", "decompose", "discriminants",
                                         "extremal-dim", "siegel", "group-info"};

struct Config {
    std::string verb;
    long lambency = 0;
    bool has_lambency = false;
    std::vector<std::string> classes;
    long r = 0;
    bool has_r = false;
    long order = 0;
    bool has_order = false;
    long ywindow = 6;
    long m = 0;
    bool has_m = false;
    long nmax = 0;
    bool has_nmax = false;
    long box = 3;
    std::string annulus = "inner";
    std::string output;
    unsigned jobs = 1;
    bool json = false;
    bool compare = false;
    bool computed = false;
    bool verify = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const std::vector<long> kLambencies = {2, 3, 4, 5, 7, 13};

std::vector<long> lambencies(const Config& c) {
    if (!c.has_lambency) return kLambencies;
    if (!is_lambent(c.lambency)) throw UsageError("--lambency must be one of 2, 3, 4, 5, 7, 13");
    return {c.lambency};
}

long need_lambency(const Config& c) {
    if (!c.has_lambency) throw UsageError(c.verb + " needs --lambency");
    return lambencies(c).front();
}

json value_json(const Rational& v) {
    if (is_integer(v) && v.get_num().fits_slong_p()) return v.get_num().get_si();
    return rational_string(v);
}

json exponent_json(const FracExponent& e) {
    if (e.den() == 1) return e.num();
    return e.to_string();
}

FracExponent series_cutoff(const Config& c, long ell) {
    if (!c.has_order) return table_cutoff(ell);
    if (c.order < 0) throw UsageError("--order must be nonnegative");
    return FracExponent(c.order, 4 * ell);
}

std::vector<long> components(const Config& c, long ell) {
    if (!c.has_r) {
        std::vector<long> all;
        for (long r = 1; r < ell; ++r) all.push_back(r);
        return all;
    }
    if (c.r < 1 || c.r >= ell) throw UsageError("--r must lie in 1.." + std::to_string(ell - 1));
    return {c.r};
}

std::string gamma_text(long n, long h) { return std::to_string(n) + "|" + std::to_string(h); }

// exponents of a component in 4 ell d units, from the polar term up to the cutoff
std::vector<long> row_keys(long ell, long r, const FracExponent& cutoff) {
    long step = 4 * ell;
    long key = ((-r * r) % step + step) % step;
    while (key - step >= -1) key -= step;
    std::vector<long> keys;
    for (; FracExponent(key, step) < cutoff; key += step) keys.push_back(key);
    return keys;
}

// coefficient tables: one block per component, one column per series
void print_tables(const Config& c, long ell, const std::vector<std::string>& labels,
                  const std::vector<std::vector<FracSeries>>& series, const FracExponent& cutoff,
                  std::ostream& out) {
    json all = json::array();
    for (long r : components(c, ell)) {
        auto keys = row_keys(ell, r, cutoff);
        json rows = json::array();
        std::ostringstream text;
        text << "# lambency " << ell << " r " << r << " below q^" << cutoff.to_string() << "\n4ld";
        for (const auto& l : labels) text << " " << l;
        text << "\n";
        for (long key : keys) {
            json row = json::array({key});
            text << key;
            for (const auto& s : series) {
                Rational v = s.at(static_cast<std::size_t>(r - 1)).coeff(FracExponent(key, 4 * ell));
                row.push_back(value_json(v));
                text << " " << rational_short(v);
            }
            text << "\n";
            rows.push_back(row);
        }
        if (c.json)
            all.push_back({{"lambency", ell}, {"r", r}, {"columns", labels}, {"rows", rows}});
        else
            out << text.str();
    }
    if (c.json) out << all.dump(1) << "\n";
}

int cmd_coeffs(const Config& c, std::ostream& out) {
    long ell = need_lambency(c);
    auto cut = series_cutoff(c, ell);
    std::vector<std::string> labels = c.classes.empty() ? std::vector<std::string>{"1A"} : c.classes;
    std::vector<std::vector<FracSeries>> series;
    std::vector<std::string> cols;
    for (const auto& l : labels) {
        auto H = twisted_H(ell, l, cut);
        if (H.cap && *H.cap < cut)
            throw DataExhausted("class " + H.label + " is only known below q^" + H.cap->to_string());
        cols.push_back(H.label);
        series.push_back(H.components);
    }
    print_tables(c, ell, cols, series, cut, out);
    return ExitOk;
}

Annulus annulus_of(const Config& c) {
    if (c.annulus == "inner") return Annulus::Inner;
    if (c.annulus == "outer") return Annulus::Outer;
    throw UsageError("--annulus must be inner or outer");
}

int cmd_extract(const Config& c, std::ostream& out) {
    long ell = need_lambency(c);
    auto cut = series_cutoff(c, ell);
    auto h = extract_H(ell, cut, annulus_of(c));
    print_tables(c, ell, {"1A"}, {h.components}, cut, out);
    return ExitOk;
}

int cmd_twist(const Config& c, std::ostream& out) {
    long ell = need_lambency(c);
    if (c.classes.size() != 1) throw UsageError("twist needs exactly one --class");
    auto cut = series_cutoff(c, ell);
    auto H = twisted_H(ell, c.classes.front(), cut);
    if (c.json) {
        json comps = json::array();
        for (long r : components(c, ell)) {
            json terms = json::array();
            for (const auto& [e, v] : H[r].terms()) terms.push_back({exponent_json(e), value_json(v)});
            comps.push_back({{"r", r}, {"cutoff", exponent_json(H[r].cutoff())}, {"terms", terms}});
        }
        json j = {{"lambency", ell},    {"class", c.classes.front()}, {"column", H.label},
                  {"chi", H.chi},       {"chibar", H.chibar},         {"gamma", gamma_text(H.n, H.h)},
                  {"source", H.source}, {"components", comps}};
        j["cap"] = H.cap ? json(exponent_json(*H.cap)) : json(nullptr);
        out << j.dump(1) << "\n";
        return ExitOk;
    }
    out << "lambency " << ell << " class " << c.classes.front() << " column " << H.label << "\n";
    out << "chi " << H.chi << " chibar " << H.chibar << " gamma " << gamma_text(H.n, H.h) << " source "
        << H.source << "\n";
    if (H.cap) out << "exact below q^" << H.cap->to_string() << " only\n";
    for (long r : components(c, ell)) out << "H_" << r << " = " << H[r].to_string() << "\n";
    return ExitOk;
}

template <class F>
void parallel_for(std::size_t count, unsigned jobs, F&& f) {
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(jobs);
    for (unsigned w = 0; w < jobs; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += jobs) f(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

int cmd_verify_tables(const Config& c, std::ostream& out) {
    bool ok = true;
    json all = json::array();
    for (long ell : lambencies(c)) {
        auto rep = verify_tables(ell, c.jobs);
        for (const auto& col : rep.columns) {
            json j = {{"lambency", ell}, {"column", col.label}, {"source", col.source}, {"checked", col.checked}};
            if (!col.checked) {
                if (!c.json) out << "lambency " << ell << " column " << col.label << ": read from the stored table\n";
                all.push_back(j);
                continue;
            }
            j["pass"] = col.check.pass;
            j["rows"] = col.check.rows_checked;
            j["rows_beyond"] = col.check.rows_beyond;
            j["problems"] = col.check.problems;
            all.push_back(j);
            if (c.json) continue;
            out << "lambency " << ell << " column " << col.label << " (" << col.source << "): ";
            if (col.check.pass)
                out << "ok, " << col.check.rows_checked << " rows";
            else
                out << "FAIL at " << (col.check.problems.empty() ? "no rows" : col.check.problems.front());
            if (col.cap)
                out << ", exact below q^" << col.cap->to_string() << ", " << col.check.rows_beyond
                    << " rows beyond";
            out << "\n";
        }
        ok = ok && rep.pass;
    }
    if (c.json) out << all.dump(1) << "\n";
    return ok ? ExitOk : ExitVerifyFailed;
}

int cmd_verify_identities(const Config& c, std::ostream& out) {
    bool ok = true;
    auto ells = lambencies(c);
    auto wanted = [&](long ell) { return std::find(ells.begin(), ells.end(), ell) != ells.end(); };
    json all = json::array();
    std::vector<const MockIdentity*> ids;
    for (const auto& id : mock_identities())
        if (wanted(id.lambency)) ids.push_back(&id);
    std::vector<IdentityCheck> checks(ids.size());
    parallel_for(ids.size(), c.jobs, [&](std::size_t i) {
        long order = 20;
        if (c.has_order) order = (c.order + 4 * ids[i]->lambency - 1) / (4 * ids[i]->lambency);
        checks[i] = mock_identity_check(ids[i]->id, order);
    });
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const auto& r = checks[i];
        ok = ok && r.pass;
        all.push_back({{"kind", "mock"}, {"id", r.id}, {"pass", r.pass}, {"order", exponent_json(r.order)},
                       {"detail", r.detail}});
        if (!c.json)
            out << "identity " << r.id << ": " << (r.pass ? "ok below q^" + r.order.to_string() : "FAIL " + r.detail)
                << "\n";
    }
    for (long ell : ells) {
        auto n4 = verify_n4_identity(ell);
        ok = ok && n4.pass;
        all.push_back({{"kind", "decomposition"}, {"lambency", ell}, {"pass", n4.pass}, {"detail", n4.first_residual}});
        if (!c.json)
            out << "lambency " << ell << " Psi Z decomposition: "
                << (n4.pass ? std::string("ok") : "FAIL at " + n4.first_residual) << "\n";
        auto labels = column_labels(ell);
        std::vector<ConsistencyReport> reps(labels.size());
        parallel_for(labels.size(), c.jobs, [&](std::size_t i) { reps[i] = verify_F_consistency(ell, labels[i]); });
        for (std::size_t i = 0; i < labels.size(); ++i) {
            const auto& rep = reps[i];
            if (!rep.cataloged) continue;
            ok = ok && rep.pass;
            std::string vs;
            for (const auto& v : rep.variants) vs += (vs.empty() ? "" : ",") + v;
            all.push_back({{"kind", "weight2"}, {"lambency", ell}, {"class", labels[i]}, {"variants", rep.variants},
                           {"pass", rep.pass}, {"order", exponent_json(rep.order)}, {"problems", rep.problems}});
            if (!c.json)
                out << "lambency " << ell << " class " << labels[i] << " weight two " << vs << ": "
                    << (rep.pass ? "ok below q^" + rep.order.to_string() : "FAIL " + rep.problems.front()) << "\n";
        }
    }
    if (c.json) out << all.dump(1) << "\n";
    return ok ? ExitOk : ExitVerifyFailed;
}

void report_lines(const std::string& head, bool pass, const std::vector<std::string>& problems, bool as_json,
                  json& all, std::ostream& out) {
    all.push_back({{"check", head}, {"pass", pass}, {"problems", problems}});
    if (as_json) return;
    out << head << ": " << (pass ? "ok" : "FAIL") << "\n";
    for (const auto& p : problems) out << "  " << p << "\n";
}

int cmd_verify_group(const Config& c, std::ostream& out) {
    bool ok = true;
    json all = json::array();
    for (long ell : lambencies(c)) {
        std::string tag = "lambency " + std::to_string(ell);
        auto t = validate_table(ell);
        report_lines(tag + " character table", t.pass, t.problems, c.json, all, out);
        ok = ok && t.pass;
        if (ell == 2) {
            auto b = check_ell4_to_ell2();
            report_lines(tag + " Frame shapes from lambency four", b.pass, b.lines, c.json, all, out);
            ok = ok && b.pass;
            continue;
        }
        const auto& g = generate(ell);
        if (!c.json) out << tag << " group order " << g.order << ", " << g.classes.size() << " classes\n";
        auto v = verify_group(ell);
        report_lines(tag + " class data", v.pass, v.problems, c.json, all, out);
        auto s = check_self_paired(ell);
        report_lines(tag + " faithful characters on self-paired classes", s.pass, s.problems, c.json, all, out);
        ok = ok && v.pass && s.pass;
    }
    if (c.json) out << all.dump(1) << "\n";
    return ok ? ExitOk : ExitVerifyFailed;
}

int cmd_decompose(const Config& c, std::ostream& out) {
    long ell = need_lambency(c);
    if (c.verify) {
        auto rep = verify_decomposition_tables(ell);
        json all = json::array();
        report_lines("lambency " + std::to_string(ell) + " decomposition tables (" +
                         std::to_string(rep.rows_checked) + " rows)",
                     rep.pass, rep.problems, c.json, all, out);
        if (c.json) out << all.dump(1) << "\n";
        return rep.pass ? ExitOk : ExitVerifyFailed;
    }
    json all = json::array();
    for (long r : components(c, ell)) {
        const auto& t = coefficient_table(ell, r);
        std::vector<TwistedH> computed;
        FracExponent cut = c.has_order ? series_cutoff(c, ell) : table_cutoff(ell);
        if (c.computed)
            for (const auto& col : t.columns) computed.push_back(twisted_H(ell, col, cut));
        for (const auto& [key, vals] : t.rows) {
            FracExponent e(key, 4 * ell);
            if (c.has_order && !(e < cut)) break;
            std::vector<Integer> row = vals;
            if (c.computed) {
                bool known = true;
                for (std::size_t j = 0; j < computed.size(); ++j) {
                    const auto& s = computed[j][r];
                    if (!(e < s.cutoff()) || (computed[j].cap && !(e < *computed[j].cap))) {
                        known = false;
                        break;
                    }
                    Rational v = s.coeff(e);
                    if (!is_integer(v)) throw DataCorrupt("non-integral coefficient at q^" + e.to_string());
                    row[j] = v.get_num();
                }
                if (!known) break;
            }
            auto m = decompose(ell, r, key, t.per_class(row));
            json counts = json::array();
            for (const auto& v : m.counts) counts.push_back(value_json(v));
            all.push_back({{"lambency", ell}, {"r", r}, {"d4l", key}, {"multiplicities", counts},
                           {"integral", m.integral}, {"nonnegative", m.nonnegative}});
            if (!c.json)
                out << "r=" << r << " " << key << ": " << m.to_string() << (m.integral ? "" : "  (not integral)")
                    << "\n";
        }
    }
    if (c.json) out << all.dump(1) << "\n";
    return ExitOk;
}

int cmd_discriminants(const Config& c, std::ostream& out) {
    bool ok = true;
    json all = json::array();
    for (long ell : lambencies(c)) {
        std::optional<long> depth;
        if (c.has_order) depth = c.order;
        auto rep = discriminant_report(ell, depth);
        ok = ok && rep.pass;
        all.push_back({{"lambency", ell},
                       {"pass", rep.pass},
                       {"type_n", rep.type_n},
                       {"expected_n", rep.expected_n},
                       {"lines", rep.lines},
                       {"problems", rep.problems},
                       {"counterexamples", rep.counterexamples}});
        if (c.json) continue;
        out << "lambency " << ell << ": " << (rep.pass ? "ok" : "FAIL") << ", type n =";
        for (long n : rep.type_n) out << " " << n;
        out << "\n";
        for (const auto& l : rep.lines) out << "  " << l << "\n";
        for (const auto& p : rep.problems) out << "  problem: " << p << "\n";
        for (const auto& p : rep.counterexamples) out << "  counterexample: " << p << "\n";
    }
    if (c.json) out << all.dump(1) << "\n";
    return ok ? ExitOk : ExitVerifyFailed;
}

int cmd_extremal_dim(const Config& c, std::ostream& out) {
    if (!c.has_m) throw UsageError("extremal-dim needs --m");
    if (c.m < 2 || c.m > 25) throw UsageError("--m must lie in 2..25");
    std::optional<long> nmax;
    if (c.has_nmax) nmax = c.nmax;
    auto d = extremal_space_dim(c.m, nmax);
    if (c.json)
        out << json({{"m", d.m}, {"dimension", d.dimension}, {"unknowns", d.unknowns}, {"equations", d.equations},
                     {"rank", d.rank}, {"nmax", d.nmax}})
                   .dump()
            << "\n";
    else
        out << d.dimension << "\n";
    return ExitOk;
}

int cmd_siegel(const Config& c, std::ostream& out) {
    long ell = c.has_lambency ? need_lambency(c) : 2;
    if (c.box < 0 || c.ywindow < 0) throw UsageError("--box and --ywindow must be nonnegative");
    TripleBox box{c.box, c.box, c.ywindow};
    if (c.compare) {
        if (ell != 2) throw UsageError("--compare applies to lambency 2");
        auto rep = compare_igusa(box, c.jobs);
        if (c.json) {
            json j = {{"pass", rep.pass}, {"cells", rep.cells}, {"nonzero", rep.nonzero}};
            if (rep.first_difference)
                j["first_difference"] = {{"m", (*rep.first_difference)[0]},
                                         {"n", (*rep.first_difference)[1]},
                                         {"r", (*rep.first_difference)[2]},
                                         {"additive", rational_string(rep.additive)},
                                         {"exponential", rational_string(rep.exponential)}};
            out << j.dump() << "\n";
        } else {
            out << "additive and exponential lifts: " << rep.to_string() << "\n";
        }
        return rep.pass ? ExitOk : ExitVerifyFailed;
    }
    auto S = exponential_lift(ell, box);
    if (c.json) {
        out << S.json() << "\n";
        return ExitOk;
    }
    for (const auto& [k, row] : S.terms())
        for (const auto& [r, v] : row)
            out << k[0].to_string() << " " << k[1].to_string() << " " << r << " " << rational_short(v) << "\n";
    return ExitOk;
}

int cmd_group_info(const Config& c, std::ostream& out) {
    long ell = need_lambency(c);
    json classes = json::array();
    std::ostringstream text;
    if (ell == 2) {
        text << "lambency 2 group M24 order 244823040\nclass order frame chi gamma\n";
        for (const auto& k : m24_classes()) {
            if (!c.classes.empty() && std::find(c.classes.begin(), c.classes.end(), k.label) == c.classes.end())
                continue;
            classes.push_back(
                {{"label", k.label}, {"order", k.order}, {"frame", k.pi.to_string()}, {"chi", k.chi}, {"gamma", k.gamma}});
            text << k.label << " " << k.order << " " << k.pi.to_string() << " " << k.chi << " " << k.gamma << "\n";
        }
        for (const auto& l : c.classes)
            if (classes.empty() || std::none_of(classes.begin(), classes.end(),
                                                [&](const json& j) { return j["label"] == l; }))
                throw UnknownClass("no class " + l + " at lambency 2");
        if (c.json)
            out << json({{"lambency", 2}, {"order", 244823040}, {"classes", classes}}).dump(1) << "\n";
        else
            out << text.str();
        return ExitOk;
    }
    const auto& g = generate(ell);
    std::vector<const ClassInfo*> picked;
    if (c.classes.empty())
        for (const auto& k : g.classes) picked.push_back(&k);
    else
        for (const auto& l : c.classes) picked.push_back(&g.cls(l));
    text << "lambency " << ell << " order " << g.order << " degree " << g.degree << "\n";
    text << "class table_label order size frame chi chibar gamma paired\n";
    for (const auto* k : picked) {
        classes.push_back({{"label", k->label},
                           {"table_label", k->table_label},
                           {"order", k->order},
                           {"size", k->size},
                           {"frame", k->pi.to_string()},
                           {"frame_bar", k->pibar.to_string()},
                           {"chi", k->chi},
                           {"chibar", k->chibar},
                           {"gamma", gamma_text(k->n, k->h)},
                           {"paired", k->paired}});
        text << k->label << " " << k->table_label << " " << k->order << " " << k->size << " " << k->pi.to_string()
             << " " << k->chi << " " << k->chibar << " " << gamma_text(k->n, k->h) << " " << k->paired << "\n";
    }
    if (c.json)
        out << json({{"lambency", ell}, {"order", g.order}, {"degree", g.degree}, {"classes", classes}}).dump(1)
            << "\n";
    else
        out << text.str();
    return ExitOk;
}

int dispatch(const Config& c, std::ostream& out) {
    if (c.verb == "coeffs") return cmd_coeffs(c, out);
    if (c.verb == "extract") return cmd_extract(c, out);
    if (c.verb == "twist") return cmd_twist(c, out);
    if (c.verb == "verify-tables") return cmd_verify_tables(c, out);
    if (c.verb == "verify-identities") return cmd_verify_identities(c, out);
    if (c.verb == "verify-group") return cmd_verify_group(c, out);
    if (c.verb == "decompose") return cmd_decompose(c, out);
    if (c.verb == "discriminants") return cmd_discriminants(c, out);
    if (c.verb == "extremal-dim") return cmd_extremal_dim(c, out);
    if (c.verb == "siegel") return cmd_siegel(c, out);
    if (c.verb == "group-info") return cmd_group_info(c, out);
    throw UsageError("unknown verb " + c.verb);
}

bool data_error(const std::string& kind) {
    return kind == "DataMissing" || kind == "DataCorrupt" || kind == "DataExhausted";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app("Umbral moonshine series, groups and checks", "umbral");
    Config c;
    std::string data_dir, classes;
    app.add_option("verb", c.verb, "command")->required()->check(CLI::IsMember(kVerbs));
    auto* o_l = app.add_option("--lambency", c.lambency, "lambency in {2,3,4,5,7,13}");
    auto* o_c = app.add_option("--class", classes, "class label, or a comma separated list for coeffs");
    auto* o_r = app.add_option("--r", c.r, "component 1..l-1");
    auto* o_o = app.add_option("--order", c.order, "q-order in units of 1/(4l)");
    app.add_option("--ywindow", c.ywindow, "y window |r| <= w for siegel")->capture_default_str();
    auto* o_m = app.add_option("--m", c.m, "index plus one for extremal-dim");
    auto* o_n = app.add_option("--nmax", c.nmax, "deepest q-order in the extremal conditions");
    app.add_option("--box", c.box, "siegel box m, n <= N")->capture_default_str();
    app.add_option("--annulus", c.annulus, "inner or outer expansion for extract")->capture_default_str();
    app.add_option("--data-dir", data_dir, "fixture directory");
    app.add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--output", c.output, "write to a file instead of standard output");
    app.add_flag("--json", c.json, "machine-readable output");
    app.add_flag("--compare", c.compare, "siegel: compare the additive and exponential lifts");
    app.add_flag("--computed", c.computed, "decompose: use computed series instead of the stored tables");
    app.add_flag("--verify", c.verify, "decompose: check the stored decomposition tables");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return ExitUsage;
    }
    c.has_lambency = o_l->count() > 0;
    c.has_r = o_r->count() > 0;
    c.has_order = o_o->count() > 0;
    c.has_m = o_m->count() > 0;
    c.has_nmax = o_n->count() > 0;
    if (o_c->count() > 0) {
        std::stringstream ss(classes);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) c.classes.push_back(item);
    }
    if (!data_dir.empty()) set_data_dir(data_dir);

    try {
        std::ostringstream buffer;
        int status = dispatch(c, buffer);
        if (c.output.empty()) {
            out << buffer.str();
        } else {
            std::ofstream f(c.output);
            if (!f) {
                err << "usage error: cannot write " << c.output << "\n";
                return ExitUsage;
            }
            f << buffer.str();
        }
        return status;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return ExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return data_error(e.kind()) ? ExitData : ExitUsage;
    }
}

}  // namespace umbral
