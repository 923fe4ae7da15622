#include "umbral/groups.hpp"

#include "umbral/data.hpp"
#include "umbral/errors.hpp"
#include "umbral/rational.hpp"
#include "umbral/reps.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace umbral {

// ---------------------------------------------------------------- FrameShape

FrameShape::FrameShape(std::map<long, long> factors) {
    for (const auto& [k, m] : factors)
        if (m != 0) f_[k] = m;
}

FrameShape FrameShape::parse(const std::string& text) {
    std::map<long, long> f;
    auto add_part = [&](const std::string& part, long sign) {
        std::istringstream in(part);
        std::string tok;
        while (in >> tok) {
            auto caret = tok.find('^');
            try {
                long k = std::stol(tok.substr(0, caret));
                long m = caret == std::string::npos ? 1 : std::stol(tok.substr(caret + 1));
                if (k <= 0) throw std::invalid_argument("cycle length");
                f[k] += sign * m;
            } catch (const std::logic_error&) {
                throw std::invalid_argument("bad Frame shape factor '" + tok + "' in '" + text + "'");
            }
        }
    };
    auto slash = text.find('/');
    add_part(text.substr(0, slash), 1);
    if (slash != std::string::npos) add_part(text.substr(slash + 1), -1);
    return FrameShape(f);
}

std::string FrameShape::to_string() const {
    std::string num, den;
    for (const auto& [k, m] : f_) {
        std::string& s = m > 0 ? num : den;
        if (!s.empty()) s += ' ';
        s += std::to_string(k) + "^" + std::to_string(m > 0 ? m : -m);
    }
    if (num.empty()) num = "1";
    return den.empty() ? num : num + "/" + den;
}

long FrameShape::exponent(long k) const {
    auto it = f_.find(k);
    return it == f_.end() ? 0 : it->second;
}

bool FrameShape::is_cycle_shape() const {
    return std::all_of(f_.begin(), f_.end(), [](const auto& e) { return e.second > 0; });
}

long FrameShape::degree() const {
    long d = 0;
    for (const auto& [k, m] : f_) d += k * m;
    return d;
}

FrameShape operator*(const FrameShape& a, const FrameShape& b) {
    std::map<long, long> f = a.f_;
    for (const auto& [k, m] : b.f_) f[k] += m;
    return FrameShape(f);
}

// ---------------------------------------------------------------- SignedPerm

SignedPerm SignedPerm::identity(int n) {
    SignedPerm p;
    p.img_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i << 1);
    return p;
}

SignedPerm SignedPerm::from_images(const std::vector<int>& target, const std::vector<int>& sign) {
    if (target.size() != sign.size() || target.size() > 64)
        throw std::invalid_argument("signed permutation needs one sign per target");
    const int n = static_cast<int>(target.size());
    std::vector<bool> hit(target.size(), false);
    SignedPerm p;
    for (int i = 0; i < n; ++i) {
        int t = target[static_cast<std::size_t>(i)];
        int s = sign[static_cast<std::size_t>(i)];
        if (t < 0 || t >= n || hit[static_cast<std::size_t>(t)] || (s != 1 && s != -1))
            throw std::invalid_argument("signed permutation images must form a bijection");
        hit[static_cast<std::size_t>(t)] = true;
        p.img_.push_back(static_cast<std::uint8_t>((t << 1) | (s < 0 ? 1 : 0)));
    }
    return p;
}

SignedPerm SignedPerm::parse(const std::string& text, const std::vector<std::string>& labels) {
    const int n = static_cast<int>(labels.size());
    std::vector<int> target(labels.size()), sign(labels.size(), 1);
    std::iota(target.begin(), target.end(), 0);
    auto lookup = [&](const std::string& tok) {
        std::string t = tok;
        if (t == "inf" || t == "\u221e") t = "oo";
        for (int i = 0; i < n; ++i)
            if (labels[static_cast<std::size_t>(i)] == t) return i;
        throw std::invalid_argument("unknown point '" + tok + "' in '" + text + "'");
    };
    std::size_t pos = 0;
    std::vector<bool> moved(labels.size(), false);
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) { ++pos; continue; }
        if (text[pos] != '(') throw std::invalid_argument("expected '(' in '" + text + "'");
        auto close = text.find(')', pos);
        if (close == std::string::npos) throw std::invalid_argument("unbalanced '(' in '" + text + "'");
        std::string body = text.substr(pos + 1, close - pos - 1);
        pos = close + 1;
        std::vector<std::pair<int, bool>> cyc;  // point, barred
        // "(oo 6)(-2 -X)" with spaces, or compact "(0123456)" with one character per point
        const bool spaced = body.find(' ') != std::string::npos;
        std::size_t i = 0;
        while (i < body.size()) {
            if (std::isspace(static_cast<unsigned char>(body[i]))) { ++i; continue; }
            bool bar = false;
            if (body[i] == '-') { bar = true; ++i; }
            std::size_t len = 1;
            if (spaced) {
                len = 0;
                while (i + len < body.size() && !std::isspace(static_cast<unsigned char>(body[i + len]))) ++len;
            } else if (body.compare(i, 2, "oo") == 0) {
                len = 2;
            } else if (body.compare(i, 3, "inf") == 0 || body.compare(i, 3, "\u221e") == 0) {
                len = 3;
            }
            cyc.emplace_back(lookup(body.substr(i, len)), bar);
            i += len;
        }
        if (cyc.empty()) continue;
        for (std::size_t c = 0; c < cyc.size(); ++c) {
            int from = cyc[c].first;
            const auto& next = cyc[(c + 1) % cyc.size()];
            if (moved[static_cast<std::size_t>(from)])
                throw std::invalid_argument("point repeated in '" + text + "'");
            moved[static_cast<std::size_t>(from)] = true;
            target[static_cast<std::size_t>(from)] = next.first;
            sign[static_cast<std::size_t>(from)] = next.second ? -1 : 1;
        }
    }
    return from_images(target, sign);
}

SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) {
    if (a.img_.size() != b.img_.size()) throw std::invalid_argument("degree mismatch");
    SignedPerm r;
    r.img_.resize(a.img_.size());
    for (std::size_t i = 0; i < b.img_.size(); ++i) {
        std::uint8_t bi = b.img_[i];
        std::uint8_t ai = a.img_[bi >> 1];
        r.img_[i] = static_cast<std::uint8_t>((ai & ~1u) | ((ai ^ bi) & 1u));
    }
    return r;
}

SignedPerm SignedPerm::inverse() const {
    SignedPerm r;
    r.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i)
        r.img_[img_[i] >> 1] = static_cast<std::uint8_t>((i << 1) | (img_[i] & 1u));
    return r;
}

SignedPerm SignedPerm::pow(long k) const {
    SignedPerm base = k < 0 ? inverse() : *this;
    unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
    SignedPerm r = identity(degree());
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool SignedPerm::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != (i << 1)) return false;
    return true;
}

std::vector<int> SignedPerm::unsigned_image() const {
    std::vector<int> out;
    for (auto v : img_) out.push_back(v >> 1);
    return out;
}

std::uint64_t SignedPerm::key() const {
    if (img_.size() > 12) throw std::length_error("key needs degree at most 12");
    std::uint64_t k = 0;
    for (auto v : img_) k = (k << 5) | v;
    return k;
}

namespace {

// (length, sign product) of each cycle of the underlying permutation
std::vector<std::pair<long, int>> signed_cycles(const SignedPerm& g) {
    const int n = g.degree();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<std::pair<long, int>> out;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        long len = 0;
        int s = 1;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = g.target(j)) {
            seen[static_cast<std::size_t>(j)] = true;
            s *= g.sign(j);
            ++len;
        }
        out.emplace_back(len, s);
    }
    return out;
}

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

}  // namespace

long SignedPerm::order() const {
    long o = 1;
    for (const auto& [k, s] : signed_cycles(*this)) o = lcm_long(o, s > 0 ? k : 2 * k);
    return o;
}

FrameShape SignedPerm::frame_shape() const {
    std::map<long, long> f;
    for (const auto& [k, s] : signed_cycles(*this)) {
        if (s > 0) {
            f[k] += 1;
        } else {
            f[2 * k] += 1;
            f[k] -= 1;
        }
    }
    return FrameShape(f);
}

FrameShape SignedPerm::unsigned_shape() const {
    std::map<long, long> f;
    for (const auto& c : signed_cycles(*this)) f[c.first] += 1;
    return FrameShape(f);
}

FrameShape SignedPerm::total_shape() const {
    // points 2i (for +e_i) and 2i+1 (for -e_i)
    const int n = degree();
    std::vector<bool> seen(static_cast<std::size_t>(2 * n), false);
    std::map<long, long> f;
    for (int p = 0; p < 2 * n; ++p) {
        long len = 0;
        for (int q = p; !seen[static_cast<std::size_t>(q)];) {
            seen[static_cast<std::size_t>(q)] = true;
            ++len;
            int i = q >> 1;
            int s = (q & 1) ^ (sign(i) < 0 ? 1 : 0);
            q = (target(i) << 1) | s;
        }
        if (len) f[len] += 1;
    }
    return FrameShape(f);
}

long SignedPerm::chi() const {
    long c = 0;
    for (int i = 0; i < degree(); ++i)
        if (target(i) == i) c += sign(i);
    return c;
}

long SignedPerm::chibar() const {
    long c = 0;
    for (int i = 0; i < degree(); ++i)
        if (target(i) == i) ++c;
    return c;
}

std::string SignedPerm::to_string(const std::vector<std::string>& labels) const {
    const int n = degree();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::string out;
    auto name = [&](int i) {
        return i < static_cast<int>(labels.size()) ? labels[static_cast<std::size_t>(i)] : std::to_string(i);
    };
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        std::vector<int> cyc;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = target(j)) {
            seen[static_cast<std::size_t>(j)] = true;
            cyc.push_back(j);
        }
        bool trivial = cyc.size() == 1 && sign(i) > 0;
        if (trivial) continue;
        out += '(';
        for (std::size_t c = 0; c < cyc.size(); ++c) {
            // the bar on a point records the sign of the map arriving at it
            int prev = cyc[(c + cyc.size() - 1) % cyc.size()];
            if (c) out += ' ';
            if (sign(prev) < 0) out += '-';
            out += name(cyc[c]);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

// ---------------------------------------------------------------- group data

namespace {

long label_order(const std::string& label) {
    std::size_t i = 0;
    while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i]))) ++i;
    if (i == 0) throw DataCorrupt("class label without order: " + label);
    return std::stol(label.substr(0, i));
}

int point_count(long ell) {
    switch (ell) {
        case 3: return 12;
        case 4: return 8;
        case 5: return 6;
        case 7: return 4;
        case 13: return 2;
        default: throw OutOfRange("no signed permutation presentation at lambency " + std::to_string(ell));
    }
}

struct EulerEntry {
    std::string label;
    FrameShape pi, pibar;
    long chi = 0, chibar = 0;
    long n = 0, h = 0;
};

std::pair<long, long> parse_gamma(const std::string& text) {
    auto bar = text.find('|');
    if (bar == std::string::npos) return {std::stol(text), 1};
    return {std::stol(text.substr(0, bar)), std::stol(text.substr(bar + 1))};
}

std::vector<EulerEntry> euler_table(long ell) {
    const auto& doc = load_json("groups/ell" + std::to_string(ell) + ".json");
    std::vector<EulerEntry> out;
    try {
        for (const auto& c : doc.at("classes")) {
            EulerEntry e;
            e.label = c.at("label").get<std::string>();
            e.pi = FrameShape::parse(c.at("pi").get<std::string>());
            e.pibar = FrameShape::parse(c.at("pibar").get<std::string>());
            e.chi = c.at("chi").get<long>();
            e.chibar = c.at("chibar").get<long>();
            std::tie(e.n, e.h) = parse_gamma(c.at("gamma").get<std::string>());
            out.push_back(std::move(e));
        }
    } catch (const nlohmann::json::exception& e) {
        throw DataCorrupt("Euler table " + std::to_string(ell) + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw DataCorrupt("Euler table " + std::to_string(ell) + ": " + e.what());
    }
    return out;
}

void enumerate(GroupData& g, std::size_t bound) {
    SignedPerm e = SignedPerm::identity(g.degree);
    g.elements.push_back(e);
    g.index.emplace(e.key(), 0);
    for (std::size_t head = 0; head < g.elements.size(); ++head) {
        for (const auto& s : g.generators) {
            SignedPerm x = s * g.elements[head];
            if (g.index.emplace(x.key(), g.elements.size()).second) {
                g.elements.push_back(x);
                if (g.elements.size() > bound)
                    throw ClosureOverflow("more than " + std::to_string(bound) + " elements at lambency " +
                                          std::to_string(g.lambency));
            }
        }
    }
    g.order = static_cast<long>(g.elements.size());
}

void split_classes(GroupData& g) {
    g.class_of.assign(g.elements.size(), -1);
    std::vector<SignedPerm> inv;
    for (const auto& s : g.generators) inv.push_back(s.inverse());
    for (std::size_t i = 0; i < g.elements.size(); ++i) {
        if (g.class_of[i] >= 0) continue;
        int c = static_cast<int>(g.classes.size());
        ClassInfo info;
        info.rep = g.elements[i];
        std::deque<std::size_t> queue{i};
        g.class_of[i] = c;
        long size = 0;
        while (!queue.empty()) {
            std::size_t x = queue.front();
            queue.pop_front();
            ++size;
            for (std::size_t k = 0; k < g.generators.size(); ++k) {
                SignedPerm y = g.generators[k] * g.elements[x] * inv[k];
                std::size_t j = g.index.at(y.key());
                if (g.class_of[j] < 0) {
                    g.class_of[j] = c;
                    queue.push_back(j);
                }
            }
        }
        info.size = size;
        info.order = info.rep.order();
        info.pi = info.rep.frame_shape();
        info.pibar = info.rep.unsigned_shape();
        info.pitilde = info.rep.total_shape();
        info.chi = info.rep.chi();
        info.chibar = info.rep.chibar();
        std::tie(info.n, info.h) = gamma_symbol(g.lambency, info.rep);
        g.classes.push_back(std::move(info));
    }
}

// Match computed classes to the character-table columns using order, class
// size, Frame shapes and power maps; backtracks over indistinguishable
// candidates.
void label_classes(GroupData& g) {
    const auto& table = character_table(g.lambency);
    const auto euler = euler_table(g.lambency);
    const std::size_t k = table.classes.size();
    if (k != g.classes.size()) {
        g.labelling_problem = "generated " + std::to_string(g.classes.size()) + " classes, table has " +
                              std::to_string(k);
        return;
    }
    if (table.group_order() != g.order) {
        g.labelling_problem = "generated order " + std::to_string(g.order) + ", table order " +
                              std::to_string(table.group_order());
        return;
    }
    std::vector<long> primes;
    for (const auto& [p, row] : table.power_maps) primes.push_back(p);
    // power-map images as computed class indices
    std::vector<std::map<long, std::size_t>> images(k);
    for (std::size_t c = 0; c < k; ++c)
        for (long p : primes) images[c][p] = static_cast<std::size_t>(g.class_of_element(g.classes[c].rep.pow(p)));

    std::vector<std::vector<std::size_t>> candidates(k);
    std::vector<std::string> merged(k);
    for (std::size_t t = 0; t < k; ++t) {
        const std::string& lab = table.classes[t];
        const EulerEntry* entry = nullptr;
        for (const auto& e : euler) {
            auto parts = split_label(e.label);
            if (std::find(parts.begin(), parts.end(), lab) != parts.end()) entry = &e;
        }
        if (!entry) {
            g.labelling_problem = "class " + lab + " missing from the Euler table";
            return;
        }
        merged[t] = entry->label;
        long size = g.order / table.centralizers[t];
        for (std::size_t c = 0; c < k; ++c) {
            const auto& ci = g.classes[c];
            if (ci.order == label_order(lab) && ci.size == size && ci.pi == entry->pi && ci.pibar == entry->pibar)
                candidates[t].push_back(c);
        }
    }

    std::vector<long> assign(k, -1);      // table column -> computed class
    std::vector<long> owner(k, -1);       // computed class -> table column
    std::function<bool(std::size_t)> search = [&](std::size_t t) -> bool {
        if (t == k) return true;
        for (std::size_t c : candidates[t]) {
            if (owner[c] >= 0) continue;
            assign[t] = static_cast<long>(c);
            owner[c] = static_cast<long>(t);
            bool ok = true;
            // every power map between assigned columns must agree
            for (std::size_t u = 0; u <= t && ok; ++u) {
                for (long p : primes) {
                    std::size_t img = images[static_cast<std::size_t>(assign[u])][p];
                    std::size_t want = table.class_index(table.power_maps.at(p)[u]);
                    if (owner[img] >= 0 && static_cast<std::size_t>(owner[img]) != want) { ok = false; break; }
                    if (assign[want] >= 0 && static_cast<std::size_t>(assign[want]) != img) { ok = false; break; }
                }
            }
            if (ok && search(t + 1)) return true;
            assign[t] = -1;
            owner[c] = -1;
        }
        return false;
    };
    if (!search(0)) {
        g.labelling_problem = "no labelling of the generated classes matches the character table";
        return;
    }
    std::vector<ClassInfo> ordered;
    std::vector<int> remap(k);
    for (std::size_t t = 0; t < k; ++t) {
        ClassInfo ci = g.classes[static_cast<std::size_t>(assign[t])];
        ci.label = table.classes[t];
        ci.table_label = merged[t];
        remap[static_cast<std::size_t>(assign[t])] = static_cast<int>(t);
        ordered.push_back(std::move(ci));
    }
    for (auto& c : g.class_of) c = remap[static_cast<std::size_t>(c)];
    g.classes = std::move(ordered);
    SignedPerm z = g.central_z();
    bool has_z = g.index.count(z.key()) > 0;
    for (auto& ci : g.classes) {
        for (long p : primes) ci.power_maps[p] = g.classes[g.class_of_element(ci.rep.pow(p))].label;
        if (has_z) ci.paired = g.classes[g.class_of_element(z * ci.rep)].label;
    }
}

}  // namespace

const ClassInfo& GroupData::cls(const std::string& label) const {
    auto i = class_index(label);
    if (!i) throw UnknownClass("no class " + label + " at lambency " + std::to_string(lambency));
    return classes[*i];
}

std::optional<std::size_t> GroupData::class_index(const std::string& label) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i].label == label) return i;
    return std::nullopt;
}

std::size_t GroupData::class_of_element(const SignedPerm& g) const {
    auto it = index.find(g.key());
    if (it == index.end()) throw NotInGroup("element not in the group at lambency " + std::to_string(lambency));
    return static_cast<std::size_t>(class_of[it->second]);
}

SignedPerm GroupData::central_z() const {
    std::vector<int> target(static_cast<std::size_t>(degree)), sign(static_cast<std::size_t>(degree), -1);
    std::iota(target.begin(), target.end(), 0);
    return SignedPerm::from_images(target, sign);
}

std::vector<std::string> point_labels(long ell) {
    const int n = point_count(ell);
    std::vector<std::string> out{"oo"};
    for (int i = 0; i + 1 < n; ++i) out.push_back(i == 10 ? "X" : std::to_string(i));
    return out;
}

std::vector<std::string> generator_texts(long ell) {
    switch (ell) {
        case 3: return {"(oo 6)(-2 -X)(3 5)(-7 -8)", "(0 1 2 3 4 5 6 7 8 9 X)"};
        case 4: return {"(oo 5)(-0)(-1)(2 4)", "(0 1 2 3 4 5 6)"};
        case 5: return {"(oo -0)(3 -1)(2 -4)", "(0 1 2 3 4)"};
        case 7: return {"(oo -0)(-1 2)", "(0 1 2)"};
        case 13: return {"(oo -0)"};
        default: throw OutOfRange("no signed permutation presentation at lambency " + std::to_string(ell));
    }
}

std::pair<long, long> gamma_symbol(long ell, const SignedPerm& g) {
    const FrameShape total = g.total_shape();
    const auto& f = total.factors();
    long big = f.rbegin()->first * f.begin()->first;
    long n = 1;
    for (const auto& c : signed_cycles(g)) n = lcm_long(n, c.first);
    long h = big / n;
    if (ell == 4 && g.order() == 2 * n) h = big / (2 * n);
    return {n, h};
}

GroupData generate_uncached(long ell, std::size_t bound) {
    GroupData g;
    g.lambency = ell;
    g.degree = point_count(ell);
    g.point_labels = point_labels(ell);
    for (const auto& text : generator_texts(ell)) g.generators.push_back(SignedPerm::parse(text, g.point_labels));
    enumerate(g, bound);
    split_classes(g);
    label_classes(g);
    return g;
}

const GroupData& generate(long ell, std::size_t bound) {
    static std::mutex m;
    static std::map<long, std::unique_ptr<GroupData>> cache;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(ell);
    if (it == cache.end()) it = cache.emplace(ell, std::make_unique<GroupData>(generate_uncached(ell, bound))).first;
    return *it->second;
}

std::set<std::string> squared_class_set(long ell, const std::string& label) {
    const GroupData& g = generate(ell);
    std::size_t t = g.class_of_element(g.cls(label).rep);
    const SignedPerm& g0 = g.classes[t].rep;
    std::set<std::string> out;
    for (std::size_t i = 0; i < g.elements.size(); ++i)
        if (static_cast<std::size_t>(g.class_of[i]) == t) out.insert(g.classes[g.class_of_element(g0 * g.elements[i])].label);
    return out;
}

long shuffle_group(long n) {
    if (n <= 0 || 12 % n != 0) throw OutOfRange("shuffle groups need n dividing 12, got " + std::to_string(n));
    const int d = static_cast<int>(n);
    std::vector<int> r(static_cast<std::size_t>(d)), s(static_cast<std::size_t>(d)), plus(static_cast<std::size_t>(d), 1);
    for (int t = 0; t < d; ++t) {
        r[static_cast<std::size_t>(t)] = d - 1 - t;
        s[static_cast<std::size_t>(t)] = std::min(2 * t, 2 * d - 1 - 2 * t);
    }
    std::vector<SignedPerm> gens{SignedPerm::from_images(r, plus), SignedPerm::from_images(s, plus)};
    std::vector<SignedPerm> elems{SignedPerm::identity(d)};
    std::unordered_map<std::uint64_t, bool> seen{{elems[0].key(), true}};
    for (std::size_t head = 0; head < elems.size(); ++head)
        for (const auto& x : gens) {
            SignedPerm y = x * elems[head];
            if (seen.emplace(y.key(), true).second) elems.push_back(y);
        }
    return static_cast<long>(elems.size());
}

std::vector<M24Class> m24_classes() {
    const auto& doc = load_json("groups/m24.json");
    std::vector<M24Class> out;
    try {
        for (const auto& c : doc.at("classes")) {
            M24Class m;
            m.label = c.at("label").get<std::string>();
            m.order = label_order(m.label);
            m.pi = FrameShape::parse(c.at("pi").get<std::string>());
            m.chi = c.at("chi").get<long>();
            m.gamma = c.at("gamma").get<std::string>();
            out.push_back(std::move(m));
        }
    } catch (const nlohmann::json::exception& e) {
        throw DataCorrupt(std::string("M24 class data: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw DataCorrupt(std::string("M24 class data: ") + e.what());
    }
    return out;
}

BridgeReport check_ell4_to_ell2() {
    const GroupData& g = generate(4);
    const auto m24 = m24_classes();
    BridgeReport rep;
    rep.pass = true;
    for (const auto& c : g.classes) {
        if (!c.pi.is_cycle_shape() || c.label == "4B") continue;
        std::map<long, long> f = c.pibar.factors();
        for (const auto& [k, m] : c.pi.factors()) f[2 * k] += m;
        FrameShape want(f);
        const M24Class* hit = nullptr;
        for (const auto& m : m24)
            if (m.pi == want && m.order == 2 * c.order) hit = &m;
        if (hit) {
            rep.lines.push_back(c.label + " -> " + hit->label + " (" + want.to_string() + ")");
        } else {
            rep.pass = false;
            rep.lines.push_back(c.label + " -> none (" + want.to_string() + ")");
        }
    }
    return rep;
}

GroupCheck verify_group(long ell) {
    GroupCheck out;
    const GroupData& g = generate(ell);
    auto fail = [&](const std::string& what) { out.problems.push_back(what); };
    if (!g.labelling_problem.empty()) fail(g.labelling_problem);
    long total = 0;
    for (const auto& c : g.classes) {
        total += c.size;
        if (g.order % c.size != 0) fail("class " + c.label + " size does not divide the order");
    }
    if (total != g.order) fail("class sizes do not sum to the order");
    for (std::size_t i = 0; i < g.elements.size(); ++i) {
        const auto& x = g.elements[i];
        if (!(x.total_shape() == x.frame_shape() * x.unsigned_shape()))
            fail("total shape differs from the product for " + x.to_string(g.point_labels));
        if (x.chi() != x.frame_shape().exponent(1) || x.chibar() != x.unsigned_shape().exponent(1))
            fail("Euler character differs from the Frame shape for " + x.to_string(g.point_labels));
        if (out.problems.size() > 20) break;
    }
    if (g.labelling_problem.empty()) {
        for (const auto& e : euler_table(ell)) {
            for (const auto& lab : split_label(e.label)) {
                auto idx = g.class_index(lab);
                if (!idx) {
                    fail("no generated class " + lab);
                    continue;
                }
                const auto& c = g.classes[*idx];
                if (!(c.pi == e.pi)) fail(lab + " Pi " + c.pi.to_string() + " vs " + e.pi.to_string());
                if (!(c.pibar == e.pibar)) fail(lab + " Pibar " + c.pibar.to_string() + " vs " + e.pibar.to_string());
                if (c.chi != e.chi) fail(lab + " chi " + std::to_string(c.chi) + " vs " + std::to_string(e.chi));
                if (c.chibar != e.chibar)
                    fail(lab + " chibar " + std::to_string(c.chibar) + " vs " + std::to_string(e.chibar));
                if (c.n != e.n || c.h != e.h)
                    fail(lab + " gamma " + std::to_string(c.n) + "|" + std::to_string(c.h) + " vs " +
                         std::to_string(e.n) + "|" + std::to_string(e.h));
            }
        }
        for (const auto& c : g.classes) {
            if (c.paired.empty()) continue;
            if (g.cls(c.paired).paired != c.label) fail("pairing is not an involution at " + c.label);
        }
    }
    out.pass = out.problems.empty();
    return out;
}

}  // namespace umbral
