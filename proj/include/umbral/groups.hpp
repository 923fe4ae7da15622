#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace umbral {

// Formal product prod k^m(k) with integer (possibly negative) exponents.
class FrameShape {
public:
    FrameShape() = default;
    explicit FrameShape(std::map<long, long> factors);

    // "1^4 2^4", "2^12/1^12"
    static FrameShape parse(const std::string& text);
    std::string to_string() const;

    const std::map<long, long>& factors() const { return f_; }
    long exponent(long k) const;
    bool is_cycle_shape() const;
    long degree() const;  // sum k m(k)

    friend FrameShape operator*(const FrameShape& a, const FrameShape& b);
    friend bool operator==(const FrameShape& a, const FrameShape& b) = default;
    friend bool operator<(const FrameShape& a, const FrameShape& b) { return a.f_ < b.f_; }

private:
    std::map<long, long> f_;
};

// Signed permutation of e_0..e_{n-1}: e_i -> sign(i) e_{target(i)}.
class SignedPerm {
public:
    SignedPerm() = default;
    static SignedPerm identity(int n);
    static SignedPerm from_images(const std::vector<int>& target, const std::vector<int>& sign);
    // signed cycle notation over the given point labels, a leading '-' marking a bar;
    // e.g. "(oo 6)(-2 -X)(3 5)(-7 -8)" with labels {oo,0,...,9,X}
    static SignedPerm parse(const std::string& text, const std::vector<std::string>& labels);

    int degree() const { return static_cast<int>(img_.size()); }
    int target(int i) const { return img_[static_cast<std::size_t>(i)] >> 1; }
    int sign(int i) const { return (img_[static_cast<std::size_t>(i)] & 1) ? -1 : 1; }

    // (a * b)(v) = a(b(v))
    friend SignedPerm operator*(const SignedPerm& a, const SignedPerm& b);
    SignedPerm inverse() const;
    SignedPerm pow(long k) const;
    long order() const;
    bool is_identity() const;
    // underlying permutation
    std::vector<int> unsigned_image() const;

    // packed representation (degree <= 12)
    std::uint64_t key() const;
    friend bool operator==(const SignedPerm& a, const SignedPerm& b) = default;

    // signed Frame shape, unsigned cycle shape and the cycle shape on the 2n points +-e_i
    FrameShape frame_shape() const;
    FrameShape unsigned_shape() const;
    FrameShape total_shape() const;
    // fixed minus anti-fixed points; their sum
    long chi() const;
    long chibar() const;

    std::string to_string(const std::vector<std::string>& labels) const;

private:
    std::vector<std::uint8_t> img_;
};

struct ClassInfo {
    std::string label;        // individual label of the character table
    std::string table_label;  // label in the Euler-character table, possibly merged (8AB)
    SignedPerm rep;
    long size = 0;
    long order = 0;
    FrameShape pi, pibar, pitilde;
    long chi = 0, chibar = 0;
    long n = 0, h = 0;
    std::map<long, std::string> power_maps;
    std::string paired;  // class of z g
};

struct GroupData {
    long lambency = 0;
    long order = 0;
    int degree = 0;
    std::vector<std::string> point_labels;
    std::vector<SignedPerm> generators;
    std::vector<ClassInfo> classes;
    std::vector<SignedPerm> elements;
    std::vector<int> class_of;  // class index per element
    std::unordered_map<std::uint64_t, std::size_t> index;  // element key -> position
    std::string labelling_problem;  // empty when every class matched the stored tables

    const ClassInfo& cls(const std::string& label) const;  // UnknownClass
    std::optional<std::size_t> class_index(const std::string& label) const;
    std::size_t class_of_element(const SignedPerm& g) const;  // NotInGroup
    SignedPerm central_z() const;
};

// point labels oo, 0, ..., n-2 (X for 10)
std::vector<std::string> point_labels(long ell);
std::vector<std::string> generator_texts(long ell);

// enumerate G^(l) for l in {3,4,5,7,13} and label its classes against the stored tables
const GroupData& generate(long ell, std::size_t bound = 1000000);
GroupData generate_uncached(long ell, std::size_t bound = 1000000);

// n_g | h_g from the total shape, the order of the underlying permutation and the l=4 non-split rule
std::pair<long, long> gamma_symbol(long ell, const SignedPerm& g);

// classes hit by g0 h for h running over the class T, g0 a fixed element of T
std::set<std::string> squared_class_set(long ell, const std::string& cls);

// order of the group generated by the reverse and Mongean shuffles of n cards
long shuffle_group(long n);

// stored M24 class data
struct M24Class {
    std::string label;
    long order = 0;
    FrameShape pi;
    long chi = 0;
    std::string gamma;
};
std::vector<M24Class> m24_classes();

struct BridgeReport {
    bool pass = false;
    std::vector<std::string> lines;  // "3A -> 6A (1^2 2^2 3^2 6^2)" and failures
};
BridgeReport check_ell4_to_ell2();

struct GroupCheck {
    bool pass = false;
    std::vector<std::string> problems;
};
// generated invariants against the stored Euler-character table, plus the Pi~ = Pi Pibar identity
GroupCheck verify_group(long ell);

}  // namespace umbral
