#pragma once

#include "umbral/catalog.hpp"
#include "umbral/fracseries.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace umbral {

// One term of a weight two form: coeff * block, where block is Lambda_N(arg tau),
// a newform f(arg tau), an eta quotient, or e(1/4) F2_h(tau + 1) for another class h.
struct Weight2Term {
    enum class Kind { Lambda, Newform, Eta, Twist };
    Kind kind = Kind::Lambda;
    Rational coeff;
    long level = 0;     // Lambda
    std::string label;  // newform label or the twisted class
    Rational arg = 1;   // Lambda and newform
    std::vector<EtaFactor> eta;
};

// variant F: sum_r Hhat_r S_r; F2: sum_r (-1)^(r+1) Hhat_r S_(l-r);
// R2: S_2 Hhat_2 alone, used at lambency four
struct Weight2Formula {
    long lambency = 0;
    std::string cls;
    std::string variant;
    std::vector<Weight2Term> terms;
    std::vector<std::vector<Weight2Term>> alternatives;
};

const std::vector<Weight2Formula>& weight2_catalog();
// nullptr when the catalog has no such record
const Weight2Formula* find_weight2(long ell, const std::string& cls, const std::string& variant);

FracSeries evaluate_terms(long ell, const std::string& variant, const std::vector<Weight2Term>& terms,
                          FracExponent cutoff);
// UnknownClass when the catalog has no record; the result may stop short of
// the cutoff when a block is only stored to a finite depth (f44)
FracSeries weight2(long ell, const std::string& cls, const std::string& variant, FracExponent cutoff);

// class labels as they head the coefficient tables, merged where the tables merge them
std::vector<std::string> column_labels(long ell);
// the column containing a class, "8A" -> "8AB"; UnknownClass
std::string column_label(long ell, const std::string& cls);
// column of zg
std::string paired_column(long ell, const std::string& column);

struct TwistedH {
    long lambency = 0;
    std::string label;  // column label
    std::vector<FracSeries> components;
    long chi = 0;
    long chibar = 0;
    long n = 1;
    long h = 1;
    std::string source;  // "weight2", "jacobi", "stored"
    std::optional<FracExponent> cap;  // set when a stored block stops the expansion early

    const FracSeries& operator[](long r) const { return components.at(static_cast<std::size_t>(r - 1)); }
    // chi for even r, chibar for odd r
    long chi_r(long r) const { return r % 2 == 0 ? chi : chibar; }
};

TwistedH twisted_H(long ell, const std::string& cls, FracExponent qcutoff);
// the coefficient table columns as series, exact below the deepest tabulated row
TwistedH stored_H(long ell, const std::string& cls);

struct ColumnCheck {
    bool pass = false;
    long rows_checked = 0;
    long rows_beyond = 0;  // tabulated rows past the computed depth
    std::vector<std::string> problems;
};
// every tabulated coefficient below the series cutoff, and no untabulated terms
ColumnCheck compare_with_table(const TwistedH& H);

// a whole-number cutoff above every tabulated row at this lambency
FracExponent table_cutoff(long ell);

struct TableVerification {
    struct Column {
        std::string label;
        std::string source;    // "extract" for the identity class from the Jacobi form, else as in TwistedH
        bool checked = false;  // false for columns that are read from the tables themselves
        ColumnCheck check;
        std::optional<FracExponent> cap;
    };
    long lambency = 0;
    bool pass = false;
    std::vector<Column> columns;
};
// extract_H against the identity column, then twisted_H against every column it constructs,
// each to table_cutoff; columns run on up to jobs threads
TableVerification verify_tables(long ell, unsigned jobs = 1);

struct ConsistencyReport {
    bool pass = false;
    bool cataloged = false;
    std::vector<std::string> variants;  // checked variants
    FracExponent order;                  // smallest common order compared
    std::vector<std::string> problems;   // with the first differing exponent
};
// Hhat_r = H_r - (chi_r / chi) H_(1A),r against the cataloged weight two forms;
// uses the stored tables unless computed is set
ConsistencyReport verify_F_consistency(long ell, const std::string& cls, bool computed = false,
                                       FracExponent qcutoff = FracExponent(20));

struct MockIdentity {
    std::string id;
    long lambency = 0;
    std::string text;
};
const std::vector<MockIdentity>& mock_identities();

struct IdentityCheck {
    std::string id;
    bool pass = false;
    FracExponent order;  // exact agreement below q^order
    std::string detail;
};
// every side of the identity agrees below q^order; UnknownClass for an unknown id
IdentityCheck mock_identity_check(const std::string& id, long order = 20);

// a monomial matrix: entries[i][j] is e(x) for x in [0,1), or empty for zero
struct UnitMatrix {
    std::vector<std::vector<std::optional<Rational>>> entries;

    static UnitMatrix identity(long size);
    static UnitMatrix scalar(long size, const Rational& x);
    long size() const { return static_cast<long>(entries.size()); }
    UnitMatrix pow(long k) const;
    friend UnitMatrix operator*(const UnitMatrix& a, const UnitMatrix& b);
    friend bool operator==(const UnitMatrix& a, const UnitMatrix& b) = default;
    std::string to_string() const;
};
UnitMatrix j_matrix(long size);
UnitMatrix k_matrix(long size);
long admissible_v(long ell);
// gamma = {a, b, c, d}; NotInGroup unless ad - bc = 1 and n | c
UnitMatrix multiplier_rho(long ell, long n, long h, const std::array<long, 4>& gamma);

struct PairingReport {
    std::string paired;
    bool self_paired = false;
    // per component: +1 if H_zg,r = H_g,r, -1 if H_zg,r = -H_g,r, 2 if both (zero), 0 if neither
    std::vector<int> signs;
    bool odd_equal_even_flip = false;  // H_zg,r = (-1)^(r+1) H_g,r
    bool sign_minus_one_to_r = false;  // H_zg,r = (-1)^r H_g,r
};
// signs compared on the stored tables unless computed is set
PairingReport pairing(long ell, const std::string& cls, bool computed = false,
                      FracExponent qcutoff = FracExponent(20));

}  // namespace umbral
