#pragma once

#include "umbral/quad.hpp"
#include "umbral/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace umbral {

struct CharacterTable {
    long lambency = 0;
    std::vector<std::string> classes;
    std::vector<long> centralizers;  // column norms of the table
    std::map<long, std::vector<std::string>> power_maps;
    std::vector<int> fs;
    std::vector<std::vector<QuadValue>> values;  // irreducibles x classes

    long group_order() const { return centralizers.empty() ? 0 : centralizers.front(); }
    std::size_t class_index(const std::string& label) const;  // UnknownClass
    long degree(std::size_t irr) const;
    // columns of the table that a possibly merged label (8AB) stands for
    std::vector<std::size_t> expand(const std::string& label) const;
};

// ell in {2,3,4,5,7,13}; DataCorrupt if the stored table is malformed
const CharacterTable& character_table(long ell);

// "8AB" -> {"8A", "8B"}; "2B" -> {"2B"}
std::vector<std::string> split_label(const std::string& label);

struct TableCheck {
    bool pass = false;
    std::vector<std::string> problems;
};
// row and column orthogonality, power maps and FS indicators against non-real values
TableCheck validate_table(long ell);

// stored coefficients c_{g,r}(d) keyed by 4 ell d, one value per column label (possibly merged)
struct CoefficientTable {
    long lambency = 0;
    long r = 0;
    std::vector<std::string> columns;
    std::vector<std::string> gamma;
    std::vector<std::pair<long, std::vector<Integer>>> rows;

    const std::vector<Integer>* row(long d4l) const;
    // values per character-table class, merged columns duplicated
    std::vector<Integer> per_class(const std::vector<Integer>& values) const;
};
const CoefficientTable& coefficient_table(long ell, long r);

struct Multiplicities {
    long lambency = 0;
    long r = 0;
    long d4l = 0;                 // 4 ell d
    std::vector<Rational> counts;  // one per irreducible
    bool integral = false;
    bool nonnegative = false;

    bool doublet() const;  // every count even and some count nonzero
    // "chi3 + chi4", "2 chi1", "-2 chi1"
    std::string to_string() const;
};

// m_i = sum_K conj(chi_i(K)) c_K / |C(K)| over the classes of the character table
Multiplicities decompose(long ell, long r, long d4l, const std::vector<Integer>& per_class);
std::vector<Integer> recompose(const Multiplicities& m);

struct DecompositionReport {
    bool pass = false;
    long rows_checked = 0;
    std::vector<std::string> problems;
};
// every stored decomposition row, integrality, and the parity rule on faithful irreducibles
DecompositionReport verify_decomposition_tables(long ell);

struct DiscriminantReport {
    bool pass = false;
    std::vector<long> type_n;       // computed from element orders and discriminants
    std::vector<long> expected_n;   // stored table
    std::vector<std::pair<long, long>> pairs;  // FS-zero irreducibles paired by conjugation
    std::vector<std::string> lines;
    std::vector<std::string> problems;
    std::vector<std::string> counterexamples;  // doublet rule failures beyond the listed samples
};
// depth bounds -D = 4 ell d; defaults to everything tabulated
DiscriminantReport discriminant_report(long ell, std::optional<long> depth = std::nullopt);

// faithful irreducibles vanish on self-paired classes; needs the generated group
TableCheck check_self_paired(long ell);

}  // namespace umbral
