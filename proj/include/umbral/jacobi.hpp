#pragma once

#include "umbral/fracseries.hpp"
#include "umbral/windowed.hpp"

#include <optional>
#include <string>
#include <vector>

namespace umbral {

// theta_1 is stored without its leading unit -i, as
// sum_n (-1)^n q^((n+1/2)^2/2) y^(n+1/2); even powers agree with the true theta_1.
WindowedSeries jacobi_theta(int i, FracExponent qcutoff);

// sum_n q^((2mn+r)^2/4m) y^(2mn+r)
WindowedSeries index_theta(long m, long r, FracExponent qcutoff);
// theta_{-r} - theta_r
WindowedSeries hat_theta(long m, long r, FracExponent qcutoff);

// weak Jacobi form phi^(m)_n of weight 0 and index m-1, for 2 <= m <= 25, 1 <= n <= m-1
WindowedSeries gritsenko(long m, long n, FracExponent qcutoff);

bool is_lambent(long ell);
// Z^(l) = 2 phi^(l)_1
WindowedSeries umbral_Z(long ell, FracExponent qcutoff);
// chi^(l) = Z^(l)(tau, 0)
long umbral_chi(long ell);

// theta_1^12 / eta^12, weight 0 index 6
WindowedSeries zeta_form(FracExponent qcutoff);

// Psi_{1,1} expanded in the given annulus, known for |k| <= window
WindowedSeries psi_one_one(FracExponent qcutoff, long window, Annulus annulus = Annulus::Inner);

// mu^(m)_j for j = twoj/2, known for |k| <= window
WindowedSeries appell_mu(long m, long twoj, FracExponent qcutoff, long window, Annulus annulus = Annulus::Inner);

struct HVector {
    long lambency = 0;
    std::vector<FracSeries> components;  // components[r-1] = H_r

    const FracSeries& operator[](long r) const { return components.at(static_cast<std::size_t>(r - 1)); }
};

// theta coefficients h_r of the finite part of Psi_{1,1} phi for a weak Jacobi form phi of index m-1.
// The y^r rows of the finite part are needed below q^qcutoff; h_r is then known below qcutoff - r^2/4m.
HVector theta_decompose(const WindowedSeries& phi, long m, FracExponent qcutoff, Annulus annulus = Annulus::Inner);

HVector extract_H(long ell, FracExponent qcutoff, Annulus annulus = Annulus::Inner);

struct ExtremalReport {
    bool pass = false;
    FracExponent polar_exponent;
    Rational polar_coefficient;
    std::vector<std::string> problems;
};
ExtremalReport verify_extremal(long ell, FracExponent qcutoff = FracExponent(4));

struct ExtremalDimension {
    long m = 0;
    long unknowns = 0;
    long equations = 0;
    long rank = 0;
    long dimension = 0;
    long nmax = 0;
};
// dimension of the space of extremal forms in the span of phi^(m)_1 and zeta^i phi^(m-6i)_j,
// testing the conditions at q-orders 0..nmax; by default every polar order, and at least 4
ExtremalDimension extremal_space_dim(long m, std::optional<long> nmax = std::nullopt);

struct IdentityReport {
    bool pass = false;
    std::string first_residual;  // empty when the residual vanishes
};
// Psi_{1,1} Z - chi mu_0 - sum_r H_r hat_theta_r = 0 inside q < qcutoff, |k| <= window
IdentityReport verify_n4_identity(long ell, FracExponent qcutoff = FracExponent(10), long window = 12);

}  // namespace umbral
