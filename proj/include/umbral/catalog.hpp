#pragma once

#include "umbral/fracseries.hpp"

#include <string>
#include <utility>
#include <vector>

namespace umbral {

// One factor eta(k tau)^m of an eta quotient; k may be fractional (tau/2).
struct EtaFactor {
    Rational scale;
    long power;
};

FracSeries eta(FracExponent cutoff);
FracSeries eta_quotient(const std::vector<EtaFactor>& spec, FracExponent cutoff);
// parse "1^2 11^2" or "1^8 1/2^-4": scale^power, space separated
std::vector<EtaFactor> parse_eta_spec(const std::string& text);

// epsilon(a,b,c,d) = e(k/24); returns k in [0,24)
int dedekind_epsilon(long a, long b, long c, long d);

// weight two Eisenstein form on Gamma_0(N)
FracSeries lambda(long N, FracExponent cutoff);

// f11, f14, f15, f20, f23a, f23b, f44
FracSeries newform(const std::string& label, FracExponent cutoff);

// S^(m)_r = sum_n (2mn+r) q^((2mn+r)^2/4m)
FracSeries unary_theta(long m, long r, FracExponent cutoff);

// f, phi, chi, omega, rho, mu, U0, U1, S0, S1, T0, T1, phi10, psi10, X, chi10
FracSeries mock_theta(const std::string& label, long cutoff);
std::vector<std::string> mock_theta_labels();

// (s q^e; q^step)_n with s = +1 or -1
FracSeries q_pochhammer(int sign, long e, long step, long n, long cutoff);

long divisor_sigma(long n);

}  // namespace umbral
