#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace umbral {

// GMP keeps mpq_class canonical (lowest terms, positive denominator) after
// every arithmetic operation; only raw construction needs canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

// Accepts "a", "a/b", with optional sign.
Rational parse_rational(const std::string& text);

// "a/b" with b > 0, always including the denominator.
std::string rational_string(const Rational& r);

// "a" when integral, "a/b" otherwise.
std::string rational_short(const Rational& r);

bool is_integer(const Rational& r);

std::int64_t lcm64(std::int64_t a, std::int64_t b);
std::int64_t gcd64(std::int64_t a, std::int64_t b);

// floor / ceiling division for signed integers with positive divisor
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);
std::int64_t mod_pos(std::int64_t a, std::int64_t b);

}  // namespace umbral
