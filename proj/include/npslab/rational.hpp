#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace nps {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(unsigned n);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n, or n < 0.
BigInt binomial(long n, long k);

/// H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0.
Rational harmonic(unsigned n);

/// Rising factorial (x)_k; equals 1 for k = 0.
Rational pochhammer_rising(const Rational& x, unsigned k);

/// 2^e as a rational, e may be negative.
Rational pow2(long e);

/// "p/q" for non-integers, "p" for integers.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Parses "p", "p/q", or a finite decimal such as "-0.125".
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);

}  // namespace nps
