#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace wreathhom {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(std::uint64_t n);

/// n (n-1) ... (n-k+1); equals 1 for k = 0.
BigInt falling_factorial(std::uint64_t n, std::uint64_t k);

std::string to_decimal(const BigInt &value);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational &value);

/// Accepts "p", "-p" or "p/q"; the result is canonicalized.
Rational parse_rational(const std::string &text);

BigInt parse_bigint(const std::string &text);

/// Natural logarithm of a positive rational, accurate for magnitudes far
/// outside the range of double.
double log_of(const Rational &value);
double log_of(const BigInt &value);

bool is_integer(const Rational &value);

}  // namespace wreathhom
