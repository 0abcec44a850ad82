#include "wreathhom/bigint.hpp"

#include <cmath>

#include "wreathhom/error.hpp"

namespace wreathhom {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedTable: return "malformed table";
    case ErrorKind::NoIdentity: return "no identity";
    case ErrorKind::NoInverse: return "no inverse";
    case ErrorKind::NotAssociative: return "not associative";
    case ErrorKind::InvalidPermutation: return "invalid permutation";
    case ErrorKind::InvalidAbelianGroup: return "invalid abelian group";
    case ErrorKind::InvalidSpec: return "invalid spec";
    case ErrorKind::UnknownBuiltin: return "unknown builtin";
    case ErrorKind::CapExceeded: return "cap exceeded";
    case ErrorKind::IntegralityViolation: return "integrality violation";
    case ErrorKind::InvalidArgument: return "invalid argument";
  }
  return "unknown";
}

BigInt factorial(std::uint64_t n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt falling_factorial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt out = 1;
  for (std::uint64_t i = 0; i < k; ++i) out *= n - i;
  return out;
}

std::string to_decimal(const BigInt &value) { return value.get_str(10); }

std::string to_string(const Rational &value) { return value.get_str(10); }

BigInt parse_bigint(const std::string &text) {
  BigInt out;
  if (text.empty() || out.set_str(text, 10) != 0)
    throw Error(ErrorKind::InvalidArgument, "not an integer: '" + text + "'");
  return out;
}

Rational parse_rational(const std::string &text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0)
    throw Error(ErrorKind::InvalidArgument, "zero denominator: '" + text + "'");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

double log_of(const BigInt &value) {
  if (value <= 0)
    throw Error(ErrorKind::InvalidArgument, "logarithm of a non-positive number");
  long exponent = 0;
  double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

double log_of(const Rational &value) {
  return log_of(BigInt(value.get_num())) - log_of(BigInt(value.get_den()));
}

bool is_integer(const Rational &value) { return value.get_den() == 1; }

}  // namespace wreathhom
