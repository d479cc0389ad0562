#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace guhecke {

/// Exact rational number backed by GMP. Always kept in canonical form.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r{Integer{static_cast<long>(num)}, Integer{static_cast<long>(den)}};
  r.canonicalize();
  return r;
}

/// "3/2", "-1", "0".
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "a" or "a/b"; throws std::invalid_argument on malformed input.
inline Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

/// r^e for a signed exponent; r must be nonzero when e < 0.
inline Rational pow(const Rational& base, std::int64_t e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    return pow(Rational{1} / base, -e);
  }
  Rational result{1};
  Rational b = base;
  auto k = static_cast<std::uint64_t>(e);
  while (k != 0) {
    if (k & 1U) result *= b;
    b *= b;
    k >>= 1U;
  }
  return result;
}

/// p-adic valuation of a nonzero integer.
inline long valuation(const Integer& value, long p) {
  if (value == 0) throw std::domain_error("valuation of zero");
  Integer v = abs(value);
  long count = 0;
  while (v % p == 0) {
    v /= p;
    ++count;
  }
  return count;
}

}  // namespace guhecke
