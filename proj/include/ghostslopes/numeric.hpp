#pragma once

// Exact integer and rational types shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace ghostslopes {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt big(std::int64_t value);
Rational rational(std::int64_t num, std::int64_t den = 1);
/// num/den in lowest terms. Throws std::domain_error for a zero denominator.
Rational rational(const BigInt& num, const BigInt& den);

bool fits_int64(const BigInt& value);
/// Throws std::overflow_error when the value does not fit.
std::int64_t to_int64(const BigInt& value);

/// Decimal string.
std::string to_string(const BigInt& value);
/// Always "num/den", e.g. "3/1", so that slopes round-trip exactly.
std::string to_string(const Rational& value);

/// Accepts an optional sign followed by decimal digits. Throws std::invalid_argument.
BigInt parse_bigint(std::string_view text);
/// Accepts "n", "n/d" or a terminating decimal such as "2.5". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Floor and ceiling division for b > 0, rounding toward -inf / +inf.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return -floor_div(-a, b);
}

/// base^exp as a 64-bit integer; throws std::overflow_error.
std::int64_t checked_pow(std::int64_t base, int exp);

BigInt pow(std::int64_t base, unsigned exp);

}  // namespace ghostslopes
