#include "ghostslopes/numeric.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace ghostslopes {

BigInt big(std::int64_t value) {
  static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 platform expected");
  return BigInt(static_cast<long>(value));
}

Rational rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  Rational r(big(num), big(den));
  r.canonicalize();
  return r;
}

bool fits_int64(const BigInt& value) { return mpz_fits_slong_p(value.get_mpz_t()) != 0; }

std::int64_t to_int64(const BigInt& value) {
  if (!fits_int64(value)) throw std::overflow_error("integer does not fit in 64 bits: " + value.get_str());
  return static_cast<std::int64_t>(value.get_si());
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body)) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  BigInt out(std::string(body), 10);
  return negative ? BigInt(-out) : out;
}

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_bigint(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw std::invalid_argument("bad denominator: '" + std::string(text) + "'");
    BigInt den(std::string(den_text), 10);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view frac = text.substr(dot + 1);
    if (!all_digits(frac)) throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    std::string_view whole = text.substr(0, dot);
    bool negative = !whole.empty() && whole.front() == '-';
    std::string digits = std::string(whole) + std::string(frac);
    if (whole.empty() || whole == "-" || whole == "+") digits = (negative ? "-0" : "0") + std::string(frac);
    Rational r(parse_bigint(digits), pow(10, static_cast<unsigned>(frac.size())));
    r.canonicalize();
    return r;
  }
  return Rational(parse_bigint(text));
}

std::int64_t checked_pow(std::int64_t base, int exp) {
  std::int64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(out, base, &out)) throw std::overflow_error("checked_pow overflow");
  }
  return out;
}

BigInt pow(std::int64_t base, unsigned exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), big(base).get_mpz_t(), exp);
  return out;
}

}  // namespace ghostslopes
