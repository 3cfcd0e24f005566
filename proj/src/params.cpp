#include "ghostslopes/params.hpp"

#include <sstream>

namespace ghostslopes {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? "; " : "") << parts[i];
  return out.str();
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : std::invalid_argument(join(violations)), violations_(std::move(violations)) {}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

GhostParams validate(std::int64_t p, std::int64_t a, std::int64_t s, bool strict) {
  std::vector<std::string> violations;
  GhostParams out{p, a, s, strict, {}};
  if (!is_prime(p)) {
    violations.push_back("p not prime (p=" + std::to_string(p) + ")");
  } else if (strict && p < 11) {
    violations.push_back("p below 11 in strict mode (p=" + std::to_string(p) + ")");
  } else if (p < 7) {
    violations.push_back("p below 7 (p=" + std::to_string(p) + ")");
  } else if (p < 11) {
    out.warnings.push_back("outside theorem range: p=" + std::to_string(p) + " < 11");
  }
  if (a < 2 || a > p - 5) {
    violations.push_back("a out of range (need 2 <= a <= " + std::to_string(p - 5) + ", got " + std::to_string(a) + ")");
  }
  if (s < 0 || s > p - 2) {
    violations.push_back("s out of range (need 0 <= s <= " + std::to_string(p - 2) + ", got " + std::to_string(s) + ")");
  }
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return out;
}

std::int64_t residue_mod_pm1(std::int64_t p, std::int64_t n) {
  const std::int64_t m = p - 1;
  std::int64_t r = n % m;
  return r < 0 ? r + m : r;
}

DerivedConstants derive(const GhostParams& params) {
  const std::int64_t p = params.p, a = params.a, s = params.s;
  const std::int64_t r_as = residue_mod_pm1(p, a + s);
  const std::int64_t r_a2s = residue_mod_pm1(p, a + 2 * s);
  const std::int64_t numer = r_as + s - r_a2s;
  if (numer % (p - 1) != 0) throw std::logic_error("delta numerator not divisible by p-1");
  DerivedConstants c;
  c.delta = numer / (p - 1);
  if (c.delta != 0 && c.delta != 1) throw std::logic_error("delta outside {0,1}: " + std::to_string(c.delta));
  c.k_eps = r_a2s + 2;
  if (a + s < p - 1) {
    c.t1 = s + c.delta;
    c.t2 = a + s + c.delta + 2;
  } else {
    c.t1 = r_as + c.delta + 1;
    c.t2 = s + c.delta + 1;
  }
  return c;
}

Setting make_setting(std::int64_t p, std::int64_t a, std::int64_t s, bool strict) {
  GhostParams params = validate(p, a, s, strict);
  DerivedConstants derived = derive(params);
  return Setting{std::move(params), derived};
}

std::int64_t beta(const Setting& s, Parity parity) {
  return parity == Parity::even ? s.derived.t1 : s.derived.t2 - s.half_p_plus_1();
}

std::int64_t theta(const Setting& s, std::int64_t n) {
  return beta(s, parity_of(n - 1)) - beta(s, parity_of(n)) + s.half_p_plus_1();
}

std::int64_t eta(const Setting& s, std::int64_t n, std::int64_t k_bullet) {
  return s.half_p_minus_1() * k_bullet - s.half_p_plus_1() * s.derived.delta + beta(s, parity_of(n)) - 1;
}

}  // namespace ghostslopes
