#pragma once

// Input parameters (p, a, s) and the constants derived from them.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ghostslopes {

/// Validated parameters. The twist b is fixed to 0; valuations depend only on (p, a, s).
struct GhostParams {
  std::int64_t p = 0;
  std::int64_t a = 0;
  std::int64_t s = 0;
  bool strict = true;
  /// Non-fatal notes, e.g. a relaxed-mode prime below 11.
  std::vector<std::string> warnings;

  /// True when p < 11, which is only possible in relaxed mode.
  bool outside_theorem_range() const { return p < 11; }
};

/// Raised by validate(); carries every violated constraint, not just the first.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

bool is_prime(std::int64_t n);

/// Strict mode requires p >= 11; relaxed mode accepts p >= 7 and records a warning.
/// Always requires 2 <= a <= p-5 and 0 <= s <= p-2.
GhostParams validate(std::int64_t p, std::int64_t a, std::int64_t s, bool strict = true);

struct DerivedConstants {
  std::int64_t k_eps = 0;  // in {2, ..., p}
  std::int64_t delta = 0;  // 0 or 1
  std::int64_t t1 = 0;
  std::int64_t t2 = 0;
};

/// Representative of n modulo p-1 in [0, p-2].
std::int64_t residue_mod_pm1(std::int64_t p, std::int64_t n);

/// Throws std::logic_error if delta falls outside {0, 1}.
DerivedConstants derive(const GhostParams& params);

/// Parameters together with their derived constants; immutable once built.
struct Setting {
  GhostParams params;
  DerivedConstants derived;

  std::int64_t p() const { return params.p; }
  std::int64_t half_p_plus_1() const { return (params.p + 1) / 2; }
  std::int64_t half_p_minus_1() const { return (params.p - 1) / 2; }
};

Setting make_setting(std::int64_t p, std::int64_t a, std::int64_t s, bool strict = true);

enum class Parity { even, odd };

constexpr Parity parity_of(std::int64_t n) { return (n % 2 == 0) ? Parity::even : Parity::odd; }

/// beta_n depends only on the parity of n: t1 for even n, t2 - (p+1)/2 for odd n.
std::int64_t beta(const Setting& s, Parity parity);
/// beta_{n-1} - beta_n + (p+1)/2; always a+2 or p-1-a.
std::int64_t theta(const Setting& s, std::int64_t n);
/// ((p-1)/2) k_bullet - ((p+1)/2) delta + beta_n - 1.
std::int64_t eta(const Setting& s, std::int64_t n, std::int64_t k_bullet);

}  // namespace ghostslopes
