#pragma once

// p-adic valuations of integers and of weight differences.

#include <compare>
#include <cstdint>
#include <string>

#include "ghostslopes/dims.hpp"
#include "ghostslopes/numeric.hpp"

namespace ghostslopes {

/// A non-negative integer or +infinity. Infinity absorbs addition.
class ExtValuation {
 public:
  constexpr ExtValuation() = default;
  constexpr explicit ExtValuation(std::int64_t value) : value_(value) {}
  static constexpr ExtValuation infinity() {
    ExtValuation v;
    v.infinite_ = true;
    return v;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }
  /// Throws std::domain_error on infinity.
  std::int64_t value() const;

  ExtValuation& operator+=(const ExtValuation& other);
  friend ExtValuation operator+(ExtValuation x, const ExtValuation& y) { return x += y; }

  friend constexpr bool operator==(const ExtValuation& x, const ExtValuation& y) {
    return x.infinite_ == y.infinite_ && (x.infinite_ || x.value_ == y.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const ExtValuation& x, const ExtValuation& y) {
    if (x.infinite_ || y.infinite_) return x.infinite_ <=> y.infinite_;
    return x.value_ <=> y.value_;
  }

  /// Decimal digits, or "inf".
  std::string to_string() const;

 private:
  std::int64_t value_ = 0;
  bool infinite_ = false;
};

/// Exponent of p in n. Throws std::domain_error for n = 0.
int vp(const BigInt& n, std::int64_t p);
int vp(std::int64_t n, std::int64_t p);

/// v_p(w_k - w_k') = v_p(k_bullet - k'_bullet) + 1, or infinity for equal weights.
ExtValuation vp_weight_diff(std::int64_t p, const Weight& x, const Weight& y);

/// v_p(x - e) for a fixed, possibly huge, e and machine-sized x. Reduces e modulo a
/// large power of p once so that the common case never touches GMP.
class OffsetValuation {
 public:
  OffsetValuation(std::int64_t p, const BigInt& offset);

  /// Infinity when x == offset.
  ExtValuation at(std::int64_t x) const;

 private:
  std::int64_t p_;
  BigInt offset_;
  std::int64_t modulus_;  // p^exponent_
  int exponent_;
  std::int64_t residue_;  // offset mod modulus_
};

/// Sum of v_p(n) over n1 < n <= n2, with the two-sided estimate
/// (n2-n1)/p - 1 <= sum <= (n2-n1)/(p-1) + r, r the largest single valuation in range.
struct ValuationSum {
  std::int64_t sum = 0;
  std::int64_t r = 0;
  Rational lower;
  Rational upper;
  bool lower_holds = false;
  bool upper_holds = false;
};

/// Requires n1 < n2 and 0 outside (n1, n2]; throws std::invalid_argument otherwise.
ValuationSum sum_vp(std::int64_t p, std::int64_t n1, std::int64_t n2);

/// Largest v_p(n) for n in [lo, hi]. Throws std::invalid_argument if lo > hi or 0 is in range.
int max_vp_interval(std::int64_t p, std::int64_t lo, std::int64_t hi);

}  // namespace ghostslopes
