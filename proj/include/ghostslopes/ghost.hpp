#pragma once

// Valuations of ghost coefficients g_n at arithmetic weights, and the centered
// profile Delta'_{k,l} with its lower convex hull Delta_{k,l}.

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "ghostslopes/dims.hpp"
#include "ghostslopes/numeric.hpp"
#include "ghostslopes/params.hpp"
#include "ghostslopes/valuation.hpp"

namespace ghostslopes {

/// v_p(g_n(w_eval)) = sum_k m_n(k) (v_p(k - eval) + 1), summed over the support window.
/// Infinite iff m_n(eval) > 0.
ExtValuation gn_valuation(const Setting& s, std::int64_t n, const Weight& eval);

/// Same sum with the (w - w_hat) factors removed.
ExtValuation gn_hat_valuation(const Setting& s, std::int64_t n, const Weight& eval, const Weight& hat);

/// v_p(g_n(w_eval)) for every n in [0, n_max] in a single O(window + n_max) pass.
/// Each k contributes a tent c * m_n(k) in n, accumulated through second differences.
std::vector<ExtValuation> coefficient_valuations(const Setting& s, const Weight& eval, std::int64_t n_max,
                                                 const Weight* hat = nullptr);

/// sum_k m_n(k) for every n in [0, n_max].
std::vector<std::int64_t> multiplicity_totals(const Setting& s, std::int64_t n_max);

/// Delta'_{k,l} = v_p(g_{d^Iw/2 + l, hat k}(w_k)) - ((k-2)/2) l for |l| <= d^new/2.
/// Throws std::out_of_range outside that window.
Rational delta_prime(const Setting& s, const Weight& k, std::int64_t ell);

struct DeltaProfile {
  Weight k;
  std::int64_t half_iw = 0;
  std::int64_t D = 0;  // d^new / 2
  std::vector<Rational> raw;   // indexed by l + D
  std::vector<Rational> hull;  // indexed by l + D
  std::vector<std::int64_t> hull_vertices;  // strict vertices, as l values
  std::vector<Rational> gaps;  // gaps[L-1] = Delta_{k,L} - Delta_{k,L-1}, L = 1..D

  bool empty() const { return raw.empty(); }
  const Rational& raw_at(std::int64_t ell) const { return raw.at(static_cast<std::size_t>(ell + D)); }
  const Rational& hull_at(std::int64_t ell) const { return hull.at(static_cast<std::size_t>(ell + D)); }
  const Rational& gap(std::int64_t L) const { return gaps.at(static_cast<std::size_t>(L - 1)); }
};

/// Empty profile when d^new = 0. Limited to k_bullet <= max_profile_k_bullet.
DeltaProfile delta_profile(const Setting& s, const Weight& k);

inline constexpr std::int64_t max_profile_k_bullet = 10'000'000;

/// Thread-safe memo of profiles keyed by k_bullet. References stay valid for the
/// lifetime of the cache.
class ProfileCache {
 public:
  explicit ProfileCache(Setting setting) : setting_(std::move(setting)) {}

  const Setting& setting() const { return setting_; }
  const DeltaProfile& get(std::int64_t k_bullet) const;
  /// Computes [lo, hi] up front on `threads` workers.
  void prefetch(std::int64_t lo, std::int64_t hi, unsigned threads) const;

 private:
  Setting setting_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::int64_t, std::unique_ptr<DeltaProfile>> cache_;
};

}  // namespace ghostslopes
