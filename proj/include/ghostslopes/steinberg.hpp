#pragma once

// Near-Steinberg ranges: L-values, maximality, nestedness, the exclusions and the
// correspondence between maximal ranges and Newton-polygon segments.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ghostslopes/dims.hpp"
#include "ghostslopes/ghost.hpp"
#include "ghostslopes/newton.hpp"

namespace ghostslopes {

/// The open interval (center - L, center + L), center = d^Iw_k / 2.
struct NSRange {
  Weight k;
  std::int64_t L = 0;
  std::int64_t center = 0;

  std::int64_t lo() const { return center - L; }
  std::int64_t hi() const { return center + L; }
  bool contains(const NSRange& other) const { return lo() <= other.lo() && other.hi() <= hi(); }
  bool same_interval(const NSRange& other) const { return lo() == other.lo() && hi() == other.hi(); }
  bool strictly_contains(const NSRange& other) const { return contains(other) && !same_interval(other); }
  bool disjoint(const NSRange& other) const { return hi() <= other.lo() || other.hi() <= lo(); }
  /// Whether the integer n lies in the open interval.
  bool contains_point(std::int64_t n) const { return lo() < n && n < hi(); }
};

/// Largest L in [1, d^new_k / 2] with v_p(w_eval - w_k) >= Delta_{k,L} - Delta_{k,L-1}.
/// When eval == k the valuation is infinite and L = d^new_k / 2.
std::optional<std::int64_t> l_value(const Setting& s, const Weight& eval, const DeltaProfile& profile);
std::optional<std::int64_t> l_value(const Setting& s, const Weight& eval, const Weight& k);

std::optional<NSRange> ns_range(const Setting& s, const Weight& eval, const DeltaProfile& profile);
std::optional<NSRange> ns_range(const Setting& s, const Weight& eval, const Weight& k);

/// Every range generated by a k with k_bullet in [0, k_bullet_max]. With prune set,
/// only k_bullet congruent to eval mod p are examined (L >= 1 forces v_p(k - eval) >= 1).
std::vector<NSRange> all_ns_ranges(const ProfileCache& cache, const Weight& eval, std::int64_t k_bullet_max,
                                   bool prune = false);

/// Ranges not strictly contained in another range of the list.
std::vector<NSRange> maximal_ns_ranges(std::span<const NSRange> ranges);

/// First pair that is neither disjoint nor nested, if any.
std::optional<std::pair<NSRange, NSRange>> nesting_violation(std::span<const NSRange> ranges);

/// ceil((p+1)(P+2)/2): every k_bullet beyond it has d^ur >= P, so its ranges miss [0, P].
std::int64_t range_window(const Setting& s, std::int64_t prefix_end);

struct CorrespondenceReport {
  std::int64_t prefix_end = 0;
  std::int64_t window = 0;
  Rational bound;
  std::vector<Segment> segments;
  std::vector<NSRange> maximal;
  std::vector<std::pair<NSRange, Segment>> matched;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Matches maximal near-Steinberg ranges against the Newton-polygon segments of length
/// >= 2 inside the certified prefix, and checks that prefix vertices are exactly the
/// indices outside every range. Throws CertificationError if the polygon is uncertified.
CorrespondenceReport vertex_correspondence(const ProfileCache& cache, const Weight& eval, const Rational& bound,
                                           const CertifyOptions& options = {}, bool prune = true);

struct ExclusionReport {
  bool skipped = false;     // k == k'
  bool hypothesis = false;  // v_p(w_k' - w_k) >= Delta_{k,L} - Delta_{k,L-1} with L = L_{eval,k}
  bool holds = true;
  std::string detail;
};

/// When the hypothesis holds: d^Iw_k'/2 is outside the closed range, and d^ur_k',
/// d^Iw_k' - d^ur_k' are outside the open range.
ExclusionReport exclusion_check(const ProfileCache& cache, const Weight& eval, std::int64_t k_bullet,
                                std::int64_t k_prime_bullet);

}  // namespace ghostslopes
