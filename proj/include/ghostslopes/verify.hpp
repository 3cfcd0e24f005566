#pragma once

// Verification harness: local constancy of slope multisets on congruent weight pairs,
// the slope bound at the family's first vertex, and scans of every inequality and
// structural property the slope argument rests on.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghostslopes/ghost.hpp"
#include "ghostslopes/newton.hpp"
#include "ghostslopes/steinberg.hpp"

namespace ghostslopes {

enum class Status { pass, fail, vacuous };

std::string to_string(Status status);

struct CheckResult {
  std::string name;
  Status status = Status::vacuous;
  std::int64_t cases = 0;          // instances where the hypothesis held and the claim was tested
  std::int64_t vacuous_cases = 0;  // instances skipped because the hypothesis failed
  std::string counterexample;      // first failing input, reproducible
  std::string note;
  double seconds = 0;
};

struct VerificationReport {
  std::string grid;  // parameter description
  std::vector<CheckResult> checks;
  double seconds = 0;

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
};

/// {k in K : k == k1 mod (p-1)p^m} and its two smallest members.
struct WeightFamily {
  Weight k1;
  int m = 0;
  BigInt step;  // p^m, the spacing in k_bullet
  Weight k0_min;
  Weight k0_max;

  bool contains(const Weight& k) const;
};

WeightFamily weight_family(const Setting& s, const Weight& k1, int m);

struct MultisetComparison {
  Weight k1;
  Weight k2;
  SlopeMultiset first;
  SlopeMultiset second;
  bool equal = false;
};

/// Throws CertificationError if either side cannot be certified.
MultisetComparison slope_multisets_equal(const Setting& s, const Weight& k1, const Weight& k2, const Rational& bound,
                                         const CertifyOptions& options = {});

struct LocalConstancyReport {
  int m = 0;
  Rational bound;
  std::vector<MultisetComparison> pairs;
  /// Whether every weight exceeds m-3, the extra hypothesis on the modular-forms side.
  /// Recorded only; the comparison needs k >= 2.
  bool weights_exceed_m_minus_3 = true;

  bool all_equal() const;
};

/// Compares k1 with k1 + t(p-1)p^m for t = 1..pair_count at bound m-4. Requires m >= 4.
LocalConstancyReport check_local_constancy(const Setting& s, int m, const Weight& k1, int pair_count,
                                           const CertifyOptions& options = {});

struct MainPropositionReport {
  Status status = Status::vacuous;
  std::int64_t n0 = 0;  // d^ur of k0
  Rational threshold;   // min{m-4, (k0-2)/2}
  std::optional<Segment> segment;
  std::string diagnostic;
};

/// If NP(G(w_tilde)) has a segment starting at n0 = d^ur_{k0}, its slope is at least
/// min{m-4, (k0-2)/2}. Vacuous when k0 fails the hypothesis d^ur_{k0} >= d^Iw_k - d^ur_k
/// for all smaller k in the family, or when no segment starts at n0.
MainPropositionReport check_main_proposition(const Setting& s, const Weight& tilde_k, const Weight& k0, int m,
                                             const CertifyOptions& options = {});

/// ((p-1)/(p+1)) x - 5 - log_p x - floor(log_p(x+1)) - 3 (log_p(x+1))^2.
double figure_envelope(std::int64_t p, std::int64_t x);

struct FigureConstants {
  double low = 0;       // min over x in {1, 2}
  double high = 0;      // min over x in [3, x_max]
  std::int64_t high_argmin = 0;
  /// Whether y(x) > high for every x > x_max, shown through the increasing minorant
  /// ((p-1)/(p+1)) x - 5 - 2u - 3u^2 with u = log_p(x+1).
  bool tail_bounded = false;
};

FigureConstants figure_constants(std::int64_t p, std::int64_t x_max = 1000);

/// For k_bullet in {1, 2}: Delta_{k,D-1} = Delta'_{k,D-1} and (k-2)/2 - (Delta_{k,D} - Delta_{k,D-1})
/// is a half-integer >= -4.
CheckResult halfint_refinement_check(const ProfileCache& cache, std::int64_t k_bullet);

/// Pairs k1 ~ k2 whose certified multisets up to m-3 differ. Diagnostic only.
std::vector<MultisetComparison> explore_sharpness(const Setting& s, int m, const Weight& k1, int pair_count,
                                                  const CertifyOptions& options = {});

// Individual scans. Each returns a named CheckResult; lemma_suite runs them all.
CheckResult check_derived_identities(const Setting& s);
CheckResult check_sandwich(const Setting& s, std::int64_t k_bullet_max);
CheckResult check_dim_monotonicity(const Setting& s, std::int64_t k_bullet_max);
CheckResult check_equal_dims_valuation(const Setting& s, std::int64_t k_bullet_max);
CheckResult check_parity_corollary(const Setting& s, std::int64_t k_bullet_max);
CheckResult check_palindrome(const Setting& s, std::int64_t k_bullet_max);
CheckResult check_dnew_nonnegative(const Setting& s, std::int64_t k_bullet_max);
CheckResult check_window_soundness(const Setting& s, std::int64_t prefix_max);
CheckResult check_delta_symmetry(const ProfileCache& cache, std::int64_t k_bullet_max);
/// hull <= raw, hull convex, hull = raw at both ends.
CheckResult check_hull_shape(const ProfileCache& cache, std::int64_t k_bullet_max);
CheckResult check_gap_three_halves(const ProfileCache& cache, std::int64_t k_bullet_max);
CheckResult check_gap_bound_lemma(const Setting& s, std::int64_t k_bullet_max);
CheckResult check_key_proposition(const ProfileCache& cache, std::int64_t k_bullet_max);
CheckResult check_hull_deviation(const ProfileCache& cache, std::int64_t k_bullet_max);
CheckResult check_gamma_bound(const Setting& s, std::int64_t k_bullet_max);
CheckResult check_tool_lemma(std::int64_t p, int samples, std::uint64_t seed);
CheckResult check_l_implies_vp(const ProfileCache& cache, const std::vector<Weight>& evals, std::int64_t k_bullet_max);
CheckResult check_nestedness(const ProfileCache& cache, const std::vector<Weight>& evals, std::int64_t k_bullet_max);
CheckResult check_exclusions(const ProfileCache& cache, const std::vector<Weight>& evals, std::int64_t k_bullet_max);
CheckResult check_vertex_correspondence(const ProfileCache& cache, const std::vector<Weight>& evals,
                                        const Rational& bound, const CertifyOptions& options = {});
/// Includes every self-evaluation w_k, k_bullet <= k_bullet_max, besides `evals`.
CheckResult check_four_part_lemma(const ProfileCache& cache, const std::vector<Weight>& evals,
                                  std::int64_t k_bullet_max, const CertifyOptions& options = {},
                                  unsigned threads = 1);
CheckResult check_figure_constants(std::int64_t p);

/// Three evaluation weights with large valuation against small k: 1 + p^4, 2 + p^3, 3 + 2p^2.
std::vector<Weight> default_evaluation_weights(const Setting& s);

struct SuiteOptions {
  unsigned threads = 1;
  int tool_samples = 10'000;
  std::uint64_t seed = 20240601;
  CertifyOptions certify;
};

VerificationReport lemma_suite(const Setting& s, std::int64_t k_bullet_max, const SuiteOptions& options = {});

}  // namespace ghostslopes
