#include "ghostslopes/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ghostslopes/parallel.hpp"

namespace ghostslopes {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Accumulates pass/fail/vacuous counts for one named check and keeps the first failure.
class Tally {
 public:
  explicit Tally(std::string name) : start_(Clock::now()) { result_.name = std::move(name); }

  void pass() { ++result_.cases; }
  void vacuous() { ++result_.vacuous_cases; }
  void fail(const std::string& what) {
    ++result_.cases;
    if (!failed_) result_.counterexample = what;
    failed_ = true;
  }
  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    if (ok) {
      pass();
    } else {
      fail(describe());
    }
  }
  void note(std::string text) { result_.note = std::move(text); }

  CheckResult finish() {
    result_.status = failed_ ? Status::fail : (result_.cases > 0 ? Status::pass : Status::vacuous);
    result_.seconds = elapsed(start_);
    return std::move(result_);
  }

 private:
  CheckResult result_;
  bool failed_ = false;
  Clock::time_point start_;
};

std::string kb(std::int64_t k_bullet) { return "k_bullet=" + std::to_string(k_bullet); }

std::string kb(const Weight& w) { return "k_bullet=" + to_string(w.k_bullet); }

Rational half_k_minus_2(const Setting& s, const Weight& w) { return rational(w.k(s) - 2, big(2)); }

bool ext_at_least(const ExtValuation& v, const Rational& threshold) {
  return v.is_infinite() || Rational(big(v.value())) >= threshold;
}

}  // namespace

std::string to_string(Status status) {
  switch (status) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::vacuous:
      return "vacuous";
  }
  return "unknown";
}

bool VerificationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == Status::fail; });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const CheckResult& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

bool WeightFamily::contains(const Weight& k) const {
  const BigInt diff = k.k_bullet - k1.k_bullet;
  return mpz_divisible_p(diff.get_mpz_t(), step.get_mpz_t()) != 0;
}

WeightFamily weight_family(const Setting& s, const Weight& k1, int m) {
  if (m < 0) throw std::invalid_argument("m must be non-negative");
  WeightFamily f;
  f.k1 = k1;
  f.m = m;
  f.step = pow(s.p(), static_cast<unsigned>(m));
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), k1.k_bullet.get_mpz_t(), f.step.get_mpz_t());
  f.k0_min = Weight::from_k_bullet(r);
  f.k0_max = Weight::from_k_bullet(BigInt(r + f.step));
  return f;
}

// ---------------------------------------------------------------------------
// Local constancy and the main proposition

MultisetComparison slope_multisets_equal(const Setting& s, const Weight& k1, const Weight& k2, const Rational& bound,
                                         const CertifyOptions& options) {
  MultisetComparison out;
  out.k1 = k1;
  out.k2 = k2;
  out.first = require_certified_slopes(s, k1, bound, options);
  out.second = require_certified_slopes(s, k2, bound, options);
  out.equal = out.first.entries == out.second.entries;
  return out;
}

bool LocalConstancyReport::all_equal() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const MultisetComparison& c) { return c.equal; });
}

LocalConstancyReport check_local_constancy(const Setting& s, int m, const Weight& k1, int pair_count,
                                           const CertifyOptions& options) {
  if (m < 4) throw std::invalid_argument("local constancy needs m >= 4");
  if (pair_count < 1) throw std::invalid_argument("pair_count must be positive");
  LocalConstancyReport out;
  out.m = m;
  out.bound = rational(m - 4);
  const BigInt step = pow(s.p(), static_cast<unsigned>(m));
  const BigInt floor_k = m - 3;
  if (k1.k(s) <= floor_k) out.weights_exceed_m_minus_3 = false;
  for (int t = 1; t <= pair_count; ++t) {
    const Weight k2 = Weight::from_k_bullet(BigInt(k1.k_bullet + step * t));
    if (k2.k(s) <= floor_k) out.weights_exceed_m_minus_3 = false;
    out.pairs.push_back(slope_multisets_equal(s, k1, k2, out.bound, options));
  }
  return out;
}

MainPropositionReport check_main_proposition(const Setting& s, const Weight& tilde_k, const Weight& k0, int m,
                                             const CertifyOptions& options) {
  const WeightFamily family = weight_family(s, k0, m);
  if (!family.contains(tilde_k)) throw std::invalid_argument("tilde_k is not congruent to k0 mod (p-1)p^m");

  MainPropositionReport out;
  const std::int64_t k0b = k0.small();
  out.n0 = d_ur(s, k0b);
  out.threshold = std::min(rational(m - 4), half_k_minus_2(s, k0));

  // The hypothesis quantifies over every smaller member of the family.
  if (fits_int64(family.step)) {
    const std::int64_t step = to_int64(family.step);
    for (std::int64_t k = k0b - step; k >= 0; k -= step) {
      const DimTriple d = dims(s, k);
      if (out.n0 < d.upper()) {
        out.diagnostic = "hypothesis fails: d_ur(k0)=" + std::to_string(out.n0) + " < d_iw-d_ur=" +
                         std::to_string(d.upper()) + " at " + kb(k);
        return out;
      }
    }
  }

  // Raise the bound until the certified prefix reaches past n0, so that the segment
  // starting there (if any) is known exactly.
  Rational bound = out.threshold;
  SlopeMultiset slopes = require_certified_slopes(s, tilde_k, bound, options);
  for (int attempt = 0; attempt < 16 && slopes.certificate->last_vertex.index <= out.n0; ++attempt) {
    bound = std::max(Rational(bound * 2), rational(1));
    SlopeMultiset wider = certified_slopes(s, tilde_k, bound, options);
    if (!wider.certified) break;
    slopes = std::move(wider);
  }
  for (const Segment& seg : slopes.segments) {
    if (seg.start == out.n0) {
      out.segment = seg;
      if (seg.slope >= out.threshold) {
        out.status = Status::pass;
      } else {
        out.status = Status::fail;
        out.diagnostic = "segment from " + std::to_string(seg.start) + " to " + std::to_string(seg.end) +
                         " has slope " + to_string(seg.slope) + " < " + to_string(out.threshold);
      }
      return out;
    }
  }
  if (out.n0 >= slopes.certificate->last_vertex.index) {
    out.status = Status::pass;
    out.diagnostic = "n0 lies beyond the certified prefix, where every slope exceeds the threshold";
    return out;
  }
  out.diagnostic = "no segment starts at n0";
  return out;
}

std::vector<MultisetComparison> explore_sharpness(const Setting& s, int m, const Weight& k1, int pair_count,
                                                  const CertifyOptions& options) {
  std::vector<MultisetComparison> found;
  const BigInt step = pow(s.p(), static_cast<unsigned>(m));
  const Rational bound = rational(m - 3);
  for (int t = 1; t <= pair_count; ++t) {
    const Weight k2 = Weight::from_k_bullet(BigInt(k1.k_bullet + step * t));
    try {
      MultisetComparison c = slope_multisets_equal(s, k1, k2, bound, options);
      if (!c.equal) found.push_back(std::move(c));
    } catch (const CertificationError&) {
    }
  }
  return found;
}

// ---------------------------------------------------------------------------
// Envelope of the key proposition bound

double figure_envelope(std::int64_t p, std::int64_t x) {
  if (x < 1) throw std::invalid_argument("envelope needs x >= 1");
  const double lp = std::log(static_cast<double>(p));
  std::int64_t floor_log = 0;
  for (std::int64_t q = p; q <= x + 1; q *= p) ++floor_log;
  const double log_x = std::log(static_cast<double>(x)) / lp;
  const double log_x1 = std::log(static_cast<double>(x + 1)) / lp;
  return static_cast<double>(p - 1) / static_cast<double>(p + 1) * static_cast<double>(x) - 5.0 - log_x -
         static_cast<double>(floor_log) - 3.0 * log_x1 * log_x1;
}

FigureConstants figure_constants(std::int64_t p, std::int64_t x_max) {
  if (x_max < 3) throw std::invalid_argument("x_max must be at least 3");
  FigureConstants out;
  out.low = std::min(figure_envelope(p, 1), figure_envelope(p, 2));
  out.high = std::numeric_limits<double>::infinity();
  for (std::int64_t x = 3; x <= x_max; ++x) {
    const double y = figure_envelope(p, x);
    if (y < out.high) {
      out.high = y;
      out.high_argmin = x;
    }
  }
  const double c = static_cast<double>(p - 1) / static_cast<double>(p + 1);
  const double lp = std::log(static_cast<double>(p));
  const double u = std::log(static_cast<double>(x_max + 1)) / lp;
  const double minorant = c * static_cast<double>(x_max) - 5.0 - 2.0 * u - 3.0 * u * u;
  const double slope = c - (2.0 + 6.0 * u) / (static_cast<double>(x_max + 1) * lp);
  out.tail_bounded = minorant > out.high && slope > 0;
  return out;
}

CheckResult check_figure_constants(std::int64_t p) {
  Tally t("figure_constants");
  const FigureConstants c = figure_constants(p);
  t.expect(c.high > -4.0, [&] { return "min over x >= 3 is " + std::to_string(c.high); });
  t.expect(c.tail_bounded, [&] { return std::string("tail beyond the scan not bounded below by the minimum"); });
  if (p == 11) {
    constexpr double tolerance = 0.001;
    t.expect(std::abs(figure_envelope(11, 1) - (-4.417)) <= tolerance,
             [&] { return "y(1)=" + std::to_string(figure_envelope(11, 1)); });
    t.expect(std::abs(c.low - (-4.417)) <= tolerance, [&] { return "min over {1,2} is " + std::to_string(c.low); });
    t.expect(std::abs(c.high - (-3.961)) <= tolerance, [&] { return "min over x>=3 is " + std::to_string(c.high); });
  }
  return t.finish();
}

CheckResult halfint_refinement_check(const ProfileCache& cache, std::int64_t k_bullet) {
  Tally t("halfint_refinement");
  const DeltaProfile& profile = cache.get(k_bullet);
  if (profile.D < 1) {
    t.vacuous();
    return t.finish();
  }
  const std::int64_t D = profile.D;
  t.expect(profile.hull_at(D - 1) == profile.raw_at(D - 1),
           [&] { return kb(k_bullet) + ": hull differs from raw at l=D-1"; });
  const Rational value = half_k_minus_2(cache.setting(), profile.k) - profile.gap(D);
  const Rational doubled = value * 2;
  t.expect(doubled.get_den() == 1, [&] { return kb(k_bullet) + ": " + to_string(value) + " not in Z/2"; });
  t.expect(value >= -4, [&] { return kb(k_bullet) + ": " + to_string(value) + " < -4"; });
  return t.finish();
}

// ---------------------------------------------------------------------------
// Parameter and dimension scans

CheckResult check_derived_identities(const Setting& s) {
  Tally t("derived_identities");
  const auto& c = s.derived;
  const std::int64_t p = s.p(), a = s.params.a, sv = s.params.s;
  t.expect(c.delta == 0 || c.delta == 1, [&] { return "delta=" + std::to_string(c.delta); });
  t.expect(c.t1 + c.t2 == sv + residue_mod_pm1(p, a + sv) + 2 + 2 * c.delta,
           [&] { return "t1+t2=" + std::to_string(c.t1 + c.t2); });
  t.expect(4 <= c.t2 - c.t1 && c.t2 - c.t1 <= p - 3, [&] { return "t2-t1=" + std::to_string(c.t2 - c.t1); });
  t.expect(2 <= c.k_eps && c.k_eps <= p, [&] { return "k_eps=" + std::to_string(c.k_eps); });
  for (std::int64_t n : {0, 1}) {
    const std::int64_t th = theta(s, n);
    t.expect((th == a + 2 || th == p - 1 - a) && th <= p - 3,
             [&] { return "theta_" + std::to_string(n) + "=" + std::to_string(th); });
  }
  return t.finish();
}

CheckResult check_sandwich(const Setting& s, std::int64_t k_bullet_max) {
  Tally t("sandwich");
  const std::int64_t p = s.p();
  for (std::int64_t k = 0; k <= k_bullet_max; ++k) {
    // 2k/(p+1) - 2 <= d_ur <= 2k/(p+1) + 2, multiplied through by p+1.
    const std::int64_t scaled = d_ur(s, k) * (p + 1);
    t.expect(2 * k - 2 * (p + 1) <= scaled && scaled <= 2 * k + 2 * (p + 1), [&] { return kb(k); });
  }
  return t.finish();
}

CheckResult check_dim_monotonicity(const Setting& s, std::int64_t k_bullet_max) {
  Tally t("dim_monotonicity");
  std::vector<DimTriple> d;
  d.reserve(static_cast<std::size_t>(k_bullet_max + 1));
  for (std::int64_t k = 0; k <= k_bullet_max; ++k) d.push_back(dims(s, k));
  for (std::int64_t k = 0; k <= k_bullet_max; ++k) {
    for (std::int64_t k2 = k + 1; k2 <= k_bullet_max; ++k2) {
      const DimTriple& x = d[static_cast<std::size_t>(k)];
      const DimTriple& y = d[static_cast<std::size_t>(k2)];
      const bool ok = x.d_ur <= y.d_ur && x.upper() <= y.upper() && (k2 < k + 2 || x.upper() < y.upper());
      t.expect(ok, [&] { return kb(k) + " vs " + kb(k2); });
    }
  }
  return t.finish();
}

CheckResult check_equal_dims_valuation(const Setting& s, std::int64_t k_bullet_max) {
  Tally t("equal_dims_valuation");
  std::vector<DimTriple> d;
  for (std::int64_t k = 0; k <= k_bullet_max; ++k) d.push_back(dims(s, k));
  for (std::int64_t k = 0; k <= k_bullet_max; ++k) {
    for (std::int64_t k2 = k + 1; k2 <= k_bullet_max; ++k2) {
      const DimTriple& x = d[static_cast<std::size_t>(k)];
      const DimTriple& y = d[static_cast<std::size_t>(k2)];
      if (x.d_ur != y.d_ur && x.upper() != y.upper()) {
        t.vacuous();
        continue;
      }
      t.expect((k2 - k) % s.p() != 0, [&] { return kb(k) + " vs " + kb(k2); });
    }
  }
  return t.finish();
}

CheckResult check_parity_corollary(const Setting& s, std::int64_t k_bullet_max) {
  Tally t("parity_corollary");
  const auto& c = s.derived;
  for (std::int64_t k = 0; k <= k_bullet_max; ++k) {
    const std::int64_t A = c.t1 + (((k - c.t1) % (s.p() + 1)) + s.p() + 1) % (s.p() + 1);
    const bool odd = d_ur(s, k) % 2 != 0;
    t.expect(odd ? A <= c.t2 - 1 : A >= c.t2, [&] { return kb(k) + ", A=" + std::to_string(A); });
  }
  return t.finish();
}

CheckResult check_palindrome(const Setting& s, std::int64_t k_bullet_max) {
  Tally t("palindrome");
  for (std::int64_t k = 0; k <= k_bullet_max; ++k) {
    const std::int64_t iw = d_iw(s, k);
    for (std::int64_t n = 0; n <= iw; ++n) {
      t.expect(multiplicity(s, n, k) == multiplicity(s, iw - n, k), [&] { return kb(k) + ", n=" + std::to_string(n); });
    }
  }
  return t.finish();
}

CheckResult check_dnew_nonnegative(const Setting& s, std::int64_t k_bullet_max) {
  Tally t("dnew_nonnegative");
  for (std::int64_t k = 0; k <= k_bullet_max; ++k) {
    const std::int64_t dn = d_new(s, k);
    t.expect(dn >= 0 && dn % 2 == 0 && d_iw(s, k) % 2 == 0, [&] { return kb(k) + ", d_new=" + std::to_string(dn); });
  }
  return t.finish();
}

CheckResult check_window_soundness(const Setting& s, std::int64_t prefix_max) {
  Tally t("window_soundness");
  for (std::int64_t P = 0; P <= prefix_max; ++P) {
    const std::int64_t w = range_window(s, P);
    t.expect(d_ur(s, w + 1) >= P, [&] { return "prefix " + std::to_string(P) + ", window " + std::to_string(w); });
  }
  return t.finish();
}

// ---------------------------------------------------------------------------
// Profile scans

CheckResult check_delta_symmetry(const ProfileCache& cache, std::int64_t k_bullet_max) {
  Tally t("delta_symmetry");
  for (std::int64_t k = 0; k <= k_bullet_max; ++k) {
    const DeltaProfile& prof = cache.get(k);
    if (prof.D < 1) {
      t.vacuous();
      continue;
    }
    for (std::int64_t ell = 1; ell <= prof.D; ++ell) {
      t.expect(prof.raw_at(ell) == prof.raw_at(-ell), [&] { return kb(k) + ", l=" + std::to_string(ell); });
    }
  }
  return t.finish();
}

CheckResult check_hull_shape(const ProfileCache& cache, std::int64_t k_bullet_max) {
  Tally t("hull_shape");
  for (std::int64_t k = 0; k <= k_bullet_max; ++k) {
    const DeltaProfile& prof = cache.get(k);
    if (prof.D < 1) {
      t.vacuous();
      continue;
    }
    const std::int64_t D = prof.D;
    t.expect(prof.hull_at(D) == prof.raw_at(D) && prof.hull_at(-D) == prof.raw_at(-D),
             [&] { return kb(k) + ": hull differs from raw at an end"; });
    for (std::int64_t ell = -D; ell <= D; ++ell) {
      t.expect(prof.hull_at(ell) <= prof.raw_at(ell), [&] { return kb(k) + ": hull above raw at l=" + std::to_string(ell); });
      if (ell > -D && ell < D) {
        const Rational second = prof.hull_at(ell + 1) - 2 * prof.hull_at(ell) + prof.hull_at(ell - 1);
        t.expect(second >= 0, [&] { return kb(k) + ": not convex at l=" + std::to_string(ell); });
      }
    }
  }
  return t.finish();
}

CheckResult check_gap_three_halves(const ProfileCache& cache, std::int64_t k_bullet_max) {
  Tally t("gap_three_halves");
  for (std::int64_t k = 0; k <= k_bullet_max; ++k) {
    const DeltaProfile& prof = cache.get(k);
    if (prof.D < 1) {
      t.vacuous();
      continue;
    }
    t.expect(prof.gap(1) >= rational(3, 2), [&] { return kb(k) + ": gap " + to_string(prof.gap(1)); });
  }
  return t.finish();
}

CheckResult check_gap_bound_lemma(const Setting& s, std::int64_t k_bullet_max) {
  Tally t("gap_bound_lemma");
  const std::int64_t p = s.p();
  for (std::int64_t k = 0; k <= k_bullet_max; ++k) {
    const DimTriple d = dims(s, k);
    const std::int64_t D = d.half_new();
    const std::int64_t n = d.d_ur;
    const Weight w = Weight::from_k_bullet(k);
    const Rational lhs = half_k_minus_2(s, w) - rational((p - 1) * (D - 1) + theta(s, n), 2);
    const Rational rhs = rational((p - 1) * k, p + 1) - (n % 2 != 0 ? 2 : 1);
    t.expect(lhs >= rhs, [&] { return kb(k) + ": " + to_string(lhs) + " < " + to_string(rhs); });
  }
  return t.finish();
}

CheckResult check_key_proposition(const ProfileCache& cache, std::int64_t k_bullet_max) {
  Tally t("key_proposition");
  for (std::int64_t k = 0; k <= k_bullet_max; ++k) {
    const DeltaProfile& prof = cache.get(k);
    if (prof.D < 1) {
      t.vacuous();
      continue;
    }
    const Rational lhs = half_k_minus_2(cache.setting(), prof.k);
    const Rational rhs = prof.gap(prof.D) - 4;
    t.expect(lhs >= rhs, [&] { return kb(k) + ": " + to_string(lhs) + " < " + to_string(rhs); });
  }
  return t.finish();
}

CheckResult check_hull_deviation(const ProfileCache& cache, std::int64_t k_bullet_max) {
  Tally t("hull_deviation");
  const std::int64_t p = cache.setting().p();
  for (std::int64_t k = 0; k <= k_bullet_max; ++k) {
    const DeltaProfile& prof = cache.get(k);
    if (prof.D < 1) {
      t.vacuous();
      continue;
    }
    const Rational dev = prof.raw_at(prof.D - 1) - prof.hull_at(prof.D - 1);
    // Exact comparison when D is a power of p; otherwise the bound is irrational.
    std::int64_t j = 0, q = 1;
    while (q < prof.D) {
      q *= p;
      ++j;
    }
    bool ok = false;
    if (q == prof.D) {
      ok = dev <= rational(3 * j * j);
    } else {
      const long double lg = std::log(static_cast<long double>(prof.D)) / std::log(static_cast<long double>(p));
      ok = static_cast<long double>(dev.get_d()) <= 3.0L * lg * lg;
    }
    t.expect(ok, [&] { return kb(k) + ": deviation " + to_string(dev) + ", D=" + std::to_string(prof.D); });
  }
  return t.finish();
}

CheckResult check_gamma_bound(const Setting& s, std::int64_t k_bullet_max) {
  Tally t("gamma_bound");
  const std::int64_t p = s.p();
  for (std::int64_t k = 1; k <= k_bullet_max; ++k) {
    const DimTriple d = dims(s, k);
    const std::int64_t D = d.half_new();
    if (D < 1) {
      t.vacuous();
      continue;
    }
    const std::int64_t n = d.d_ur;
    const std::int64_t spread = s.half_p_plus_1() * (D - 1);
    const std::int64_t lo = eta(s, n, k) - spread;
    const std::int64_t hi = eta(s, n, k) + theta(s, n) + spread;
    if (lo <= 0 || hi > p * k) {
      t.vacuous();
      continue;
    }
    const int gamma = max_vp_interval(p, lo, hi);
    // gamma <= log_p(p k) iff p^gamma <= p k.
    BigInt pg = pow(p, static_cast<unsigned>(gamma));
    t.expect(pg <= BigInt(big(p * k)), [&] { return kb(k) + ": gamma=" + std::to_string(gamma); });
  }
  return t.finish();
}

CheckResult check_tool_lemma(std::int64_t p, int samples, std::uint64_t seed) {
  Tally t("tool_lemma");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> start(-1'000'000, 1'000'000);
  std::uniform_int_distribution<std::int64_t> length(1, 100'000);
  for (int i = 0; i < samples;) {
    const std::int64_t n1 = start(rng);
    const std::int64_t n2 = n1 + length(rng);
    if (n1 < 0 && n2 >= 0) continue;
    ++i;
    const ValuationSum r = sum_vp(p, n1, n2);
    t.expect(r.lower_holds && r.upper_holds, [&] {
      return "p=" + std::to_string(p) + ", (" + std::to_string(n1) + "," + std::to_string(n2) + ")";
    });
  }
  return t.finish();
}

// ---------------------------------------------------------------------------
// Near-Steinberg scans

CheckResult check_l_implies_vp(const ProfileCache& cache, const std::vector<Weight>& evals, std::int64_t k_bullet_max) {
  Tally t("l_implies_vp");
  const Setting& s = cache.setting();
  std::vector<Weight> all = evals;
  for (std::int64_t k = 0; k <= k_bullet_max; ++k) all.push_back(Weight::from_k_bullet(k));
  for (const Weight& e : all) {
    for (std::int64_t k = 0; k <= k_bullet_max; ++k) {
      const std::optional<std::int64_t> L = l_value(s, e, cache.get(k));
      if (!L) {
        t.vacuous();
        continue;
      }
      const BigInt diff = e.k_bullet - k;
      t.expect(mpz_divisible_ui_p(diff.get_mpz_t(), static_cast<unsigned long>(s.p())) != 0,
               [&] { return "eval " + kb(e) + ", " + kb(k); });
    }
  }
  return t.finish();
}

CheckResult check_nestedness(const ProfileCache& cache, const std::vector<Weight>& evals, std::int64_t k_bullet_max) {
  Tally t("nestedness");
  for (const Weight& e : evals) {
    const std::vector<NSRange> ranges = all_ns_ranges(cache, e, k_bullet_max);
    if (ranges.size() < 2) {
      t.vacuous();
      continue;
    }
    const auto bad = nesting_violation(ranges);
    t.expect(!bad, [&] {
      return "eval " + kb(e) + ": ranges of " + kb(bad->first.k) + " and " + kb(bad->second.k) + " overlap";
    });
  }
  return t.finish();
}

CheckResult check_exclusions(const ProfileCache& cache, const std::vector<Weight>& evals, std::int64_t k_bullet_max) {
  Tally t("exclusions");
  for (const Weight& e : evals) {
    for (std::int64_t k = 0; k <= k_bullet_max; ++k) {
      if (!l_value(cache.setting(), e, cache.get(k))) {
        t.vacuous();
        continue;
      }
      for (std::int64_t k2 = 0; k2 <= k_bullet_max; ++k2) {
        const ExclusionReport r = exclusion_check(cache, e, k, k2);
        if (r.skipped) continue;
        if (!r.hypothesis) {
          t.vacuous();
          continue;
        }
        t.expect(r.holds, [&] { return "eval " + kb(e) + ", " + r.detail; });
      }
    }
  }
  return t.finish();
}

CheckResult check_vertex_correspondence(const ProfileCache& cache, const std::vector<Weight>& evals,
                                        const Rational& bound, const CertifyOptions& options) {
  Tally t("vertex_correspondence");
  for (const Weight& e : evals) {
    const CorrespondenceReport r = vertex_correspondence(cache, e, bound, options);
    t.expect(r.ok(), [&] { return "eval " + kb(e) + ": " + r.violations.front(); });
  }
  return t.finish();
}

CheckResult check_four_part_lemma(const ProfileCache& cache, const std::vector<Weight>& evals,
                                  std::int64_t k_bullet_max, const CertifyOptions& options, unsigned threads) {
  Tally t("four_part_lemma");
  const Setting& s = cache.setting();

  struct Job {
    Weight eval;
    std::vector<std::int64_t> ks;  // weights satisfying the hypothesis
  };
  std::vector<Job> jobs;
  for (const Weight& e : evals) jobs.push_back({e, {}});
  for (std::int64_t k = 1; k <= k_bullet_max; ++k) jobs.push_back({Weight::from_k_bullet(k), {}});
  for (Job& job : jobs) {
    for (std::int64_t k = 0; k <= k_bullet_max; ++k) {
      const DeltaProfile& prof = cache.get(k);
      if (prof.D < 1) continue;
      if (ext_at_least(vp_weight_diff(s.p(), job.eval, prof.k), prof.gap(prof.D))) job.ks.push_back(k);
    }
  }

  // One certified polygon per evaluation weight, at the largest slope any of its weights needs.
  std::vector<std::vector<std::string>> failures(jobs.size());
  std::vector<std::int64_t> counts(jobs.size(), 0);
  parallel_for(jobs.size(), threads, [&](std::size_t i) {
    const Job& job = jobs[i];
    if (job.ks.empty()) return;
    const Rational top = half_k_minus_2(s, Weight::from_k_bullet(job.ks.back()));
    const SlopeMultiset slopes = require_certified_slopes(s, job.eval, top, options);
    for (std::int64_t k : job.ks) {
      ++counts[i];
      const DeltaProfile& prof = cache.get(k);
      const DimTriple d = dims(s, k);
      const std::string where = "eval " + kb(job.eval) + ", " + kb(k);
      const std::optional<NSRange> range = ns_range(s, job.eval, prof);
      if (!range || range->lo() != d.d_ur || range->hi() != d.upper()) {
        failures[i].push_back(where + ": range is not (d_ur, d_iw-d_ur)");
        continue;
      }
      // A range containing this one starts at or below d_ur, hence comes from k' inside the window.
      bool maximal = true;
      for (const NSRange& other : all_ns_ranges(cache, job.eval, range_window(s, d.d_ur), true)) {
        if (other.strictly_contains(*range)) maximal = false;
      }
      if (!maximal) {
        failures[i].push_back(where + ": range is not maximal");
        continue;
      }
      const Rational slope = half_k_minus_2(s, prof.k);
      const bool has_segment = std::any_of(slopes.segments.begin(), slopes.segments.end(), [&](const Segment& seg) {
        return seg.start == d.d_ur && seg.end == d.upper() && seg.slope == slope;
      });
      if (!has_segment) failures[i].push_back(where + ": no segment of slope " + to_string(slope));
    }
  });
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (counts[i] == 0) {
      t.vacuous();
      continue;
    }
    const std::int64_t good = counts[i] - static_cast<std::int64_t>(failures[i].size());
    for (std::int64_t j = 0; j < good; ++j) t.pass();
    for (const std::string& f : failures[i]) t.fail(f);
  }
  return t.finish();
}

std::vector<Weight> default_evaluation_weights(const Setting& s) {
  const std::int64_t p = s.p();
  return {Weight::from_k_bullet(BigInt(1 + pow(p, 4))), Weight::from_k_bullet(BigInt(2 + pow(p, 3))),
          Weight::from_k_bullet(BigInt(3 + 2 * pow(p, 2)))};
}

VerificationReport lemma_suite(const Setting& s, std::int64_t k_bullet_max, const SuiteOptions& options) {
  if (k_bullet_max < 0) throw std::invalid_argument("k_bullet_max must be non-negative");
  const auto start = Clock::now();
  VerificationReport report;
  {
    std::ostringstream grid;
    grid << "p=" << s.p() << " a=" << s.params.a << " s=" << s.params.s << " k_bullet_max=" << k_bullet_max;
    report.grid = grid.str();
  }
  ProfileCache cache(s);
  cache.prefetch(0, k_bullet_max, options.threads);

  const std::int64_t dims_max = std::max<std::int64_t>(k_bullet_max, 500);
  const std::int64_t wide_max = std::max<std::int64_t>(k_bullet_max, 10'000);
  const std::int64_t gamma_max = std::max<std::int64_t>(k_bullet_max, 300);

  const std::vector<Weight> evals = default_evaluation_weights(s);
  std::vector<Weight> scan_evals = evals;
  for (std::int64_t k = 1; k <= std::min<std::int64_t>(k_bullet_max, 12); ++k) {
    scan_evals.push_back(Weight::from_k_bullet(k));
  }

  auto& c = report.checks;
  c.push_back(check_derived_identities(s));
  c.push_back(check_sandwich(s, wide_max));
  c.push_back(check_dim_monotonicity(s, dims_max));
  c.push_back(check_equal_dims_valuation(s, dims_max));
  c.push_back(check_parity_corollary(s, dims_max));
  c.push_back(check_palindrome(s, dims_max));
  c.push_back(check_dnew_nonnegative(s, wide_max));
  c.push_back(check_window_soundness(s, 1000));
  c.push_back(check_delta_symmetry(cache, k_bullet_max));
  c.push_back(check_hull_shape(cache, k_bullet_max));
  c.push_back(check_gap_three_halves(cache, k_bullet_max));
  c.push_back(check_gap_bound_lemma(s, dims_max));
  c.push_back(check_key_proposition(cache, k_bullet_max));
  c.push_back(check_hull_deviation(cache, k_bullet_max));
  c.push_back(check_gamma_bound(s, gamma_max));
  c.push_back(check_tool_lemma(s.p(), options.tool_samples, options.seed));
  c.push_back(check_l_implies_vp(cache, evals, k_bullet_max));
  c.push_back(check_nestedness(cache, scan_evals, k_bullet_max));
  c.push_back(check_exclusions(cache, scan_evals, k_bullet_max));
  c.push_back(check_vertex_correspondence(cache, scan_evals, rational(s.p()), options.certify));
  c.push_back(check_four_part_lemma(cache, evals, k_bullet_max, options.certify, options.threads));
  {
    Tally t("halfint_refinement");
    for (std::int64_t k : {1, 2}) {
      const CheckResult r = halfint_refinement_check(cache, k);
      std::int64_t passed = r.cases;
      if (r.status == Status::fail) {
        t.fail(r.counterexample);
        --passed;
      }
      for (std::int64_t i = 0; i < passed; ++i) t.pass();
      for (std::int64_t i = 0; i < r.vacuous_cases; ++i) t.vacuous();
    }
    c.push_back(t.finish());
  }
  c.push_back(check_figure_constants(s.p()));
  report.seconds = elapsed(start);
  return report;
}

}  // namespace ghostslopes
