#include "ghostslopes/ghost.hpp"

#include <stdexcept>
#include <string>

#include "ghostslopes/detail/hull.hpp"
#include "ghostslopes/parallel.hpp"

namespace ghostslopes {

namespace {

ExtValuation sum_over_support(const Setting& s, std::int64_t n, const Weight& eval, const Weight* hat) {
  const OffsetValuation offset(s.p(), eval.k_bullet);
  const KBulletRange window = support(s, n);
  ExtValuation total;
  for (std::int64_t kb = window.lo; kb <= window.hi; ++kb) {
    const std::int64_t m = multiplicity(s, n, kb);
    if (m == 0) continue;
    if (hat != nullptr && hat->k_bullet == kb) continue;
    const ExtValuation v = offset.at(kb);
    if (v.is_infinite()) return ExtValuation::infinity();
    total += ExtValuation(m * (v.value() + 1));
  }
  return total;
}

// Accumulates piecewise-linear tents c * min(n - lo, hi - n) on (lo, hi) through
// second differences, truncated to [0, n_max].
class TentAccumulator {
 public:
  explicit TentAccumulator(std::int64_t n_max) : n_max_(n_max), slope_change_(static_cast<std::size_t>(n_max) + 2, 0) {}

  void add(std::int64_t lo, std::int64_t mid, std::int64_t hi, std::int64_t c) {
    bump(lo + 1, c);
    bump(mid + 1, -2 * c);
    bump(hi + 1, c);
  }

  std::vector<std::int64_t> values() const {
    std::vector<std::int64_t> out(static_cast<std::size_t>(n_max_) + 1);
    std::int64_t slope = 0, value = 0;
    for (std::int64_t n = 0; n <= n_max_; ++n) {
      slope += slope_change_[static_cast<std::size_t>(n)];
      value += slope;
      out[static_cast<std::size_t>(n)] = value;
    }
    return out;
  }

 private:
  void bump(std::int64_t at, std::int64_t c) {
    if (at >= 0 && at <= n_max_) slope_change_[static_cast<std::size_t>(at)] += c;
  }

  std::int64_t n_max_;
  std::vector<std::int64_t> slope_change_;
};

}  // namespace

ExtValuation gn_valuation(const Setting& s, std::int64_t n, const Weight& eval) {
  if (n < 0) throw std::invalid_argument("gn_valuation: negative index");
  return sum_over_support(s, n, eval, nullptr);
}

ExtValuation gn_hat_valuation(const Setting& s, std::int64_t n, const Weight& eval, const Weight& hat) {
  if (n < 0) throw std::invalid_argument("gn_hat_valuation: negative index");
  return sum_over_support(s, n, eval, &hat);
}

std::vector<ExtValuation> coefficient_valuations(const Setting& s, const Weight& eval, std::int64_t n_max,
                                                 const Weight* hat) {
  if (n_max < 0) throw std::invalid_argument("coefficient_valuations: negative n_max");
  const OffsetValuation offset(s.p(), eval.k_bullet);
  const KBulletRange window = support(s, n_max);
  TentAccumulator tents(n_max);
  std::int64_t inf_lo = 0, inf_hi = 0;  // open interval of infinite entries
  bool has_inf = false;
  for (std::int64_t kb = window.lo; kb <= window.hi; ++kb) {
    const std::int64_t lo = d_ur(s, kb);
    const std::int64_t iw = d_iw(s, kb);
    const std::int64_t hi = iw - lo;
    if (hi - lo < 2 || lo >= n_max) continue;
    if (hat != nullptr && hat->k_bullet == kb) continue;
    const ExtValuation v = offset.at(kb);
    if (v.is_infinite()) {
      has_inf = true;
      inf_lo = lo;
      inf_hi = hi;
      continue;
    }
    tents.add(lo, iw / 2, hi, v.value() + 1);
  }
  const std::vector<std::int64_t> finite = tents.values();
  std::vector<ExtValuation> out;
  out.reserve(finite.size());
  for (std::int64_t n = 0; n <= n_max; ++n) {
    if (has_inf && n > inf_lo && n < inf_hi) {
      out.push_back(ExtValuation::infinity());
    } else {
      out.emplace_back(finite[static_cast<std::size_t>(n)]);
    }
  }
  return out;
}

std::vector<std::int64_t> multiplicity_totals(const Setting& s, std::int64_t n_max) {
  if (n_max < 0) throw std::invalid_argument("multiplicity_totals: negative n_max");
  const KBulletRange window = support(s, n_max);
  TentAccumulator tents(n_max);
  for (std::int64_t kb = window.lo; kb <= window.hi; ++kb) {
    const std::int64_t lo = d_ur(s, kb);
    const std::int64_t iw = d_iw(s, kb);
    const std::int64_t hi = iw - lo;
    if (hi - lo < 2 || lo >= n_max) continue;
    tents.add(lo, iw / 2, hi, 1);
  }
  return tents.values();
}

Rational delta_prime(const Setting& s, const Weight& k, std::int64_t ell) {
  const DimTriple d = dims(s, k);
  const std::int64_t D = d.half_new();
  if (ell < -D || ell > D) {
    throw std::out_of_range("delta_prime: l=" + std::to_string(ell) + " outside [-" + std::to_string(D) + ", " +
                            std::to_string(D) + "]");
  }
  const ExtValuation v = gn_hat_valuation(s, d.half_iw() + ell, k, k);
  const Rational half_slope = rational(k.k(s) - 2, big(2));
  return Rational(v.value()) - half_slope * ell;
}

DeltaProfile delta_profile(const Setting& s, const Weight& k) {
  const std::int64_t kb = k.small();
  if (kb > max_profile_k_bullet) throw std::length_error("delta_profile: k_bullet too large");
  const DimTriple d = dims(s, kb);
  DeltaProfile out;
  out.k = k;
  out.half_iw = d.half_iw();
  out.D = d.half_new();
  if (out.D == 0) return out;

  const std::int64_t D = out.D;
  const std::int64_t k_minus_2 = s.derived.k_eps + kb * (s.p() - 1) - 2;
  const std::vector<ExtValuation> vals = coefficient_valuations(s, k, d.upper(), &k);

  // Doubled values 2 Delta'_l are integers; the hull runs on those.
  std::vector<std::int64_t> xs, ys;
  xs.reserve(static_cast<std::size_t>(2 * D + 1));
  ys.reserve(xs.capacity());
  for (std::int64_t ell = -D; ell <= D; ++ell) {
    const std::int64_t v = vals.at(static_cast<std::size_t>(d.half_iw() + ell)).value();
    xs.push_back(ell);
    ys.push_back(2 * v - k_minus_2 * ell);
  }
  for (std::int64_t y : ys) out.raw.push_back(rational(y, 2));

  const std::vector<std::size_t> vertices = detail::lower_hull_positions(xs, ys);
  out.hull.resize(out.raw.size());
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    const std::size_t a = vertices[i], b = vertices[i + 1];
    const Rational slope = rational(big(ys[b] - ys[a]), big(2 * (xs[b] - xs[a])));
    for (std::size_t j = a; j <= b; ++j) out.hull[j] = out.raw[a] + slope * big(xs[j] - xs[a]);
  }
  if (vertices.size() == 1) out.hull[vertices[0]] = out.raw[vertices[0]];
  for (std::size_t v : vertices) out.hull_vertices.push_back(xs[v]);

  for (std::int64_t L = 1; L <= D; ++L) out.gaps.push_back(out.hull_at(L) - out.hull_at(L - 1));
  return out;
}

const DeltaProfile& ProfileCache::get(std::int64_t k_bullet) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(k_bullet); it != cache_.end()) return *it->second;
  }
  auto profile = std::make_unique<DeltaProfile>(delta_profile(setting_, Weight::from_k_bullet(k_bullet)));
  std::lock_guard lock(mutex_);
  auto [it, inserted] = cache_.try_emplace(k_bullet, std::move(profile));
  return *it->second;
}

void ProfileCache::prefetch(std::int64_t lo, std::int64_t hi, unsigned threads) const {
  if (hi < lo) return;
  parallel_for(static_cast<std::size_t>(hi - lo + 1), threads,
               [&](std::size_t i) { (void)get(lo + static_cast<std::int64_t>(i)); });
}

}  // namespace ghostslopes
