#include "ghostslopes/steinberg.hpp"

#include <algorithm>
#include <map>

namespace ghostslopes {

std::optional<std::int64_t> l_value(const Setting& s, const Weight& eval, const DeltaProfile& profile) {
  if (profile.D < 1) return std::nullopt;
  const ExtValuation v = vp_weight_diff(s.p(), eval, profile.k);
  if (v.is_infinite()) return profile.D;
  for (std::int64_t L = profile.D; L >= 1; --L) {
    if (Rational(big(v.value())) >= profile.gap(L)) return L;
  }
  return std::nullopt;
}

std::optional<std::int64_t> l_value(const Setting& s, const Weight& eval, const Weight& k) {
  return l_value(s, eval, delta_profile(s, k));
}

std::optional<NSRange> ns_range(const Setting& s, const Weight& eval, const DeltaProfile& profile) {
  const std::optional<std::int64_t> L = l_value(s, eval, profile);
  if (!L) return std::nullopt;
  return NSRange{profile.k, *L, profile.half_iw};
}

std::optional<NSRange> ns_range(const Setting& s, const Weight& eval, const Weight& k) {
  return ns_range(s, eval, delta_profile(s, k));
}

std::vector<NSRange> all_ns_ranges(const ProfileCache& cache, const Weight& eval, std::int64_t k_bullet_max,
                                   bool prune) {
  const Setting& s = cache.setting();
  std::vector<NSRange> out;
  std::int64_t start = 0, step = 1;
  if (prune) {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), eval.k_bullet.get_mpz_t(), static_cast<unsigned long>(s.p()));
    start = r.get_si();
    step = s.p();
  }
  for (std::int64_t kb = start; kb <= k_bullet_max; kb += step) {
    if (auto range = ns_range(s, eval, cache.get(kb))) out.push_back(*range);
  }
  return out;
}

std::vector<NSRange> maximal_ns_ranges(std::span<const NSRange> ranges) {
  std::vector<NSRange> out;
  for (const NSRange& r : ranges) {
    const bool dominated =
        std::any_of(ranges.begin(), ranges.end(), [&](const NSRange& other) { return other.strictly_contains(r); });
    if (!dominated) out.push_back(r);
  }
  return out;
}

std::optional<std::pair<NSRange, NSRange>> nesting_violation(std::span<const NSRange> ranges) {
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    for (std::size_t j = i + 1; j < ranges.size(); ++j) {
      const NSRange& x = ranges[i];
      const NSRange& y = ranges[j];
      if (!x.disjoint(y) && !x.contains(y) && !y.contains(x)) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

std::int64_t range_window(const Setting& s, std::int64_t prefix_end) {
  return ceil_div((s.p() + 1) * (prefix_end + 2), 2);
}

namespace {

std::string describe(const NSRange& r) {
  return "(" + std::to_string(r.lo()) + "," + std::to_string(r.hi()) + ") from k_bullet=" + to_string(r.k.k_bullet);
}

std::string describe(const Segment& g) {
  return "[" + std::to_string(g.start) + "," + std::to_string(g.end) + "] slope " + to_string(g.slope);
}

}  // namespace

CorrespondenceReport vertex_correspondence(const ProfileCache& cache, const Weight& eval, const Rational& bound,
                                           const CertifyOptions& options, bool prune) {
  const Setting& s = cache.setting();
  const SlopeMultiset slopes = require_certified_slopes(s, eval, bound, options);
  CorrespondenceReport report;
  report.bound = bound;
  report.prefix_end = slopes.certificate->last_vertex.index;
  report.segments = slopes.segments;
  report.window = range_window(s, report.prefix_end);
  const std::int64_t P = report.prefix_end;

  if (d_ur(s, report.window + 1) < P) {
    report.violations.push_back("search window too small: d_ur(" + std::to_string(report.window + 1) + ") < " +
                                std::to_string(P));
  }

  const std::vector<NSRange> all = all_ns_ranges(cache, eval, report.window, prune);
  report.maximal = maximal_ns_ranges(all);

  std::map<std::pair<std::int64_t, std::int64_t>, const Segment*> by_ends;
  for (const Segment& g : report.segments) by_ends[{g.start, g.end}] = &g;

  std::vector<bool> segment_matched(report.segments.size(), false);
  for (const NSRange& r : report.maximal) {
    if (r.lo() >= P) continue;
    if (r.hi() > P) {
      report.violations.push_back("maximal range " + describe(r) + " straddles the certified prefix end " +
                                  std::to_string(P));
      continue;
    }
    auto it = by_ends.find({r.lo(), r.hi()});
    if (it == by_ends.end()) {
      report.violations.push_back("maximal range " + describe(r) + " has no matching segment");
      continue;
    }
    report.matched.emplace_back(r, *it->second);
    segment_matched[static_cast<std::size_t>(it->second - report.segments.data())] = true;
  }
  for (std::size_t i = 0; i < report.segments.size(); ++i) {
    if (report.segments[i].length() >= 2 && !segment_matched[i]) {
      report.violations.push_back("segment " + describe(report.segments[i]) + " has no matching maximal range");
    }
  }

  // Vertices of the prefix are exactly the indices outside every range.
  std::vector<bool> is_vertex(static_cast<std::size_t>(P) + 1, false);
  for (const Segment& g : report.segments) {
    is_vertex[static_cast<std::size_t>(g.start)] = true;
    is_vertex[static_cast<std::size_t>(g.end)] = true;
  }
  is_vertex[static_cast<std::size_t>(P)] = true;
  for (std::int64_t n = 0; n <= P; ++n) {
    const bool covered = std::any_of(all.begin(), all.end(), [&](const NSRange& r) { return r.contains_point(n); });
    if (covered == is_vertex[static_cast<std::size_t>(n)]) {
      report.violations.push_back("index " + std::to_string(n) + (covered ? " is a vertex inside a range"
                                                                          : " is interior but outside every range"));
    }
  }
  return report;
}

ExclusionReport exclusion_check(const ProfileCache& cache, const Weight& eval, std::int64_t k_bullet,
                                std::int64_t k_prime_bullet) {
  ExclusionReport out;
  if (k_bullet == k_prime_bullet) {
    out.skipped = true;
    return out;
  }
  const Setting& s = cache.setting();
  const DeltaProfile& profile = cache.get(k_bullet);
  const std::optional<std::int64_t> L = l_value(s, eval, profile);
  if (!L) return out;
  const Weight k_prime = Weight::from_k_bullet(k_prime_bullet);
  const ExtValuation v = vp_weight_diff(s.p(), k_prime, profile.k);
  if (Rational(big(v.value())) < profile.gap(*L)) return out;
  out.hypothesis = true;

  const NSRange range{profile.k, *L, profile.half_iw};
  const DimTriple d = dims(s, k_prime_bullet);
  std::vector<std::string> problems;
  if (range.lo() <= d.half_iw() && d.half_iw() <= range.hi()) problems.push_back("d_iw/2=" + std::to_string(d.half_iw()));
  if (range.contains_point(d.d_ur)) problems.push_back("d_ur=" + std::to_string(d.d_ur));
  if (range.contains_point(d.upper())) problems.push_back("d_iw-d_ur=" + std::to_string(d.upper()));
  if (!problems.empty()) {
    out.holds = false;
    out.detail = "k_bullet=" + std::to_string(k_bullet) + ", k'_bullet=" + std::to_string(k_prime_bullet) + ": ";
    for (std::size_t i = 0; i < problems.size(); ++i) out.detail += (i ? ", " : "") + problems[i];
    out.detail += " inside " + describe(range);
  }
  return out;
}

}  // namespace ghostslopes
