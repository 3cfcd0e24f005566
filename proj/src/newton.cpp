#include "ghostslopes/newton.hpp"

#include <algorithm>
#include <sstream>

#include "ghostslopes/detail/hull.hpp"
#include "ghostslopes/ghost.hpp"

namespace ghostslopes {

NewtonPolygon::NewtonPolygon(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    if (vertices_[i].index <= vertices_[i - 1].index) throw std::invalid_argument("NewtonPolygon: indices not increasing");
  }
  const std::vector<Segment> segs = segments();
  for (std::size_t i = 1; i < segs.size(); ++i) {
    if (segs[i].slope <= segs[i - 1].slope) throw std::invalid_argument("NewtonPolygon: slopes not increasing");
  }
}

std::vector<Segment> NewtonPolygon::segments() const {
  std::vector<Segment> out;
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    const Vertex& a = vertices_[i - 1];
    const Vertex& b = vertices_[i];
    out.push_back(Segment{a.index, b.index, rational(b.value - a.value, b.index - a.index)});
  }
  return out;
}

bool NewtonPolygon::has_vertex_at(std::int64_t index) const {
  return std::any_of(vertices_.begin(), vertices_.end(), [&](const Vertex& v) { return v.index == index; });
}

NewtonPolygon lower_hull(std::span<const HullPoint> points) {
  if (points.empty()) throw std::invalid_argument("lower_hull: empty input");
  if (points.front().value.is_infinite()) throw std::invalid_argument("lower_hull: first point is infinite");
  std::vector<std::int64_t> xs, ys;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i > 0 && points[i].index <= points[i - 1].index) throw std::invalid_argument("lower_hull: indices not increasing");
    if (points[i].value.is_infinite()) continue;
    xs.push_back(points[i].index);
    ys.push_back(points[i].value.value());
  }
  std::vector<Vertex> vertices;
  for (std::size_t pos : detail::lower_hull_positions(xs, ys)) vertices.push_back(Vertex{xs[pos], ys[pos]});
  return NewtonPolygon(std::move(vertices));
}

namespace {

NewtonPolygon hull_of(const std::vector<ExtValuation>& vals) {
  std::vector<HullPoint> points;
  points.reserve(vals.size());
  for (std::size_t n = 0; n < vals.size(); ++n) points.push_back(HullPoint{static_cast<std::int64_t>(n), vals[n]});
  return lower_hull(points);
}

// value - (v + bound (n - i)) for the line through vertex (i, v) with slope `bound`.
Rational excess_over_line(const Rational& value, const Vertex& v, const Rational& bound, std::int64_t n) {
  return value - (Rational(big(v.value)) + bound * big(n - v.index));
}

}  // namespace

NewtonPolygon ghost_np(const Setting& s, const Weight& eval, std::int64_t N) {
  if (N < 1) throw std::invalid_argument("ghost_np: N must be at least 1");
  return hull_of(coefficient_valuations(s, eval, N));
}

std::int64_t tail_lower_bound(const Setting& s, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("tail_lower_bound: negative index");
  const KBulletRange window = support(s, n);
  std::int64_t total = 0;
  for (std::int64_t kb = window.lo; kb <= window.hi; ++kb) total += multiplicity(s, n, kb);
  return total;
}

Rational tail_quadratic_bound(std::int64_t p, std::int64_t n) {
  return rational(BigInt(big(p - 3) * big(n) * big(n - 4)), big(8));
}

std::int64_t SlopeMultiset::total_multiplicity() const {
  std::int64_t total = 0;
  for (const SlopeEntry& e : entries) total += e.multiplicity;
  return total;
}

SlopeMultiset certified_slopes(const Setting& s, const Weight& eval, const Rational& bound,
                               const CertifyOptions& options) {
  if (bound < 0) throw std::invalid_argument("certified_slopes: negative slope bound");
  SlopeMultiset out;
  out.bound = bound;
  const std::int64_t p = s.p();
  std::int64_t N = std::clamp<std::int64_t>(options.initial_n, 1, std::max<std::int64_t>(options.n_max, 1));

  while (true) {
    const NewtonPolygon np = hull_of(coefficient_valuations(s, eval, N));
    const std::vector<Segment> segs = np.segments();
    auto steep = std::find_if(segs.begin(), segs.end(), [&](const Segment& g) { return g.slope > bound; });

    std::int64_t grow_to = 2 * N;
    if (steep != segs.end()) {
      const Vertex corner = *std::find_if(np.vertices().begin(), np.vertices().end(),
                                          [&](const Vertex& v) { return v.index == steep->start; });
      auto f = [&](std::int64_t n) { return excess_over_line(tail_quadratic_bound(p, n), corner, bound, n); };

      // The quadratic bound minus the line is convex; it is non-decreasing from
      // ceil((8 bound/(p-3) + 3)/2) on.
      Rational turn = (Rational(8) * bound / (p - 3) + 3) / 2;
      BigInt turn_ceil;
      mpz_cdiv_q(turn_ceil.get_mpz_t(), turn.get_num_mpz_t(), turn.get_den_mpz_t());
      std::int64_t start = std::max<std::int64_t>({N + 1, 5, to_int64(turn_ceil)});
      std::int64_t crossover = start;
      if (f(start) <= 0) {
        std::int64_t lo = start, hi = start;
        while (f(hi) <= 0) {
          lo = hi;
          hi *= 2;
        }
        while (hi - lo > 1) {
          const std::int64_t mid = lo + (hi - lo) / 2;
          (f(mid) > 0 ? hi : lo) = mid;
        }
        crossover = hi;
      }

      std::int64_t failed_at = -1;
      if (crossover - 1 > N) {
        const std::vector<std::int64_t> totals = multiplicity_totals(s, crossover - 1);
        for (std::int64_t n = N + 1; n < crossover; ++n) {
          if (excess_over_line(Rational(big(totals[static_cast<std::size_t>(n)])), corner, bound, n) <= 0) {
            failed_at = n;
            break;
          }
        }
      }

      if (failed_at < 0) {
        out.certified = true;
        out.truncation = N;
        for (auto it = segs.begin(); it != steep; ++it) {
          out.segments.push_back(*it);
          out.entries.push_back(SlopeEntry{it->slope, it->length()});
        }
        std::ostringstream arg;
        arg << "hull exact on [0," << N << "]; vertex (" << corner.index << "," << corner.value
            << ") leaves with slope " << to_string(steep->slope) << " > " << to_string(bound)
            << "; tail_lower_bound(n) > line checked for " << N << " < n < " << crossover
            << "; (p-3)n(n-4)/8 > line for n >= " << crossover;
        out.certificate = TruncationCertificate{N, corner, steep->slope, crossover, arg.str()};
        return out;
      }
      grow_to = std::max(grow_to, failed_at);
    }

    if (N >= options.n_max) {
      out.truncation = N;
      out.failure = "could not certify slopes <= " + to_string(bound) + " within n_max=" + std::to_string(options.n_max);
      return out;
    }
    N = std::min(grow_to, options.n_max);
  }
}

SlopeMultiset require_certified_slopes(const Setting& s, const Weight& eval, const Rational& bound,
                                       const CertifyOptions& options) {
  SlopeMultiset result = certified_slopes(s, eval, bound, options);
  if (!result.certified) throw CertificationError(result.failure);
  return result;
}

}  // namespace ghostslopes
