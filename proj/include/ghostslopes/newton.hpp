#pragma once

// Newton polygons of the ghost series at a weight, with certified truncation.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ghostslopes/dims.hpp"
#include "ghostslopes/numeric.hpp"
#include "ghostslopes/params.hpp"
#include "ghostslopes/valuation.hpp"

namespace ghostslopes {

struct HullPoint {
  std::int64_t index = 0;
  ExtValuation value;
};

struct Vertex {
  std::int64_t index = 0;
  std::int64_t value = 0;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Segment {
  std::int64_t start = 0;
  std::int64_t end = 0;
  Rational slope;

  std::int64_t length() const { return end - start; }
  friend bool operator==(const Segment& x, const Segment& y) {
    return x.start == y.start && x.end == y.end && x.slope == y.slope;
  }
};

class NewtonPolygon {
 public:
  NewtonPolygon() = default;
  /// Throws std::invalid_argument unless indices and slopes are strictly increasing.
  explicit NewtonPolygon(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::vector<Segment> segments() const;
  bool has_vertex_at(std::int64_t index) const;
  /// Index of the last vertex, i.e. the right end of the polygon.
  std::int64_t last_index() const { return vertices_.empty() ? 0 : vertices_.back().index; }

  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;

 private:
  std::vector<Vertex> vertices_;
};

/// Lower convex hull of the finite points; infinite points are ignored and collinear
/// interior points absorbed. Throws std::invalid_argument for empty input, non-increasing
/// indices, or an infinite first point.
NewtonPolygon lower_hull(std::span<const HullPoint> points);

/// Hull of (n, v_p(g_n(w_eval))) for n in [0, N].
NewtonPolygon ghost_np(const Setting& s, const Weight& eval, std::int64_t N);

/// sum_k m_n(k): a lower bound for v_p(g_n) at every evaluation weight, since each
/// linear factor has valuation at least 1.
std::int64_t tail_lower_bound(const Setting& s, std::int64_t n);

/// (p-3) n (n-4) / 8, a closed-form lower bound for tail_lower_bound(n) when n >= 5.
/// Counts k_bullet in [n, (p+1)n/4], each with m_n(k) >= n/2 - 2.
Rational tail_quadratic_bound(std::int64_t p, std::int64_t n);

struct TruncationCertificate {
  std::int64_t computed_up_to = 0;  // the hull is exact on [0, computed_up_to]
  Vertex last_vertex;               // first vertex whose outgoing slope exceeds the bound
  Rational next_slope;
  std::int64_t crossover = 0;       // tail_quadratic_bound beats the bound line for n >= crossover
  std::string argument;
};

struct SlopeEntry {
  Rational slope;
  std::int64_t multiplicity = 0;
  friend bool operator==(const SlopeEntry& x, const SlopeEntry& y) {
    return x.slope == y.slope && x.multiplicity == y.multiplicity;
  }
};

struct SlopeMultiset {
  std::vector<SlopeEntry> entries;  // sorted by slope
  Rational bound;
  bool certified = false;
  std::int64_t truncation = 0;
  std::vector<Segment> segments;  // the certified segments, left to right
  std::optional<TruncationCertificate> certificate;
  std::string failure;  // set when uncertified

  std::int64_t total_multiplicity() const;
};

struct CertifyOptions {
  std::int64_t n_max = 1'000'000;
  std::int64_t initial_n = 16;
};

/// All Newton-polygon slopes <= bound with multiplicities, or an explicitly uncertified
/// result if the truncation argument does not close within options.n_max.
SlopeMultiset certified_slopes(const Setting& s, const Weight& eval, const Rational& bound,
                               const CertifyOptions& options = {});

/// Raised by callers that need a certified answer and did not get one.
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// certified_slopes, throwing CertificationError instead of returning uncertified.
SlopeMultiset require_certified_slopes(const Setting& s, const Weight& eval, const Rational& bound,
                                       const CertifyOptions& options = {});

}  // namespace ghostslopes
