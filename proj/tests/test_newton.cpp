#include <doctest.h>

#include <random>

#include "ghostslopes/ghost.hpp"
#include "ghostslopes/newton.hpp"
#include "oracle.hpp"

using namespace ghostslopes;

namespace {

Weight W(std::int64_t kb) { return Weight::from_k_bullet(kb); }

std::vector<HullPoint> points(std::initializer_list<std::int64_t> values) {
  std::vector<HullPoint> out;
  std::int64_t i = 0;
  for (std::int64_t v : values) out.push_back({i++, v < 0 ? ExtValuation::infinity() : ExtValuation(v)});
  return out;
}

std::vector<std::int64_t> indices(const NewtonPolygon& np) {
  std::vector<std::int64_t> out;
  for (const Vertex& v : np.vertices()) out.push_back(v.index);
  return out;
}

}  // namespace

TEST_CASE("lower hull examples") {
  NewtonPolygon np = lower_hull(points({0, 0, 3, 13, 26}));
  CHECK(indices(np) == std::vector<std::int64_t>{0, 1, 2, 3, 4});
  std::vector<Segment> segs = np.segments();
  REQUIRE(segs.size() == 4);
  CHECK(segs[0].slope == 0);
  CHECK(segs[1].slope == 3);
  CHECK(segs[2].slope == 10);
  CHECK(segs[3].slope == 13);

  np = lower_hull(points({0, 0, 7, 12}));
  CHECK(indices(np) == std::vector<std::int64_t>{0, 1, 3});
  segs = np.segments();
  REQUIRE(segs.size() == 2);
  CHECK(segs[1].slope == 6);
  CHECK(segs[1].length() == 2);

  np = lower_hull(points({0, -1, 4}));
  CHECK(indices(np) == std::vector<std::int64_t>{0, 2});
  CHECK(np.segments()[0].slope == 2);
  CHECK(np.segments()[0].length() == 2);

  CHECK_THROWS_AS(lower_hull(std::vector<HullPoint>{}), std::invalid_argument);
  CHECK_THROWS_AS(lower_hull(points({-1, 0})), std::invalid_argument);
}

TEST_CASE("collinear points are absorbed") {
  const NewtonPolygon np = lower_hull(points({0, 1, 2, 3, 10}));
  CHECK(indices(np) == std::vector<std::int64_t>{0, 3, 4});
}

TEST_CASE("lower hull agrees with the cubic oracle on random point sets") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 30);
    std::vector<HullPoint> pts;
    std::vector<std::pair<std::int64_t, std::int64_t>> finite;
    std::int64_t x = 0;
    for (int i = 0; i < n; ++i) {
      const std::int64_t y = static_cast<std::int64_t>(rng() % 200) - 50 + (trial % 3 == 0 ? x * x : 0);
      const bool infinite = i > 0 && rng() % 6 == 0;
      pts.push_back({x, infinite ? ExtValuation::infinity() : ExtValuation(std::max<std::int64_t>(y, 0))});
      if (!infinite) finite.emplace_back(x, std::max<std::int64_t>(y, 0));
      x += 1 + static_cast<std::int64_t>(rng() % 3);
    }
    std::vector<std::int64_t> expected;
    for (std::size_t i : oracle::hull_vertices(finite)) expected.push_back(finite[i].first);
    CHECK(indices(lower_hull(pts)) == expected);
  }
}

TEST_CASE("ghost Newton polygons") {
  const Setting s = make_setting(11, 2, 0);
  NewtonPolygon np = ghost_np(s, W(0), 4);
  std::vector<Segment> segs = np.segments();
  REQUIRE(segs.size() == 4);
  CHECK(segs[0].slope == 0);
  CHECK(segs[1].slope == 3);
  CHECK(segs[2].slope == 10);
  CHECK(segs[3].slope == 13);
  np = ghost_np(s, W(14642), 3);
  CHECK(np.vertices() == std::vector<Vertex>{{0, 0}, {1, 0}, {3, 12}});
  for (const oracle::Constants& c : oracle::grid()) {
    const NewtonPolygon one = ghost_np(make_setting(c.p, c.a, c.s), W(14642), 1);
    REQUIRE(one.segments().size() == 1);
    CHECK(one.segments()[0].slope == *oracle::gn(c, 1, 14642) - *oracle::gn(c, 0, 14642));
  }
  CHECK_THROWS_AS(ghost_np(s, W(0), 0), std::invalid_argument);
}

TEST_CASE("tail lower bounds") {
  const Setting s = make_setting(11, 2, 0);
  CHECK(tail_lower_bound(s, 2) == 3);
  CHECK(tail_lower_bound(s, 0) == 0);
  CHECK(tail_lower_bound(s, 3) == 12);
  for (const oracle::Constants& c : oracle::grid()) {
    const Setting g = make_setting(c.p, c.a, c.s);
    for (std::int64_t n = 5; n <= 300; n += 7) CHECK(tail_quadratic_bound(c.p, n) <= tail_lower_bound(g, n));
    for (std::int64_t e : {0, 3, 14642}) {
      const std::vector<ExtValuation> v = coefficient_valuations(g, W(e), 60);
      for (std::int64_t n = 0; n <= 60; ++n) CHECK(v[static_cast<std::size_t>(n)] >= ExtValuation(tail_lower_bound(g, n)));
    }
  }
}

TEST_CASE("certified slopes") {
  const Setting s = make_setting(11, 2, 0);
  SlopeMultiset m = certified_slopes(s, W(0), 3);
  CHECK(m.certified);
  CHECK(m.entries == std::vector<SlopeEntry>{{0, 1}, {3, 1}});
  REQUIRE(m.certificate.has_value());
  CHECK(m.certificate->last_vertex.index == 2);
  CHECK(m.certificate->next_slope > 3);

  m = certified_slopes(s, W(1), 0);
  CHECK(m.certified);
  CHECK(m.entries == std::vector<SlopeEntry>{{0, 1}});
  m = certified_slopes(s, W(14642), 0);
  CHECK(m.certified);
  CHECK(m.entries == std::vector<SlopeEntry>{{0, 1}});
  CHECK_THROWS_AS(certified_slopes(s, W(0), -1), std::invalid_argument);
}

TEST_CASE("uncertified results are explicit") {
  const Setting s = make_setting(11, 2, 0);
  CertifyOptions tiny;
  tiny.n_max = 3;
  tiny.initial_n = 2;
  const SlopeMultiset m = certified_slopes(s, W(0), 40, tiny);
  CHECK_FALSE(m.certified);
  CHECK_FALSE(m.failure.empty());
  CHECK_THROWS_AS(require_certified_slopes(s, W(0), 40, tiny), CertificationError);
}

TEST_CASE("sum rule and refinement stability") {
  for (const oracle::Constants& c : oracle::grid()) {
    const Setting s = make_setting(c.p, c.a, c.s);
    for (std::int64_t e : {0, 2, 7, 14642}) {
      for (std::int64_t b : {0, 2, 5, 13}) {
        const SlopeMultiset m = require_certified_slopes(s, W(e), b);
        CHECK(m.total_multiplicity() == m.certificate->last_vertex.index);
        for (const SlopeEntry& entry : m.entries) CHECK(entry.slope <= b);
        // The certified segments reappear in every longer truncation.
        const std::int64_t V = m.certificate->last_vertex.index;
        for (std::int64_t N : {V + 1, 2 * V + 5, m.truncation + 40}) {
          std::vector<Segment> prefix;
          for (const Segment& seg : ghost_np(s, W(e), std::max<std::int64_t>(N, 1)).segments()) {
            if (seg.end <= V) prefix.push_back(seg);
          }
          CHECK(prefix == m.segments);
        }
      }
    }
  }
}

TEST_CASE("newton polygon validation") {
  CHECK_THROWS_AS(NewtonPolygon({{0, 0}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(NewtonPolygon({{0, 0}, {1, 2}, {2, 3}}), std::invalid_argument);
  const NewtonPolygon np({{0, 0}, {1, 0}, {3, 12}});
  CHECK(np.has_vertex_at(1));
  CHECK_FALSE(np.has_vertex_at(2));
  CHECK(np.last_index() == 3);
}
