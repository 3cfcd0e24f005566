#include <doctest.h>

#include <random>

#include "ghostslopes/ghost.hpp"
#include "oracle.hpp"

using namespace ghostslopes;

namespace {

Weight W(std::int64_t kb) { return Weight::from_k_bullet(kb); }

bool same(const ExtValuation& v, const std::optional<std::int64_t>& o) {
  return o ? (v.is_finite() && v.value() == *o) : v.is_infinite();
}

}  // namespace

TEST_CASE("coefficient valuation examples") {
  const Setting s = make_setting(11, 2, 0);
  // g_2 at k_bullet=0 (k=4): factors at k_bullet 1, 2, 3, each with valuation 1.
  CHECK(gn_valuation(s, 2, W(0)) == ExtValuation(3));
  CHECK(gn_valuation(s, 0, W(0)) == ExtValuation(0));
  CHECK(gn_valuation(s, 0, W(14642)) == ExtValuation(0));
  // (v_p(14641)+1) + 1 + 1
  CHECK(gn_valuation(s, 2, W(14642)) == ExtValuation(7));
  CHECK(gn_valuation(s, 2, W(2)).is_infinite());
}

TEST_CASE("hat valuations") {
  const Setting s = make_setting(11, 2, 0);
  CHECK(gn_hat_valuation(s, 2, W(1), W(1)) == ExtValuation(2));
  // k_bullet 2..11 with multiplicities 2, 2, 1 x 8
  CHECK(gn_hat_valuation(s, 3, W(1), W(1)) == ExtValuation(12));
  for (std::int64_t n = 0; n < 12; ++n) {
    if (multiplicity(s, n, 30) == 0) CHECK(gn_hat_valuation(s, n, W(5), W(30)) == gn_valuation(s, n, W(5)));
  }
}

TEST_CASE("coefficient valuations agree with brute-force re-summation on the grid") {
  std::mt19937_64 rng(99);
  for (const oracle::Constants& c : oracle::grid()) {
    const Setting s = make_setting(c.p, c.a, c.s);
    std::vector<std::int64_t> evals{0, 1, 2, 3, 14642, c.p * c.p + 1, 28561 + 2};
    for (int i = 0; i < 4; ++i) evals.push_back(static_cast<std::int64_t>(rng() % 120));
    for (std::int64_t e : evals) {
      const std::vector<ExtValuation> fast = coefficient_valuations(s, W(e), 40);
      const std::optional<std::int64_t> hat = e <= 60 ? std::optional<std::int64_t>(e) : std::nullopt;
      for (std::int64_t n = 0; n <= 40; ++n) {
        CHECK(same(fast[static_cast<std::size_t>(n)], oracle::gn(c, n, e)));
        CHECK(same(gn_valuation(s, n, W(e)), oracle::gn(c, n, e)));
      }
      if (hat) {
        const Weight h = W(*hat);
        const std::vector<ExtValuation> with_hat = coefficient_valuations(s, W(e), 40, &h);
        for (std::int64_t n = 0; n <= 40; ++n) {
          CHECK(same(with_hat[static_cast<std::size_t>(n)], oracle::gn(c, n, e, 500, hat)));
          CHECK(same(gn_hat_valuation(s, n, W(e), h), oracle::gn(c, n, e, 500, hat)));
        }
      }
    }
  }
}

TEST_CASE("multiplicity totals agree with direct sums") {
  for (const oracle::Constants& c : oracle::grid()) {
    const Setting s = make_setting(c.p, c.a, c.s);
    const std::vector<std::int64_t> totals = multiplicity_totals(s, 60);
    for (std::int64_t n = 0; n <= 60; ++n) {
      std::int64_t brute = 0;
      for (std::int64_t kb = 0; kb <= 1000; ++kb) brute += oracle::mult(c, n, kb);
      CHECK(totals[static_cast<std::size_t>(n)] == brute);
    }
  }
}

TEST_CASE("delta_prime examples") {
  const Setting s = make_setting(11, 2, 0);
  const Weight k14 = W(1);
  CHECK(delta_prime(s, k14, -1) == 6);
  CHECK(delta_prime(s, k14, 0) == 2);
  CHECK(delta_prime(s, k14, 1) == 6);
  CHECK(delta_prime(s, k14, 0) == Rational(big(gn_hat_valuation(s, 2, k14, k14).value())));
  CHECK_THROWS_AS(delta_prime(s, k14, 2), std::out_of_range);
  const Weight k4 = W(4);
  const std::int64_t D = dims(s, 4).half_new();
  for (std::int64_t ell = 1; ell <= D; ++ell) CHECK(delta_prime(s, k4, ell) == delta_prime(s, k4, -ell));
}

TEST_CASE("delta profile examples") {
  const Setting s = make_setting(11, 2, 0);
  const DeltaProfile p14 = delta_profile(s, W(1));
  REQUIRE(p14.D == 1);
  CHECK(p14.raw == std::vector<Rational>{6, 2, 6});
  CHECK(p14.hull == p14.raw);
  CHECK(p14.gap(1) == 4);
  CHECK(p14.hull_vertices == std::vector<std::int64_t>{-1, 0, 1});
  CHECK(delta_profile(s, W(0)).empty());
  const DeltaProfile p12 = delta_profile(s, W(12));
  REQUIRE(p12.D >= 1);
  CHECK(p12.gap(1) >= rational(3, 2));
}

TEST_CASE("delta profiles agree with oracle re-summation and a cubic hull") {
  for (const oracle::Constants& c : oracle::grid()) {
    const Setting s = make_setting(c.p, c.a, c.s);
    for (std::int64_t kb = 0; kb <= 30; ++kb) {
      const DeltaProfile prof = delta_profile(s, W(kb));
      const std::int64_t iw = oracle::d_iw(c, kb);
      const std::int64_t D = (iw - 2 * oracle::d_ur(c, kb)) / 2;
      CHECK(prof.D == D);
      if (D == 0) {
        CHECK(prof.empty());
        continue;
      }
      const BigInt k = c.k_eps + kb * (c.p - 1);
      // Doubled values 2 Delta' are integers.
      std::vector<std::pair<std::int64_t, std::int64_t>> pts;
      for (std::int64_t ell = -D; ell <= D; ++ell) {
        const std::optional<std::int64_t> v = oracle::gn(c, iw / 2 + ell, kb, 500, kb);
        REQUIRE(v.has_value());
        const std::int64_t doubled = 2 * *v - to_int64(k - 2) * ell;
        CHECK(prof.raw_at(ell) * 2 == doubled);
        pts.emplace_back(ell, doubled);
      }
      std::vector<std::int64_t> verts;
      for (std::size_t i : oracle::hull_vertices(pts)) verts.push_back(pts[i].first);
      CHECK(prof.hull_vertices == verts);
      for (std::size_t v = 0; v + 1 < verts.size(); ++v) {
        const auto [x0, y0] = pts[static_cast<std::size_t>(verts[v] + D)];
        const auto [x1, y1] = pts[static_cast<std::size_t>(verts[v + 1] + D)];
        for (std::int64_t x = x0; x <= x1; ++x) {
          const Rational expected = rational(y0 * (x1 - x) + y1 * (x - x0), 2 * (x1 - x0));
          CHECK(prof.hull_at(x) == expected);
        }
      }
      for (std::int64_t L = 1; L <= D; ++L) CHECK(prof.gap(L) == prof.hull_at(L) - prof.hull_at(L - 1));
    }
  }
}

TEST_CASE("profile cache returns stable references and matches direct computation") {
  const Setting s = make_setting(13, 4, 3);
  ProfileCache cache(s);
  cache.prefetch(0, 40, 3);
  const DeltaProfile& first = cache.get(17);
  CHECK(&first == &cache.get(17));
  for (std::int64_t kb = 0; kb <= 40; ++kb) {
    const DeltaProfile direct = delta_profile(s, W(kb));
    CHECK(cache.get(kb).raw == direct.raw);
    CHECK(cache.get(kb).hull == direct.hull);
  }
}
