#include <doctest.h>

#include "ghostslopes/dims.hpp"
#include "oracle.hpp"

using namespace ghostslopes;

TEST_CASE("d_iw closed form") {
  CHECK(d_iw(make_setting(11, 2, 0), 0) == 2);
  CHECK(d_iw(make_setting(11, 2, 9), 0) == 0);
  CHECK(d_iw(make_setting(11, 2, 0), 12) == 26);
}

TEST_CASE("d_ur floor formula") {
  const Setting s = make_setting(11, 2, 0);
  // floor((k-0)/12) + floor((k-4)/12) + 2
  CHECK(d_ur(s, 0) == 1);
  CHECK(d_ur(s, 4) == 2);
  CHECK(d_ur(s, 12) == 3);
  CHECK(d_ur(s, 16) == 4);
  // floor(-3/12) + floor(-11/12) + 2
  CHECK(d_ur(make_setting(11, 2, 9), 0) == 0);
  const std::int64_t v = d_ur(s, 100);
  CHECK(v * 12 >= 200 - 24);
  CHECK(v * 12 <= 200 + 24);
}

TEST_CASE("multiplicities") {
  const Setting s = make_setting(11, 2, 0);
  // k_bullet=2: d_ur=1, d_iw=6
  CHECK(multiplicity(s, 2, 2) == 1);
  CHECK(multiplicity(s, 3, 2) == 2);
  CHECK(multiplicity(s, 4, 2) == 1);
  for (std::int64_t n : {0, 1, 5, 6, 7, 50}) CHECK(multiplicity(s, n, 2) == 0);
  for (std::int64_t n = 0; n < 20; ++n) CHECK(multiplicity(s, n, 0) == 0);
  for (const oracle::Constants& c : oracle::grid()) {
    const Setting g = make_setting(c.p, c.a, c.s);
    for (std::int64_t kb = 0; kb < 60; ++kb) CHECK(multiplicity(g, 0, kb) == 0);
  }
}

TEST_CASE("support window") {
  const Setting s = make_setting(11, 2, 0);
  const KBulletRange r2 = support(s, 2);
  CHECK(r2.lo == 0);
  CHECK(r2.hi == 24);
  std::vector<std::int64_t> nonzero;
  for (std::int64_t kb = 0; kb <= 200; ++kb) {
    if (multiplicity(s, 2, kb) > 0) nonzero.push_back(kb);
  }
  CHECK(nonzero == std::vector<std::int64_t>{1, 2, 3});
  nonzero.clear();
  for (std::int64_t kb = 0; kb <= 200; ++kb) {
    if (multiplicity(s, 3, kb) > 0) nonzero.push_back(kb);
  }
  CHECK(nonzero == std::vector<std::int64_t>{2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
  const KBulletRange r0 = support(s, 0);
  CHECK(r0.hi >= r0.lo);
}

TEST_CASE("support window contains every nonzero multiplicity on the grid") {
  for (const oracle::Constants& c : oracle::grid()) {
    const Setting s = make_setting(c.p, c.a, c.s);
    for (std::int64_t n = 0; n <= 40; ++n) {
      const KBulletRange r = support(s, n);
      for (std::int64_t kb = r.hi + 1; kb <= r.hi + 400; ++kb) CHECK(multiplicity(s, n, kb) == 0);
    }
  }
}

TEST_CASE("dimension formulas agree with the oracle on the grid") {
  for (const oracle::Constants& c : oracle::grid()) {
    const Setting s = make_setting(c.p, c.a, c.s);
    for (std::int64_t kb = 0; kb <= 300; ++kb) {
      const DimTriple d = dims(s, kb);
      CHECK(d.d_ur == oracle::d_ur(c, kb));
      CHECK(d.d_iw == oracle::d_iw(c, kb));
      CHECK(d.d_new == d.d_iw - 2 * d.d_ur);
      for (std::int64_t n = 0; n <= d.d_iw + 1; ++n) CHECK(multiplicity(s, n, kb) == oracle::mult(c, n, kb));
    }
  }
}

TEST_CASE("sandwich, monotonicity, parity corollary and palindrome on the grid") {
  for (const oracle::Constants& c : oracle::grid()) {
    const Setting s = make_setting(c.p, c.a, c.s);
    const std::int64_t p = c.p;
    for (std::int64_t kb = 0; kb <= 500; ++kb) {
      const DimTriple d = dims(s, kb);
      CHECK(d.d_ur * (p + 1) >= 2 * kb - 2 * (p + 1));
      CHECK(d.d_ur * (p + 1) <= 2 * kb + 2 * (p + 1));
      CHECK(d.d_new >= 0);
      const DimTriple next = dims(s, kb + 1);
      CHECK(d.d_ur <= next.d_ur);
      CHECK(d.upper() <= next.upper());
      CHECK(d.upper() < dims(s, kb + 2).upper());
      const std::int64_t A = c.t1 + (((kb - c.t1) % (p + 1)) + p + 1) % (p + 1);
      if (d.d_ur % 2 != 0) {
        CHECK(A <= c.t2 - 1);
      } else {
        CHECK(A >= c.t2);
      }
      for (std::int64_t n = 0; n <= d.d_iw; ++n) CHECK(multiplicity(s, n, kb) == multiplicity(s, d.d_iw - n, kb));
    }
  }
}

TEST_CASE("equal dimensions force distinct residues mod p") {
  for (const oracle::Constants& c : oracle::grid()) {
    const Setting s = make_setting(c.p, c.a, c.s);
    for (std::int64_t k = 0; k <= 200; ++k) {
      for (std::int64_t k2 = k + 1; k2 <= 200; ++k2) {
        const DimTriple x = dims(s, k), y = dims(s, k2);
        if (x.d_ur == y.d_ur || x.upper() == y.upper()) CHECK((k2 - k) % c.p != 0);
      }
    }
  }
}

TEST_CASE("weights") {
  const Setting s = make_setting(11, 2, 0);
  CHECK(Weight::from_k(s, big(14)).k_bullet == 1);
  CHECK(Weight::from_k(s, big(4)).k_bullet == 0);
  CHECK(Weight::from_k(s, big(146424)).k_bullet == 14642);
  CHECK(Weight::from_k_bullet(2).k(s) == 24);
  CHECK_THROWS_AS(Weight::from_k(s, big(15)), std::invalid_argument);
  CHECK_THROWS_AS(Weight::from_k(s, big(-6)), std::invalid_argument);
  CHECK_THROWS_AS(Weight::from_k_bullet(-1), std::invalid_argument);
  const Weight huge = Weight::from_k_bullet(pow(11, 30u));
  CHECK_THROWS_AS(huge.small(), std::overflow_error);
}
