#pragma once

// Independent reference implementations used as test oracles. They share no code
// with the library: plain 64-bit arithmetic, direct loops, no accumulation tricks.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t residue(std::int64_t p, std::int64_t n) { return ((n % (p - 1)) + (p - 1)) % (p - 1); }

struct Constants {
  std::int64_t p, a, s;
  std::int64_t k_eps, delta, t1, t2;
};

inline Constants constants(std::int64_t p, std::int64_t a, std::int64_t s) {
  Constants c{p, a, s, 0, 0, 0, 0};
  c.k_eps = residue(p, a + 2 * s) + 2;
  c.delta = (residue(p, a + s) + s - residue(p, a + 2 * s)) / (p - 1);
  if (a + s < p - 1) {
    c.t1 = s + c.delta;
    c.t2 = a + s + c.delta + 2;
  } else {
    c.t1 = residue(p, a + s) + c.delta + 1;
    c.t2 = s + c.delta + 1;
  }
  return c;
}

inline std::int64_t d_iw(const Constants& c, std::int64_t kb) { return 2 * kb + 2 - 2 * c.delta; }

inline std::int64_t d_ur(const Constants& c, std::int64_t kb) {
  return floor_div(kb - c.t1, c.p + 1) + floor_div(kb - c.t2, c.p + 1) + 2;
}

inline std::int64_t mult(const Constants& c, std::int64_t n, std::int64_t kb) {
  const std::int64_t lo = d_ur(c, kb), hi = d_iw(c, kb) - lo;
  if (n <= lo || n >= hi) return 0;
  return std::min(n - lo, hi - n);
}

inline int vp(std::int64_t n, std::int64_t p) {
  if (n < 0) n = -n;
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

/// v_p(g_n(w_eval)) with an optional excluded weight, summed over k_bullet <= window.
/// Returns nullopt for infinity.
inline std::optional<std::int64_t> gn(const Constants& c, std::int64_t n, std::int64_t eval, std::int64_t window = 500,
                                      std::optional<std::int64_t> hat = std::nullopt) {
  std::int64_t total = 0;
  for (std::int64_t kb = 0; kb <= window; ++kb) {
    if (hat && *hat == kb) continue;
    const std::int64_t m = mult(c, n, kb);
    if (m == 0) continue;
    if (kb == eval) return std::nullopt;
    total += m * (vp(kb - eval, c.p) + 1);
  }
  return total;
}

/// Indices of the strict vertices of the lower convex hull, by the cubic definition:
/// a point is not a vertex iff it lies on or above a chord between points on either side.
inline std::vector<std::size_t> hull_vertices(const std::vector<std::pair<std::int64_t, std::int64_t>>& pts) {
  std::vector<std::size_t> out;
  const std::size_t n = pts.size();
  for (std::size_t k = 0; k < n; ++k) {
    bool covered = false;
    for (std::size_t i = 0; i < k && !covered; ++i) {
      for (std::size_t j = k + 1; j < n && !covered; ++j) {
        const auto [xi, yi] = pts[i];
        const auto [xj, yj] = pts[j];
        const auto [xk, yk] = pts[k];
        // (yk - yi)(xj - xi) >= (yj - yi)(xk - xi)
        const __int128 lhs = static_cast<__int128>(yk - yi) * (xj - xi);
        const __int128 rhs = static_cast<__int128>(yj - yi) * (xk - xi);
        if (lhs >= rhs) covered = true;
      }
    }
    if (!covered) out.push_back(k);
  }
  return out;
}

inline const std::vector<std::int64_t>& primes() {
  static const std::vector<std::int64_t> list{11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  return list;
}

/// The default grid: p in {11, 13}, every legal a, s in {0, floor(p/2), p-2}.
inline std::vector<Constants> grid() {
  std::vector<Constants> out;
  for (std::int64_t p : {11, 13}) {
    for (std::int64_t a = 2; a <= p - 5; ++a) {
      for (std::int64_t s : {std::int64_t{0}, p / 2, p - 2}) out.push_back(constants(p, a, s));
    }
  }
  return out;
}

}  // namespace oracle
