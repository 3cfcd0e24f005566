#include "ghostslopes/dims.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ghostslopes {

Weight Weight::from_k_bullet(std::int64_t k_bullet) {
  if (k_bullet < 0) throw std::invalid_argument("k_bullet must be non-negative");
  return Weight{big(k_bullet)};
}

Weight Weight::from_k_bullet(const BigInt& k_bullet) {
  if (k_bullet < 0) throw std::invalid_argument("k_bullet must be non-negative");
  return Weight{k_bullet};
}

Weight Weight::from_k(const Setting& s, const BigInt& k) {
  const BigInt diff = k - s.derived.k_eps;
  const BigInt modulus = big(s.p() - 1);
  if (k < 2 || diff < 0 || diff % modulus != 0) {
    throw std::invalid_argument("weight k=" + k.get_str() + " is not in the class k = " +
                                std::to_string(s.derived.k_eps) + " mod " + std::to_string(s.p() - 1) +
                                " with k >= 2");
  }
  return Weight{BigInt(diff / modulus)};
}

BigInt Weight::k(const Setting& s) const { return s.derived.k_eps + k_bullet * (s.p() - 1); }

std::int64_t d_iw(const Setting& s, std::int64_t k_bullet) { return 2 * k_bullet + 2 - 2 * s.derived.delta; }

std::int64_t d_ur(const Setting& s, std::int64_t k_bullet) {
  const std::int64_t q = s.p() + 1;
  return floor_div(k_bullet - s.derived.t1, q) + floor_div(k_bullet - s.derived.t2, q) + 2;
}

std::int64_t d_new(const Setting& s, std::int64_t k_bullet) { return d_iw(s, k_bullet) - 2 * d_ur(s, k_bullet); }

DimTriple dims(const Setting& s, std::int64_t k_bullet) {
  DimTriple t{d_ur(s, k_bullet), d_iw(s, k_bullet), 0};
  t.d_new = t.d_iw - 2 * t.d_ur;
  if (t.d_iw % 2 != 0) throw std::logic_error("odd d_iw at k_bullet=" + std::to_string(k_bullet));
  if (t.d_new < 0) {
    throw std::logic_error("negative d_new=" + std::to_string(t.d_new) + " at k_bullet=" + std::to_string(k_bullet) +
                           " (p=" + std::to_string(s.p()) + ", a=" + std::to_string(s.params.a) +
                           ", s=" + std::to_string(s.params.s) + ")");
  }
  return t;
}

DimTriple dims(const Setting& s, const Weight& w) { return dims(s, w.small()); }

std::int64_t multiplicity(const Setting& s, std::int64_t n, std::int64_t k_bullet) {
  const std::int64_t lo = d_ur(s, k_bullet);
  const std::int64_t hi = d_iw(s, k_bullet) - lo;
  if (n <= lo || n >= hi) return 0;
  return std::min(n - lo, hi - n);
}

KBulletRange support(const Setting& s, std::int64_t n) {
  return KBulletRange{0, ceil_div((s.p() + 1) * (n + 2), 2)};
}

}  // namespace ghostslopes
