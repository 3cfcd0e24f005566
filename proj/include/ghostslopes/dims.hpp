#pragma once

// Dimension sequences d^ur, d^Iw, d^new and ghost multiplicities m_n(k).

#include <cstdint>

#include "ghostslopes/numeric.hpp"
#include "ghostslopes/params.hpp"

namespace ghostslopes {

/// An arithmetic weight k = k_eps + k_bullet (p-1) in the fixed residue class.
struct Weight {
  BigInt k_bullet;

  static Weight from_k_bullet(std::int64_t k_bullet);
  static Weight from_k_bullet(const BigInt& k_bullet);
  /// Throws std::invalid_argument unless k >= 2 and k == k_eps mod (p-1).
  static Weight from_k(const Setting& s, const BigInt& k);

  BigInt k(const Setting& s) const;
  /// Throws std::overflow_error if k_bullet exceeds 64 bits.
  std::int64_t small() const { return to_int64(k_bullet); }

  friend bool operator==(const Weight& x, const Weight& y) { return x.k_bullet == y.k_bullet; }
  friend bool operator<(const Weight& x, const Weight& y) { return x.k_bullet < y.k_bullet; }
};

struct DimTriple {
  std::int64_t d_ur = 0;
  std::int64_t d_iw = 0;
  std::int64_t d_new = 0;

  std::int64_t half_iw() const { return d_iw / 2; }
  std::int64_t half_new() const { return d_new / 2; }
  /// Right end d^Iw - d^ur of the open interval where m_n(k) > 0.
  std::int64_t upper() const { return d_iw - d_ur; }
};

/// 2 k_bullet + 2 - 2 delta.
std::int64_t d_iw(const Setting& s, std::int64_t k_bullet);
/// floor((k_bullet - t1)/(p+1)) + floor((k_bullet - t2)/(p+1)) + 2, floors toward -inf.
std::int64_t d_ur(const Setting& s, std::int64_t k_bullet);
std::int64_t d_new(const Setting& s, std::int64_t k_bullet);

/// All three at once. Throws std::logic_error if d^Iw is odd or d^new is negative,
/// since either would invalidate the half-index conventions downstream.
DimTriple dims(const Setting& s, std::int64_t k_bullet);
DimTriple dims(const Setting& s, const Weight& w);

/// min{n - d^ur, d^Iw - d^ur - n} when d^ur < n < d^Iw - d^ur, else 0.
std::int64_t multiplicity(const Setting& s, std::int64_t n, std::int64_t k_bullet);

struct KBulletRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;  // inclusive
};

/// [0, ceil((p+1)(n+2)/2)]: contains every k_bullet with m_n(k) > 0.
KBulletRange support(const Setting& s, std::int64_t n);

}  // namespace ghostslopes
