#include "ghostslopes/valuation.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ghostslopes {

std::int64_t ExtValuation::value() const {
  if (infinite_) throw std::domain_error("value() of an infinite valuation");
  return value_;
}

ExtValuation& ExtValuation::operator+=(const ExtValuation& other) {
  if (infinite_ || other.infinite_) {
    infinite_ = true;
    value_ = 0;
  } else {
    value_ += other.value_;
  }
  return *this;
}

std::string ExtValuation::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

int vp(const BigInt& n, std::int64_t p) {
  if (n == 0) throw std::domain_error("vp(0) is infinite");
  if (fits_int64(n)) return vp(static_cast<std::int64_t>(n.get_si()), p);
  BigInt rest = n;
  const BigInt bp = big(p);
  int count = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), bp.get_mpz_t())) {
    mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), bp.get_mpz_t());
    ++count;
  }
  return count;
}

int vp(std::int64_t n, std::int64_t p) {
  if (n == 0) throw std::domain_error("vp(0) is infinite");
  int count = 0;
  while (n % p == 0) {
    n /= p;
    ++count;
  }
  return count;
}

ExtValuation vp_weight_diff(std::int64_t p, const Weight& x, const Weight& y) {
  if (x.k_bullet == y.k_bullet) return ExtValuation::infinity();
  return ExtValuation(vp(BigInt(x.k_bullet - y.k_bullet), p) + 1);
}

OffsetValuation::OffsetValuation(std::int64_t p, const BigInt& offset) : p_(p), offset_(offset) {
  // Largest power of p below 2^60 keeps x - residue_ clear of overflow for |x| < 2^62.
  modulus_ = 1;
  exponent_ = 0;
  while (modulus_ <= (std::int64_t{1} << 60) / p) {
    modulus_ *= p;
    ++exponent_;
  }
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), offset.get_mpz_t(), big(modulus_).get_mpz_t());
  residue_ = r.get_si();
}

ExtValuation OffsetValuation::at(std::int64_t x) const {
  const std::int64_t d = x - residue_;
  if (d % modulus_ != 0) return ExtValuation(vp(d, p_));
  const BigInt diff = big(x) - offset_;
  if (diff == 0) return ExtValuation::infinity();
  return ExtValuation(vp(diff, p_));
}

ValuationSum sum_vp(std::int64_t p, std::int64_t n1, std::int64_t n2) {
  if (n1 >= n2) throw std::invalid_argument("sum_vp requires n1 < n2");
  if (n1 < 0 && n2 >= 0) throw std::invalid_argument("sum_vp range contains 0");
  // Negative ranges mirror to positive ones: {n1+1..n2} -> {-n2..-n1-1}.
  std::int64_t lo = n1, hi = n2;
  if (n2 < 0) {
    lo = -n2 - 1;
    hi = -n1 - 1;
  }
  // Legendre: sum_{lo < n <= hi} v_p(n) = sum_i floor(hi/p^i) - floor(lo/p^i).
  ValuationSum out;
  std::int64_t pk = p;
  while (pk <= hi) {
    out.sum += hi / pk - lo / pk;
    if (pk > std::numeric_limits<std::int64_t>::max() / p) break;
    pk *= p;
  }
  out.r = max_vp_interval(p, lo + 1, hi);
  const std::int64_t len = n2 - n1;
  out.lower = rational(len, p) - 1;
  out.upper = rational(len, p - 1) + out.r;
  out.lower_holds = out.lower <= out.sum;
  out.upper_holds = out.sum <= out.upper;
  return out;
}

int max_vp_interval(std::int64_t p, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("max_vp_interval requires lo <= hi");
  if (lo <= 0 && hi >= 0) throw std::invalid_argument("max_vp_interval range contains 0");
  if (hi < 0) {
    const std::int64_t t = lo;
    lo = -hi;
    hi = -t;
  }
  // Largest j such that a multiple of p^j lies in [lo, hi].
  int best = 0;
  std::int64_t pk = p;
  for (int j = 1;; ++j) {
    if (hi / pk - (lo - 1) / pk <= 0) break;
    best = j;
    if (pk > std::numeric_limits<std::int64_t>::max() / p) break;
    pk *= p;
  }
  return best;
}

}  // namespace ghostslopes
