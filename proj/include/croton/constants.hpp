#pragma once

/* Certified constant constructors. Every function returns either an exact
 * integer or a RatInterval that provably encloses the target value, with
 * width controlled by the decimal-digit argument. Series are truncated with
 * explicit tail bounds; floor divisions are tracked as one-ulp slack on the
 * appropriate side. */

#include <cassert>

#include "interval.hpp"

namespace croton {

inline constexpr unsigned kDefaultPrecision = 1100;  // decimal digits

namespace detail {

// sum_{k>=0} (-1)^k / ((2k+1) x^(2k+1)) scaled by `scale`; integer bounds
inline std::pair<Int, Int> atan_inv_scaled(unsigned long x, const Int& scale) {
  Int xx = Int(x) * x;
  Int term_den(x);
  Int s_lo(0), s_hi(0);
  unsigned long k = 0;
  for (;;) {
    Int t = scale / ((2 * k + 1) * term_den);
    if (k % 2 == 0) {
      s_lo += t;
      s_hi += t + 1;
    } else {
      s_lo -= t + 1;
      s_hi -= t;
    }
    if (t == 0) break;  // tail bounded by first omitted term (alternating)
    term_den *= xx;
    ++k;
  }
  return {s_lo - 1, s_hi + 1};
}

// 2*atanh(num/den) scaled by `scale`, for 0 <= num/den <= 1/3
inline std::pair<Int, Int> atanh2_scaled(const Int& num, const Int& den,
                                         const Int& scale) {
  Int z_lo = num * scale / den;
  Int z_hi = z_lo + 1;
  Int zz_lo = z_lo * z_lo / scale;
  Int zz_hi = z_hi * z_hi / scale + 1;
  Int p_lo = z_lo, p_hi = z_hi;
  Int s_lo(0), s_hi(0);
  unsigned long k = 0;
  for (;;) {
    s_lo += p_lo / (2 * k + 1);
    s_hi += p_hi / (2 * k + 1) + 1;
    if (p_hi <= 2 * k + 1) {
      s_hi += 2;  // geometric tail, ratio < 1/2 since z <= 1/3
      break;
    }
    p_lo = p_lo * zz_lo / scale;
    p_hi = p_hi * zz_hi / scale + 1;
    ++k;
  }
  return {2 * s_lo, 2 * s_hi};
}

}  // namespace detail

// pi via Machin: 16*atan(1/5) - 4*atan(1/239)
inline RatInterval pi_interval(unsigned decimal_digits = kDefaultPrecision) {
  Int scale = pow10(decimal_digits + 10);
  auto a5 = detail::atan_inv_scaled(5, scale);
  auto a239 = detail::atan_inv_scaled(239, scale);
  Int lo = 16 * a5.first - 4 * a239.second;
  Int hi = 16 * a5.second - 4 * a239.first;
  assert(lo < hi);
  return {make_rat(lo, scale), make_rat(hi, scale)};
}

// sqrt(num/den), width < 3*10^-digits
inline RatInterval sqrt_interval(const Int& num, const Int& den,
                                 unsigned decimal_digits = kDefaultPrecision) {
  Int scale = pow10(decimal_digits);
  Int v = isqrt(num * scale * scale / den);
  return {make_rat(v, scale), make_rat(v + 2, scale)};
}

inline RatInterval sqrt2_interval(unsigned decimal_digits = kDefaultPrecision) {
  return sqrt_interval(Int(2), Int(1), decimal_digits);
}

// (num/den)^(1/r)
inline RatInterval nth_root_interval(const Int& num, const Int& den, unsigned long r,
                                     unsigned decimal_digits = kDefaultPrecision) {
  Int scale = pow10(decimal_digits);
  Int v = iroot(num * ipow(scale, r) / den, r);
  return {make_rat(v, scale), make_rat(v + 2, scale)};
}

inline Int catalan(unsigned long q) {
  return binomial(2 * q, q) / (q + 1);
}

// (C_q * B(q, q+1))^-1 computed from the Beta-function definition; the
// closed form q(q+1) is asserted rather than assumed
inline Int catalan_tie(unsigned long q) {
  if (q < 1) throw std::domain_error("catalan_tie: q >= 1 required");
  Rat beta = make_rat(factorial(q - 1) * factorial(q), factorial(2 * q));
  Rat tie = Rat(1) / (Rat(catalan(q)) * beta);
  if (rat_den(tie) != 1 || tie != Rat(Int(q) * (q + 1)))
    throw std::logic_error("catalan_tie: closed form q(q+1) violated");
  return rat_num(tie);
}

// certified enclosure of log2(C) for integer C >= 1:
// log2(C) = (e-1) + 2*atanh(z)/ln 2, z = (C - 2^(e-1))/(C + 2^(e-1))
inline RatInterval log2_interval(const Int& C,
                                 unsigned decimal_digits = kDefaultPrecision) {
  if (C < 1) throw std::domain_error("log2_interval: C >= 1 required");
  Int scale = pow10(decimal_digits + 10);
  auto e = static_cast<unsigned long>(bit_length(C));
  Int half = pow2(e - 1);
  auto lnm = detail::atanh2_scaled(C - half, C + half, scale);
  auto ln2 = detail::atanh2_scaled(Int(1), Int(3), scale);
  Int q_lo = lnm.first * scale / ln2.second;
  Int q_hi = lnm.second * scale / ln2.first + 1;
  return {make_rat(Int(e - 1) * scale + q_lo, scale),
          make_rat(Int(e - 1) * scale + q_hi, scale)};
}

inline unsigned long mersenne(unsigned long s) {
  return (1ul << s) - 1;
}

// floor(log2 C_{q_s}), q_s = 2^s - 1; exact via bit length
inline long log2_catalan_floor(unsigned long s) {
  if (s < 2) throw std::domain_error("log2_catalan_floor: s >= 2 required");
  return static_cast<long>(bit_length(catalan(mersenne(s)))) - 1;
}

inline RatInterval log2_catalan_interval(unsigned long s,
                                         unsigned decimal_digits = kDefaultPrecision) {
  if (s < 2) throw std::domain_error("log2_catalan_interval: s >= 2 required");
  return log2_interval(catalan(mersenne(s)), decimal_digits);
}

// kappa = 3/8 + sqrt((113/5)^(1/3) * (2430289/429)^(1/7))
inline RatInterval kappa_interval(unsigned decimal_digits = kDefaultPrecision) {
  auto p15 = nth_root_interval(Int(113), Int(5), 3, decimal_digits + 10);
  auto p31 = nth_root_interval(Int(2430289), Int(429), 7, decimal_digits + 10);
  Rat prod_lo = p15.lo * p31.lo;
  Rat prod_hi = p15.hi * p31.hi;
  Int scale = pow10(decimal_digits);
  Int s_lo = isqrt(rat_num(prod_lo) * scale * scale / rat_den(prod_lo));
  Int s_hi = isqrt(rat_num(prod_hi) * scale * scale / rat_den(prod_hi)) + 1;
  Rat three_eighths(3, 8);
  return {three_eighths + make_rat(s_lo, scale), three_eighths + make_rat(s_hi, scale)};
}

// tau_1^(n) = floor(2^n / pi), certified against a pi enclosure; escalates
// precision until the floor is pinned
inline Int tau1(long n, const RatInterval* pi_hint = nullptr) {
  if (n < 3) throw std::domain_error("tau1: n >= 3 required");
  if (pi_hint) {
    Int p2 = pow2(static_cast<unsigned long>(n));
    Int lo = fdiv(p2 * rat_den(pi_hint->hi), rat_num(pi_hint->hi));
    Int hi = fdiv(p2 * rat_den(pi_hint->lo), rat_num(pi_hint->lo));
    if (lo == hi) return lo;
    // hint too coarse, fall through to self-escalation
  }
  unsigned digits = static_cast<unsigned>(n * 302 / 1000) + 40;
  for (;;) {
    RatInterval pi = pi_interval(digits);
    Int p2 = pow2(static_cast<unsigned long>(n));
    Int lo = fdiv(p2 * rat_den(pi.hi), rat_num(pi.hi));
    Int hi = fdiv(p2 * rat_den(pi.lo), rat_num(pi.lo));
    if (lo == hi) return lo;
    digits *= 2;
  }
}

// second partial denominator of the expansion of pi/2^n, i.e. the clamp
// term tau_2^(n) = floor(1/(2^n/pi - tau1)); certified the same way as tau1
inline Int tau2(long n, const RatInterval* pi_hint = nullptr) {
  Int t1 = tau1(n, pi_hint);
  Rat p2(pow2(static_cast<unsigned long>(n)));
  auto pinned = [&](const RatInterval& pi) -> std::pair<bool, Int> {
    Rat r_lo = p2 / pi.hi - Rat(t1);
    Rat r_hi = p2 / pi.lo - Rat(t1);
    if (r_lo <= 0) return {false, Int(0)};
    Int lo = rat_floor(Rat(1) / r_hi);
    Int hi = rat_floor(Rat(1) / r_lo);
    return {lo == hi, lo};
  };
  if (pi_hint) {
    auto [ok, v] = pinned(*pi_hint);
    if (ok) return v;
  }
  unsigned digits = static_cast<unsigned>(n * 302 / 1000) + 40;
  for (;;) {
    RatInterval pi = pi_interval(digits);
    auto [ok, v] = pinned(pi);
    if (ok) return v;
    digits *= 2;
  }
}

// delta_tau^(n) = 1 - ceil((tau2 - 1)/tau2): 1 iff tau2 == 1
inline int delta_tau(long n, const RatInterval* pi_hint = nullptr) {
  Int t2 = tau2(n, pi_hint);
  Int d = 1 - cdiv(t2 - 1, t2);
  int di = static_cast<int>(d);
  // recurrence tau1(n+1) = 2*tau1(n) + delta_tau(n)
  assert(tau1(n + 1, pi_hint) == 2 * tau1(n, pi_hint) + di);
  return di;
}

// Catalan bit-length identity: -ceil(n/2) + sum_{i=1..n-2} (2^i - 1)
// equals floor(log2 C_{(2^n-4)/4}) for n >= 4
inline bool identity_eq25(unsigned long n) {
  if (n < 4) throw std::domain_error("identity_eq25: n >= 4 required");
  Int lhs = -Int((n + 1) / 2);
  for (unsigned long i = 1; i <= n - 2; ++i) lhs += pow2(i) - 1;
  Int q = (pow2(n) - 4) / 4;
  Int rhs = Int(bit_length(catalan(static_cast<unsigned long>(q)))) - 1;
  return lhs == rhs;
}

}  // namespace croton
