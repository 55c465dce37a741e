#pragma once

/* Closed rational intervals [lo, hi] used as certified enclosures of real
 * values. Arithmetic is directed outward: the result always contains every
 * x op y with x, y drawn from the operands. */

#include <algorithm>
#include <utility>

#include "numeric.hpp"

namespace croton {

struct RatInterval {
  Rat lo;
  Rat hi;

  RatInterval() = default;
  RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::invalid_argument("RatInterval: lo > hi");
  }

  static RatInterval exact(const Rat& v) { return {v, v}; }

  Rat width() const { return hi - lo; }
  Rat midpoint() const { return (lo + hi) / 2; }

  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
  bool contains(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool is_positive() const { return lo > 0; }
};

inline RatInterval operator+(const RatInterval& a, const RatInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

inline RatInterval operator-(const RatInterval& a, const RatInterval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

inline RatInterval operator+(const RatInterval& a, const Rat& c) {
  return {a.lo + c, a.hi + c};
}

inline RatInterval operator-(const RatInterval& a, const Rat& c) {
  return {a.lo - c, a.hi - c};
}

inline RatInterval operator*(const RatInterval& a, const RatInterval& b) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

inline RatInterval operator*(const RatInterval& a, const Rat& c) {
  if (c >= 0) return {a.lo * c, a.hi * c};
  return {a.hi * c, a.lo * c};
}

// reciprocal; operand must not straddle zero
inline RatInterval reciprocal(const RatInterval& a) {
  if (a.lo <= 0 && a.hi >= 0)
    throw std::domain_error("reciprocal: interval contains zero");
  return {Rat(1) / a.hi, Rat(1) / a.lo};
}

inline RatInterval operator/(const RatInterval& a, const RatInterval& b) {
  return a * reciprocal(b);
}

inline RatInterval operator/(const RatInterval& a, const Rat& c) {
  if (c == 0) throw std::domain_error("interval / 0");
  if (c > 0) return {a.lo / c, a.hi / c};
  return {a.hi / c, a.lo / c};
}

inline RatInterval div_pow2(const RatInterval& a, unsigned long n) {
  Rat d(pow2(n));
  return {a.lo / d, a.hi / d};
}

}  // namespace croton
