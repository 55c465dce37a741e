#pragma once

/* Certified continued-fraction expansion over rational intervals.
 *
 * The state is kept as an integer fraction pair lo = p1/q1 <= hi = p2/q2 and
 * advanced in lockstep Euclid steps. A digit is emitted only when both
 * endpoints agree on it, so every emitted term is provably the term of every
 * real number inside the interval. When the endpoints disagree the expansion
 * stops with exhausted = true; an exactly rational input instead terminates
 * canonically (final term >= 2 for the regular form) with exhausted = false.
 *
 * The alternating form emits floor digits at even positions and ceiling
 * digits at odd positions, inverting the signed remainder:
 *   even alpha: b = floor(x), x' = 1/(x - b)
 *   odd  alpha: b = ceil(x),  x' = 1/(b - x)
 * which realizes partial numerators +1 over odd-position terms and -1 over
 * even-position terms. */

#include <utility>
#include <vector>

#include "interval.hpp"

namespace croton {

struct CFExpansion {
  std::vector<Int> terms;
  bool exhausted = false;  // precision ran out before max_terms
};

struct AltCFExpansion {
  std::vector<Int> terms;
  bool exhausted = false;
};

// lo = p1/q1, hi = p2/q2, with q1, q2 > 0 and p1/q1 <= p2/q2
struct FractionPair {
  Int p1, q1, p2, q2;
};

inline FractionPair to_pair(const RatInterval& x) {
  return {rat_num(x.lo), rat_den(x.lo), rat_num(x.hi), rat_den(x.hi)};
}

inline CFExpansion cf_regular_pair(FractionPair st, std::size_t max_terms) {
  CFExpansion out;
  for (std::size_t i = 0; i < max_terms; ++i) {
    Int a1 = fdiv(st.p1, st.q1);
    Int a2 = fdiv(st.p2, st.q2);
    if (a1 != a2) {
      out.exhausted = true;
      return out;
    }
    out.terms.push_back(a1);
    Int r1 = st.p1 - a1 * st.q1;
    Int r2 = st.p2 - a1 * st.q2;
    if (r1 == 0) {
      // lo endpoint hit an integer: done if hi did too (exact rational),
      // otherwise the reciprocal is unbounded and certification stops
      out.exhausted = (r2 != 0);
      return out;
    }
    // x' = 1/(x - a): endpoints swap roles
    st = {std::move(st.q2), std::move(r2), std::move(st.q1), std::move(r1)};
  }
  return out;
}

inline AltCFExpansion cf_alternating_pair(FractionPair st, std::size_t max_terms) {
  AltCFExpansion out;
  for (std::size_t i = 0; i < max_terms; ++i) {
    if (i % 2 == 0) {
      Int a1 = fdiv(st.p1, st.q1);
      Int a2 = fdiv(st.p2, st.q2);
      if (a1 != a2) {
        out.exhausted = true;
        return out;
      }
      out.terms.push_back(a1);
      Int r1 = st.p1 - a1 * st.q1;
      Int r2 = st.p2 - a1 * st.q2;
      if (r1 == 0) {
        out.exhausted = (r2 != 0);
        return out;
      }
      st = {std::move(st.q2), std::move(r2), std::move(st.q1), std::move(r1)};
    } else {
      Int a1 = cdiv(st.p1, st.q1);
      Int a2 = cdiv(st.p2, st.q2);
      if (a1 != a2) {
        out.exhausted = true;
        return out;
      }
      out.terms.push_back(a1);
      // b - x over [b - hi, b - lo] = [r1/q2, r2/q1]
      Int r1 = a1 * st.q2 - st.p2;
      Int r2 = a1 * st.q1 - st.p1;
      if (r1 == 0) {
        out.exhausted = (r2 != 0);
        return out;
      }
      st = {std::move(st.q1), std::move(r2), std::move(st.q2), std::move(r1)};
    }
  }
  return out;
}

inline CFExpansion cf_regular(const RatInterval& x, std::size_t max_terms) {
  return cf_regular_pair(to_pair(x), max_terms);
}

inline AltCFExpansion cf_alternating(const RatInterval& x, std::size_t max_terms) {
  return cf_alternating_pair(to_pair(x), max_terms);
}

// plain Euclidean expansion of an exact rational (oracle for cf_regular)
inline std::vector<Int> euclid_cf(const Rat& x) {
  std::vector<Int> terms;
  Int p = rat_num(x), q = rat_den(x);
  for (;;) {
    Int a = fdiv(p, q);
    terms.push_back(a);
    Int r = p - a * q;
    if (r == 0) return terms;
    p = std::move(q);
    q = std::move(r);
  }
}

// convergents p_k/q_k of a regular expansion
inline std::vector<std::pair<Int, Int>> convergents(const std::vector<Int>& terms) {
  std::vector<std::pair<Int, Int>> out;
  Int p_prev(1), q_prev(0);
  Int p_prev2(0), q_prev2(1);
  for (const Int& b : terms) {
    Int p = b * p_prev + p_prev2;
    Int q = b * q_prev + q_prev2;
    out.emplace_back(p, q);
    p_prev2 = std::move(p_prev);
    q_prev2 = std::move(q_prev);
    p_prev = out.back().first;
    q_prev = out.back().second;
  }
  return out;
}

// value of a finite alternating expansion: numerators +1 over odd-position
// terms, -1 over even-position terms
inline Rat eval_alternating(const std::vector<Int>& terms) {
  if (terms.empty()) throw std::domain_error("eval_alternating: empty");
  Rat v(terms.back());
  for (std::size_t j = terms.size() - 1; j-- > 0;) {
    int sign = ((j + 1) % 2 == 1) ? 1 : -1;
    v = Rat(terms[j]) + Rat(sign) / v;
  }
  return v;
}

}  // namespace croton
