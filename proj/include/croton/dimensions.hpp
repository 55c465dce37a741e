#pragma once

/* Dimensional bookkeeping: span parameters and the two coupling-constant
 * forms they bound, the five-eighths companions of the Mersenne numbers,
 * naturalness quotients over the kissing table, the source/sink dimension
 * bases with their representability fields, and gap filling on a grid
 * column, where a pivot's near-miss of a kissing number is bridged by a
 * signed sum of its neighboring cells. */

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "basis.hpp"
#include "boundary.hpp"
#include "constants.hpp"
#include "grid.hpp"
#include "kissing.hpp"

namespace croton {

// span parameter of the order-p base tuple: the q-th root of G_max/C_q,
// q = (p-3)/4
inline RatInterval span_parameter(int p, unsigned decimal_digits = 60) {
  if (p != 7 && p != 15 && p != 31)
    throw std::domain_error("span_parameter: tuple order must be 7, 15 or 31");
  unsigned long q = static_cast<unsigned long>((p - 3) / 4);
  const auto& vals = basis_data::tuple(p, BasisKind::G);
  long long gmax = *std::max_element(vals.begin(), vals.end());
  return nth_root_interval(Int(gmax), catalan(q), q, decimal_digits);
}

inline Rat measured_alpha_inverse() { return Rat(137035999, 1000000); }

struct AlphaForms {
  RatInterval down;  // (C7 - C5)/Phi15 plus the (2*15+kappa)/(31+kappa) share of the bridge
  RatInterval up;    // (C7 + C5)/Phi31 minus the 1/(31+kappa) share of the bridge
  RatInterval weak;  // residual of the up-side head term against the measured value
};

/* The two forms agree identically: their difference collapses to
 * Delta_b * ((2*15 + kappa + 1)/(31 + kappa) - 1), which vanishes because
 * 2*15 + 1 = 31. Enclosures are carried so the agreement is certified
 * rather than floating-point luck. */
inline AlphaForms alpha_forms(unsigned decimal_digits = 60) {
  RatInterval phi15 = span_parameter(15, decimal_digits + 10);
  RatInterval phi31 = span_parameter(31, decimal_digits + 10);
  RatInterval kap = kappa_interval(decimal_digits + 10);
  Rat c_minus = Rat(catalan(7) - catalan(5));
  Rat c_plus = Rat(catalan(7) + catalan(5));
  RatInterval down_head = RatInterval::exact(c_minus) / phi15;
  RatInterval up_head = RatInterval::exact(c_plus) / phi31;
  RatInterval bridge = up_head - down_head;
  AlphaForms a;
  a.down = down_head + (kap + Rat(2 * 15)) / (kap + Rat(31)) * bridge;
  a.up = up_head - bridge / (kap + Rat(31));
  a.weak = RatInterval::exact(Rat(1) / measured_alpha_inverse()) - phi31 / c_plus;
  return a;
}

// companions 4, 9, 19, 39, ... of the Mersenne numbers p = 7, 15, 31, ...:
// m58(k) = (p+q)/2 with q = (p-3)/4, closed form 5*2^k - 1
inline long long m58(int k) {
  if (k < 0 || k > 61) throw std::domain_error("m58: index outside 0..61");
  return 5LL * (1LL << k) - 1;
}

enum class MSequence { Regular, FiveEighths };

// i-th member, from 1: Regular 1, 3, 7, 15, ...; FiveEighths 4, 9, 19, 39, ...
inline long long msequence_member(MSequence f, int i) {
  if (i < 1 || i > 60) throw std::domain_error("msequence_member: index outside 1..60");
  return f == MSequence::Regular ? (1LL << i) - 1 : m58(i - 1);
}

struct NaturalnessRow {
  int n = 0;               // leading members multiplied together
  int nu = 0;              // index of the least kissing number above the product
  long long l_nu = 0;
  long long product = 0;   // member_1 * ... * member_n
  long long divisor = 0;   // member_1 * ... * member_(n-2)
  long long nu_prime = 0;  // (l_nu - product) / divisor
};

// rows n = 3, 4, ... as long as the product stays under the kissing table;
// the quotient is required to come out integral
inline std::vector<NaturalnessRow> naturalness_table(MSequence f, int rows) {
  if (rows < 1) throw std::domain_error("naturalness_table: rows must be positive");
  std::vector<NaturalnessRow> out;
  for (int n = 3; n < 3 + rows; ++n) {
    NaturalnessRow r;
    r.n = n;
    r.product = 1;
    for (int i = 1; i <= n; ++i) r.product *= msequence_member(f, i);
    r.divisor = 1;
    for (int i = 1; i <= n - 2; ++i) r.divisor *= msequence_member(f, i);
    r.nu = 0;
    for (int m = 1; m <= 31; ++m)
      if (kissing_number(m) > r.product) {
        r.nu = m;
        break;
      }
    if (r.nu == 0) throw std::domain_error("naturalness_table: product beyond the kissing table");
    r.l_nu = kissing_number(r.nu);
    long long gap = r.l_nu - r.product;
    if (gap % r.divisor != 0)
      throw std::logic_error("naturalness_table: quotient is not integral");
    r.nu_prime = gap / r.divisor;
    out.push_back(r);
  }
  return out;
}

enum class DimBasisName { Source, Sink };

struct DimBasis {
  DimBasisName name = DimBasisName::Source;
  std::vector<long long> values;

  long long sum() const {
    long long s = 0;
    for (long long v : values) s += v;
    return s;
  }
};

// the source basis collects the kissing indices nu, the sink basis the
// quotients nu', merging the regular rows with the five-eighths rows
inline DimBasis dim_basis(DimBasisName which) {
  DimBasis b;
  b.name = which;
  for (auto [f, rows] : {std::pair{MSequence::Regular, 3}, {MSequence::FiveEighths, 2}})
    for (const NaturalnessRow& r : naturalness_table(f, rows))
      b.values.push_back(which == DimBasisName::Source ? r.nu : r.nu_prime);
  std::sort(b.values.begin(), b.values.end());
  return b;
}

struct DimRepresentability {
  long long potential = 0;  // sum of the basis, the highest spanned dimension
  long long represented = 0;
  std::vector<long long> unrepresented;
  long long null_singularities = 0;  // nonzero zero-sum vectors, modulo sign flip
};

inline DimRepresentability dim_representability(const DimBasis& basis) {
  CrotonBasis cb;
  cb.values = basis.values;
  LabelField f = enumerate_realizable(cb);
  DimRepresentability r;
  r.potential = f.max_value;
  r.represented = f.realized_count;
  r.unrepresented = unrealizable_list(f);
  r.null_singularities = f.zero_reps;
  return r;
}

struct UnionRepresentability {
  long long range = 0;  // the larger of the two potentials
  std::vector<long long> unrepresented;
  long long null_singularities = 0;  // summed over the two boundaries
};

// dimensions representable on neither boundary when the source/sink
// distinction is dropped
inline UnionRepresentability union_representability(const DimBasis& a, const DimBasis& b) {
  CrotonBasis ca, cb;
  ca.values = a.values;
  cb.values = b.values;
  LabelField fa = enumerate_realizable(ca);
  LabelField fb = enumerate_realizable(cb);
  UnionRepresentability u;
  u.range = std::max(fa.max_value, fb.max_value);
  for (long long v = 1; v <= u.range; ++v)
    if (!fa.is_realizable(v) && !fb.is_realizable(v)) u.unrepresented.push_back(v);
  u.null_singularities = fa.zero_reps + fb.zero_reps;
  return u;
}

struct GapFillTrial {
  char rule = 0;            // 'a': count equals the factor; 'b': its twice-successor
  long long factor = 0;
  long long inclusions = 0;
  int tie = 0;              // sign-divide tie under 'b' (6, 7, 11 or 12); 0 under 'a'
  long long delta = 0;
};

struct GapFill {
  int target_index = 0;  // m of the targeted kissing number
  long long target = 0;
  long n = 0;
  int alpha = 0;
  long long pivot = 0;
  bool to_right = false;  // side of the pivot the co-amplitudes are read from
  bool closed = false;
  char rule = 0;
  long long factor = 0;
  long long inclusions = 0;
  int tie = 0;
  std::vector<long long> co_tuple;  // distinct co-amplitudes, encounter order
  std::vector<int> signs;           // +1/-1 per tuple entry
  long long delta = 0;              // signs . co_tuple
  std::vector<GapFillTrial> trials;
};

namespace detail {

// certified window test: pivot/target against (5 pi/16)^2 from below or its
// reciprocal from above, escalating the pi enclosure until decided
inline bool gap_window_ok(const Rat& ratio, bool pivot_below_target) {
  for (unsigned digits = 30;; digits *= 2) {
    RatInterval pi = pi_interval(digits);
    Rat sq_lo = pi.lo * pi.lo * Rat(25, 256);
    Rat sq_hi = pi.hi * pi.hi * Rat(25, 256);
    if (pivot_below_target) {
      if (ratio >= sq_hi) return true;
      if (ratio <= sq_lo) return false;
    } else {
      if (ratio <= Rat(1) / sq_hi) return true;
      if (ratio >= Rat(1) / sq_lo) return false;
    }
  }
}

// eligible factors of n drawn from the two sequences, ascending
inline std::vector<long long> gap_factor_pool(long long n) {
  std::vector<long long> pool;
  for (long long v = 3; v <= n; v = 2 * v + 1)
    if (n % v == 0) pool.push_back(v);
  for (long long v = 4; v <= n; v = 2 * v + 1)
    if (n % v == 0) pool.push_back(v);
  std::sort(pool.begin(), pool.end());
  return pool;
}

inline std::vector<long long> dedup_keep_first(const std::vector<long long>& seq) {
  std::vector<long long> out;
  for (long long v : seq)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

}  // namespace detail

// sign-divide variants: lower ties 6 and 7 also preserve 9+4 and 9-4, upper
// ties 11 and 12 also preserve 19+9 and 19-9
inline const std::vector<std::pair<int, long long>>& gap_sign_variants() {
  static const std::vector<std::pair<int, long long>> v{
      {6, 9 + 4}, {7, 9 - 4}, {11, 19 + 9}, {12, 19 - 9}};
  return v;
}

/* Gap filling at grid cell (n, alpha) against kissing number m. The pivot
 * must sit inside the ratio window; co-amplitudes are then read walking away
 * from the pivot, rightward when it overshoots the target and leftward when
 * it undershoots. Each eligible factor of n is tried first as the inclusion
 * count itself with all signs positive, then with its twice-successor 4p+3
 * as the count under the four sign-divide variants; the first trial whose
 * signed sum of distinct co-amplitudes equals the gap wins. Trials whose
 * count runs past the certified column are skipped; when nothing closes the
 * result carries the full trial log and `closed` stays false. */
inline GapFill gap_fill(const DenominatorGrid& grid, long n, int alpha, int target_index) {
  GapFill g;
  g.target_index = target_index;
  g.target = kissing_number(target_index);
  g.n = n;
  g.alpha = alpha;
  auto cell = grid.reg_at(n, alpha);
  if (!cell || *cell == kSaturated)
    throw std::domain_error("gap_fill: pivot cell is not on the grid");
  g.pivot = static_cast<long long>(*cell);
  if (g.pivot == 0 || g.pivot == g.target)
    throw std::domain_error("gap_fill: cell does not qualify as a pivot");
  g.to_right = g.pivot > g.target;
  if (!detail::gap_window_ok(Rat(g.pivot, g.target), !g.to_right))
    throw std::domain_error("gap_fill: pivot outside the ratio window");

  auto co_amps = [&](long long k) -> std::optional<std::vector<long long>> {
    std::vector<long long> seg;
    for (long long i = 1; i <= k; ++i) {
      long long j = g.to_right ? alpha + i : alpha - i;
      if (j < 1) return std::nullopt;
      auto v = grid.reg_at(n, static_cast<int>(j));
      if (!v || *v == kSaturated) return std::nullopt;
      seg.push_back(static_cast<long long>(*v));
    }
    return seg;
  };

  long long gap = g.target - g.pivot;
  std::vector<long long> pool = detail::gap_factor_pool(n);
  auto close = [&](char rule, long long factor, long long count, int tie,
                   std::vector<long long> tuple, std::vector<int> signs, long long delta) {
    g.closed = true;
    g.rule = rule;
    g.factor = factor;
    g.inclusions = count;
    g.tie = tie;
    g.co_tuple = std::move(tuple);
    g.signs = std::move(signs);
    g.delta = delta;
  };

  for (long long p : pool) {
    auto seg = co_amps(p);
    if (!seg) continue;
    std::vector<long long> tuple = detail::dedup_keep_first(*seg);
    long long delta = 0;
    for (long long v : tuple) delta += v;
    g.trials.push_back({'a', p, p, 0, delta});
    if (delta == gap) {
      std::vector<int> signs(tuple.size(), 1);
      close('a', p, p, 0, std::move(tuple), std::move(signs), delta);
      return g;
    }
  }
  for (long long p : pool) {
    long long pj = 4 * p + 3;
    auto seg = co_amps(pj);
    if (!seg) continue;
    std::vector<long long> tuple = detail::dedup_keep_first(*seg);
    for (auto [tie, special] : gap_sign_variants()) {
      std::vector<int> signs;
      long long delta = 0;
      for (long long v : tuple) {
        int s = (v % tie == 0 || v == special) ? 1 : -1;
        signs.push_back(s);
        delta += s * v;
      }
      g.trials.push_back({'b', p, pj, tie, delta});
      if (delta == gap) {
        close('b', p, pj, tie, std::move(tuple), std::move(signs), delta);
        return g;
      }
    }
  }
  return g;
}

inline long long preserved_sign_count(const GapFill& g) {
  long long c = 0;
  for (int s : g.signs)
    if (s > 0) ++c;
  return c;
}

// local boundary spanned by the distinct co-amplitudes; a closed fill's
// delta is one of its labels by construction
inline LabelField gap_fill_boundary(const GapFill& g) {
  CrotonBasis b;
  b.values = g.co_tuple;
  return enumerate_realizable(b);
}

}  // namespace croton
