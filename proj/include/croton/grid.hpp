#pragma once

/* Certified denominator grids. A source family fixes an irrational (scaled
 * down by 2^n or by the integer clamp tau_1^(n)); each column n holds the
 * certified terms of its regular and alternating expansions, indexed by the
 * term position alpha. Values above the 64-bit range are saturated; columns
 * whose certification ran out carry an exhaustion mark instead of guesses. */

#include <cstdint>
#include <iostream>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "constants.hpp"
#include "contfrac.hpp"
#include "interval.hpp"

namespace croton {

enum class Family { Sqrt2, TypeI, TypeII, TypeIII, Kappa };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::Sqrt2: return "sqrt2";
    case Family::TypeI: return "type1";
    case Family::TypeII: return "type2";
    case Family::TypeIII: return "type3";
    case Family::Kappa: return "kappa";
  }
  return "?";
}

inline bool family_has_s(Family f) {
  return f == Family::TypeI || f == Family::TypeII || f == Family::TypeIII;
}

struct SourceSpec {
  Family family = Family::Sqrt2;
  int s = 0;        // modulator index, 2..9 for the Type families
  long n = 1;       // time-like refinement index
  long long offset = 0;  // optional integer trajectory shift

  void validate() const {
    if (family_has_s(family)) {
      if (s < 2 || s > 9) throw std::domain_error("modulator index outside 2..9");
    } else if (s != 0) {
      throw std::domain_error("family takes no modulator index");
    }
    if (n < 1) throw std::domain_error("refinement index must be positive");
    if (family == Family::TypeIII && n < 3)
      throw std::domain_error("clamp denominator needs n >= 3");
  }
};

inline RatInterval source_value(const SourceSpec& spec, long precision = kDefaultPrecision) {
  spec.validate();
  RatInterval base = [&]() -> RatInterval {
    switch (spec.family) {
      case Family::Sqrt2:
        return sqrt2_interval(precision);
      case Family::TypeI: {
        Int k = log2_catalan_floor(static_cast<unsigned long>(spec.s));
        return pi_interval(precision) * Rat(k);
      }
      case Family::TypeII:
        return log2_catalan_interval(static_cast<unsigned long>(spec.s), precision) *
               pi_interval(precision);
      case Family::TypeIII: {
        RatInterval l = log2_catalan_interval(static_cast<unsigned long>(spec.s), precision);
        Int t1 = tau1(spec.n);
        return l * Rat(Int(1), t1);
      }
      case Family::Kappa:
        return kappa_interval(precision);
    }
    throw std::domain_error("unsupported family");
  }();
  RatInterval v = spec.family == Family::TypeIII ? base : div_pow2(base, spec.n);
  if (spec.offset != 0) {
    Rat off(spec.offset);
    v = RatInterval(v.lo + off, v.hi + off);
  }
  return v;
}

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

namespace detail {

inline std::uint64_t saturate(const Int& v) {
  static const Int cap = Int(kSaturated);
  if (v >= cap) return kSaturated;
  return static_cast<std::uint64_t>(v);
}

}  // namespace detail

struct GridColumn {
  std::vector<std::uint64_t> reg;
  std::vector<std::uint64_t> alt;
  bool reg_exhausted = false;  // certification ran out before alpha_max
  bool alt_exhausted = false;
};

struct DenominatorGrid {
  Family family = Family::Sqrt2;
  int s = 0;
  long n_lo = 1;
  long n_hi = 1;
  int alpha_max = 499;
  long precision = kDefaultPrecision;
  std::vector<GridColumn> cols;

  const GridColumn& column(long n) const {
    if (n < n_lo || n > n_hi) throw std::out_of_range("column outside grid");
    return cols[static_cast<std::size_t>(n - n_lo)];
  }

  std::optional<std::uint64_t> reg_at(long n, int alpha) const {
    if (n < n_lo || n > n_hi || alpha < 0) return std::nullopt;
    auto& c = column(n).reg;
    if (static_cast<std::size_t>(alpha) >= c.size()) return std::nullopt;
    return c[static_cast<std::size_t>(alpha)];
  }

  std::optional<std::uint64_t> alt_at(long n, int alpha) const {
    if (n < n_lo || n > n_hi || alpha < 0) return std::nullopt;
    auto& c = column(n).alt;
    if (static_cast<std::size_t>(alpha) >= c.size()) return std::nullopt;
    return c[static_cast<std::size_t>(alpha)];
  }
};

/* The per-family base value is computed once at full precision; each column
 * only rescales it, so grid cost is dominated by the expansions themselves. */
inline DenominatorGrid build_grid(Family family, int s, long n_lo, long n_hi,
                                  int alpha_max = 499,
                                  long precision = kDefaultPrecision) {
  if (n_lo < 1 || n_hi < n_lo) throw std::domain_error("bad refinement range");
  DenominatorGrid g;
  g.family = family;
  g.s = family_has_s(family) ? s : 0;
  g.n_lo = n_lo;
  g.n_hi = n_hi;
  g.alpha_max = alpha_max;
  g.precision = precision;
  g.cols.resize(static_cast<std::size_t>(n_hi - n_lo + 1));

  SourceSpec probe{family, g.s, n_lo, 0};
  probe.validate();

  std::optional<RatInterval> base;
  std::optional<RatInterval> pi_hint;
  if (family != Family::TypeIII) {
    base = source_value(SourceSpec{family, g.s, 1, 0}, precision);
    // the n=1 value carries one halving already; undo it to get the raw base
    base = RatInterval(base->lo * 2, base->hi * 2);
  } else {
    base = log2_catalan_interval(static_cast<unsigned long>(g.s), precision);
    long digits = (n_hi * 302) / 1000 + 40;
    pi_hint = pi_interval(digits);
  }

  std::size_t cap = static_cast<std::size_t>(alpha_max) + 1;
  for (long n = n_lo; n <= n_hi; ++n) {
    RatInterval v = family == Family::TypeIII
                        ? *base * Rat(Int(1), tau1(n, pi_hint ? &*pi_hint : nullptr))
                        : div_pow2(*base, n);
    FractionPair pair = to_pair(v);
    CFExpansion reg = cf_regular_pair(pair, cap);
    AltCFExpansion alt = cf_alternating_pair(pair, cap);
    GridColumn& col = g.cols[static_cast<std::size_t>(n - n_lo)];
    col.reg.reserve(reg.terms.size());
    for (const Int& t : reg.terms) col.reg.push_back(detail::saturate(t));
    col.alt.reserve(alt.terms.size());
    for (const Int& t : alt.terms) col.alt.push_back(detail::saturate(t));
    col.reg_exhausted = reg.exhausted && col.reg.size() < cap;
    col.alt_exhausted = alt.exhausted && col.alt.size() < cap;
  }
  return g;
}

/* Grid cache, one file per (family, s): fixed header, then each column as
 * run-length encoded (value, count) pairs. */
inline constexpr std::uint8_t kGridCacheVersion = 1;

namespace detail {

inline void put_u8(std::ostream& os, std::uint8_t v) { os.put(static_cast<char>(v)); }
inline void put_u32g(std::ostream& os, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) os.put(static_cast<char>((v >> (8 * i)) & 0xff));
}
inline void put_u64g(std::ostream& os, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) os.put(static_cast<char>((v >> (8 * i)) & 0xff));
}
inline std::uint32_t get_u32g(std::istream& is) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i)
    v |= static_cast<std::uint32_t>(static_cast<unsigned char>(is.get())) << (8 * i);
  return v;
}
inline std::uint64_t get_u64g(std::istream& is) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i)
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(is.get())) << (8 * i);
  return v;
}

inline void put_rle(std::ostream& os, const std::vector<std::uint64_t>& xs) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> runs;
  for (std::uint64_t x : xs) {
    if (!runs.empty() && runs.back().first == x &&
        runs.back().second < std::numeric_limits<std::uint32_t>::max())
      ++runs.back().second;
    else
      runs.push_back({x, 1});
  }
  put_u32g(os, static_cast<std::uint32_t>(runs.size()));
  for (auto& [v, c] : runs) {
    put_u64g(os, v);
    put_u32g(os, c);
  }
}

inline std::vector<std::uint64_t> get_rle(std::istream& is) {
  std::uint32_t nruns = get_u32g(is);
  std::vector<std::uint64_t> xs;
  for (std::uint32_t i = 0; i < nruns; ++i) {
    std::uint64_t v = get_u64g(is);
    std::uint32_t c = get_u32g(is);
    xs.insert(xs.end(), c, v);
  }
  return xs;
}

}  // namespace detail

inline void save_grid(const DenominatorGrid& g, std::ostream& os) {
  detail::put_u8(os, kGridCacheVersion);
  detail::put_u8(os, static_cast<std::uint8_t>(g.family));
  detail::put_u8(os, static_cast<std::uint8_t>(g.s));
  detail::put_u64g(os, static_cast<std::uint64_t>(g.n_lo));
  detail::put_u64g(os, static_cast<std::uint64_t>(g.n_hi));
  detail::put_u32g(os, static_cast<std::uint32_t>(g.alpha_max));
  detail::put_u64g(os, static_cast<std::uint64_t>(g.precision));
  for (auto& col : g.cols) {
    detail::put_u8(os, static_cast<std::uint8_t>((col.reg_exhausted ? 1 : 0) |
                                                 (col.alt_exhausted ? 2 : 0)));
    detail::put_rle(os, col.reg);
    detail::put_rle(os, col.alt);
  }
}

inline DenominatorGrid load_grid(std::istream& is) {
  if (is.get() != kGridCacheVersion)
    throw std::runtime_error("unsupported grid cache version");
  DenominatorGrid g;
  g.family = static_cast<Family>(is.get());
  g.s = is.get();
  g.n_lo = static_cast<long>(detail::get_u64g(is));
  g.n_hi = static_cast<long>(detail::get_u64g(is));
  g.alpha_max = static_cast<int>(detail::get_u32g(is));
  g.precision = static_cast<long>(detail::get_u64g(is));
  g.cols.resize(static_cast<std::size_t>(g.n_hi - g.n_lo + 1));
  for (auto& col : g.cols) {
    int flags = is.get();
    col.reg_exhausted = flags & 1;
    col.alt_exhausted = flags & 2;
    col.reg = detail::get_rle(is);
    col.alt = detail::get_rle(is);
  }
  if (!is) throw std::runtime_error("truncated grid cache");
  return g;
}

}  // namespace croton
