#pragma once

/* Boundary-label fields: every label E.basis^t over coefficient vectors
 * E in {-1,0,+1}^T, their realizability sets, representations, zero
 * singularities, duality controls and kissing-number realizability.
 *
 * Realizability is computed meet-in-the-middle: the tuple is split in
 * halves, partial sums of the low half become a small bitset which is then
 * shifted by every distinct high-half sum and ORed into the full range.
 * Sign symmetry (E -> -E) lets us store positive labels only. */

#include <algorithm>
#include <array>
#include <cstdint>
#include <iostream>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "basis.hpp"

namespace croton {

class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(std::size_t nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }
  void set(std::size_t i) { w_[i >> 6] |= 1ull << (i & 63); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

  // *this |= src << shift
  void or_shifted(const DynBitset& src, std::size_t shift) {
    std::size_t ws = shift >> 6, bs = shift & 63;
    for (std::size_t i = 0; i < src.w_.size(); ++i) {
      std::uint64_t v = src.w_[i];
      if (!v) continue;
      if (i + ws < w_.size()) w_[i + ws] |= v << bs;
      if (bs && i + ws + 1 < w_.size()) w_[i + ws + 1] |= v >> (64 - bs);
    }
  }

  long long popcount() const {
    long long n = 0;
    for (std::uint64_t v : w_) n += __builtin_popcountll(v);
    return n;
  }

  std::vector<std::uint64_t>& words() { return w_; }
  const std::vector<std::uint64_t>& words() const { return w_; }
  bool operator==(const DynBitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> w_;
};

struct Representation {
  std::vector<int> coefficients;  // entries in {-1,0,+1}
  long long value = 0;
};

struct LabelField {
  CrotonBasis basis;
  long long max_value = 0;   // sum of |values|, the highest conceivable label
  DynBitset positives;       // bit v-1 set iff label v in [1, max_value] realized
  long long realized_count = 0;
  long long zero_reps = 0;   // nonzero vectors summing to 0, modulo sign flip

  bool is_realizable(long long v) const {
    if (v == 0) return false;
    long long a = v < 0 ? -v : v;
    if (a > max_value) return false;
    return positives.test(static_cast<std::size_t>(a - 1));
  }
};

namespace detail {

// digits of idx in base 3, most significant first, mapped 0,1,2 -> -1,0,+1;
// ascending idx therefore walks vectors in lexicographic order with -1<0<+1
inline void lex_vector(std::uint32_t idx, int n, int* out) {
  for (int j = n - 1; j >= 0; --j) {
    out[j] = static_cast<int>(idx % 3) - 1;
    idx /= 3;
  }
}

inline std::uint32_t pow3(int n) {
  std::uint32_t r = 1;
  while (n--) r *= 3;
  return r;
}

struct HalfSums {
  int n = 0;                                   // coefficients in this half
  std::vector<long long> sum;                  // sum per lex index
  std::unordered_map<long long, long long> count;
  std::unordered_map<long long, std::uint32_t> first_idx;  // lex-smallest index per sum

  void build(const std::vector<long long>& vals, int lo, int hi) {
    n = hi - lo;
    std::uint32_t total = pow3(n);
    sum.resize(total);
    count.reserve(total * 2);
    first_idx.reserve(total * 2);
    std::vector<int> e(static_cast<std::size_t>(n ? n : 1));
    for (std::uint32_t idx = 0; idx < total; ++idx) {
      lex_vector(idx, n, e.data());
      long long s = 0;
      for (int j = 0; j < n; ++j) s += static_cast<long long>(e[j]) * vals[lo + j];
      sum[idx] = s;
      ++count[s];
      first_idx.emplace(s, idx);  // keeps the first (lex-smallest)
    }
  }
};

}  // namespace detail

inline LabelField enumerate_realizable(const CrotonBasis& basis) {
  int T = basis.size();
  if (T > 20) throw std::domain_error("tuple too large for enumeration");
  LabelField f;
  f.basis = basis;
  f.max_value = basis.abs_sum();

  int nA = (T + 1) / 2;
  detail::HalfSums A, B;
  A.build(basis.values, 0, nA);
  B.build(basis.values, nA, T);

  long long ma = 0, mb = 0;
  for (int i = 0; i < nA; ++i) ma += std::llabs(basis.values[i]);
  for (int i = nA; i < T; ++i) mb += std::llabs(basis.values[i]);

  DynBitset maskA(static_cast<std::size_t>(2 * ma + 1));
  for (long long s : A.sum) maskA.set(static_cast<std::size_t>(s + ma));

  DynBitset full(static_cast<std::size_t>(2 * f.max_value + 1));
  for (auto& [s, cnt] : B.count)
    full.or_shifted(maskA, static_cast<std::size_t>(s + mb));

  f.positives = DynBitset(static_cast<std::size_t>(f.max_value));
  for (long long v = 1; v <= f.max_value; ++v)
    if (full.test(static_cast<std::size_t>(f.max_value + v)))
      f.positives.set(static_cast<std::size_t>(v - 1));
  f.realized_count = f.positives.popcount();

  long long zero_total = 0;  // includes the all-zero vector
  for (auto& [s, cnt] : A.count) {
    auto it = B.count.find(-s);
    if (it != B.count.end()) zero_total += cnt * it->second;
  }
  f.zero_reps = (zero_total - 1) / 2;
  return f;
}

// direct 3^T enumeration, for cross-checking the split construction
inline LabelField brute_realizable(const CrotonBasis& basis) {
  int T = basis.size();
  if (T > 12) throw std::domain_error("brute force limited to T <= 12");
  LabelField f;
  f.basis = basis;
  f.max_value = basis.abs_sum();
  f.positives = DynBitset(static_cast<std::size_t>(f.max_value));
  long long zero_total = 0;
  std::uint32_t total = detail::pow3(T);
  std::vector<int> e(static_cast<std::size_t>(T));
  for (std::uint32_t idx = 0; idx < total; ++idx) {
    detail::lex_vector(idx, T, e.data());
    long long s = 0;
    for (int j = 0; j < T; ++j) s += static_cast<long long>(e[j]) * basis.values[j];
    if (s > 0) f.positives.set(static_cast<std::size_t>(s - 1));
    if (s == 0) ++zero_total;
  }
  f.realized_count = f.positives.popcount();
  f.zero_reps = (zero_total - 1) / 2;
  return f;
}

inline std::vector<long long> unrealizable_list(const LabelField& f) {
  std::vector<long long> out;
  for (long long v = 1; v <= f.max_value; ++v)
    if (!f.positives.test(static_cast<std::size_t>(v - 1))) out.push_back(v);
  return out;
}

/* Lexicographically smallest representation under -1 < 0 < +1 scanned
 * left-to-right. The low half is walked in lex order; the high half lookup
 * returns the lex-smallest completion per residual sum. A zero target asks
 * for a singularity witness: the all-zero vector is excluded and the result
 * is normalized so its first nonzero coefficient is +1, the form in which
 * singularity assignments are quoted. */
inline std::optional<Representation> find_representation(const CrotonBasis& basis,
                                                         long long target) {
  int T = basis.size();
  if (T > 20) throw std::domain_error("tuple too large for enumeration");
  int nA = (T + 1) / 2, nB = T - nA;
  detail::HalfSums A, B;
  A.build(basis.values, 0, nA);
  B.build(basis.values, nA, T);

  auto assemble = [&](std::uint32_t ia, std::uint32_t ib) {
    Representation r;
    r.coefficients.resize(static_cast<std::size_t>(T));
    detail::lex_vector(ia, nA, r.coefficients.data());
    detail::lex_vector(ib, nB, r.coefficients.data() + nA);
    r.value = target;
    return r;
  };

  if (target != 0) {
    for (std::uint32_t ia = 0; ia < A.sum.size(); ++ia) {
      auto it = B.first_idx.find(target - A.sum[ia]);
      if (it != B.first_idx.end()) return assemble(ia, it->second);
    }
    return std::nullopt;
  }

  // zero target: lex order over B indices sharing a sum is ascending, so the
  // first nonzero pair found while walking A lex-first is the lex-smallest
  std::unordered_map<long long, std::vector<std::uint32_t>> by_sum;
  for (std::uint32_t ib = 0; ib < B.sum.size(); ++ib)
    by_sum[B.sum[ib]].push_back(ib);
  for (std::uint32_t ia = 0; ia < A.sum.size(); ++ia) {
    auto it = by_sum.find(-A.sum[ia]);
    if (it == by_sum.end()) continue;
    for (std::uint32_t ib : it->second) {
      Representation r = assemble(ia, ib);
      bool all_zero = std::all_of(r.coefficients.begin(), r.coefficients.end(),
                                  [](int c) { return c == 0; });
      if (all_zero) continue;
      for (int c : r.coefficients) {
        if (c == 0) continue;
        if (c < 0)
          for (int& x : r.coefficients) x = -x;
        break;
      }
      return r;
    }
  }
  return std::nullopt;
}

struct ZeroReps {
  long long count = 0;
  std::vector<std::vector<int>> witnesses;  // capped, canonical leading +1
};

inline ZeroReps zero_representations(const CrotonBasis& basis, int witness_cap = 8) {
  int T = basis.size();
  if (T > 20) throw std::domain_error("tuple too large for enumeration");
  int nA = (T + 1) / 2, nB = T - nA;
  detail::HalfSums A, B;
  A.build(basis.values, 0, nA);
  B.build(basis.values, nA, T);

  ZeroReps z;
  long long zero_total = 0;
  for (auto& [s, cnt] : A.count) {
    auto it = B.count.find(-s);
    if (it != B.count.end()) zero_total += cnt * it->second;
  }
  z.count = (zero_total - 1) / 2;

  std::unordered_map<long long, std::vector<std::uint32_t>> by_sum;
  for (std::uint32_t ib = 0; ib < B.sum.size(); ++ib)
    by_sum[B.sum[ib]].push_back(ib);
  std::set<std::vector<int>> seen;
  for (std::uint32_t ia = 0;
       ia < A.sum.size() && static_cast<int>(seen.size()) < witness_cap; ++ia) {
    auto it = by_sum.find(-A.sum[ia]);
    if (it == by_sum.end()) continue;
    for (std::uint32_t ib : it->second) {
      std::vector<int> e(static_cast<std::size_t>(T));
      detail::lex_vector(ia, nA, e.data());
      detail::lex_vector(ib, nB, e.data() + nA);
      if (std::all_of(e.begin(), e.end(), [](int c) { return c == 0; })) continue;
      for (int c : e) {
        if (c == 0) continue;
        if (c < 0)
          for (int& x : e) x = -x;
        break;
      }
      if (seen.insert(e).second && static_cast<int>(seen.size()) >= witness_cap)
        break;
    }
  }
  z.witnesses.assign(seen.begin(), seen.end());
  return z;
}

enum class DualityCase { Intra, Inter };

struct ControlRow {
  std::string label;
  long long difference = 0;
  long long control = 0;
  bool ok() const { return difference == control; }
};

struct DualityReport {
  long long gamma_realized = 0;
  long long gamma_unrealized = 0;
  long long gamma_realized_starred = 0;  // singularity assignment included
  long long chi_realized = 0;
  long long chi_unrealized = 0;
  long long d_realized = 0;    // chi_realized - gamma_realized
  long long d_unrealized = 0;  // chi_unrealized - gamma_unrealized
  std::array<ControlRow, 2> controls;
  bool ok() const { return controls[0].ok() && controls[1].ok(); }
};

/* The realized/unrealized counts of a (Gamma, chi) field pair are tied by
 * two control quantities, read as difference identities:
 *   intraordinal:  #not-chi - #Gamma = C_2,      #chi - #not-Gamma = 5*2^2
 *   interordinal:  #chi - #Gamma* = 5*2,         #not-chi - #not-Gamma = C_4
 * where #Gamma* counts the zero singularity as an extra assignment. */
inline DualityReport duality_report(const LabelField& gamma, const LabelField& chi,
                                    DualityCase c) {
  if (gamma.basis.order_lo != chi.basis.order_lo ||
      gamma.basis.order_hi != chi.basis.order_hi)
    throw std::invalid_argument("duality report needs matching orders");
  DualityReport r;
  r.gamma_realized = gamma.realized_count;
  r.gamma_unrealized = gamma.max_value - gamma.realized_count;
  r.gamma_realized_starred = r.gamma_realized + (gamma.zero_reps > 0 ? 1 : 0);
  r.chi_realized = chi.realized_count;
  r.chi_unrealized = chi.max_value - chi.realized_count;
  r.d_realized = r.chi_realized - r.gamma_realized;
  r.d_unrealized = r.chi_unrealized - r.gamma_unrealized;
  if (c == DualityCase::Intra) {
    r.controls[0] = {"C_2", r.chi_unrealized - r.gamma_realized,
                     static_cast<long long>(catalan(2))};
    r.controls[1] = {"5*2^2", r.chi_realized - r.gamma_unrealized, 5 * 4};
  } else {
    r.controls[0] = {"5*2", r.chi_realized - r.gamma_realized_starred, 5 * 2};
    r.controls[1] = {"C_4", r.chi_unrealized - r.gamma_unrealized,
                     static_cast<long long>(catalan(4))};
  }
  return r;
}

struct KissingRow {
  int m = 0;
  long long L = 0;
  bool l_realizable = false;   // +-L_m
  bool l1_realizable = false;  // +-(L_m + 1)
};

template <typename Table>
std::vector<KissingRow> kissing_realizability(const LabelField& f, const Table& table,
                                              int m_lo, int m_hi) {
  std::vector<KissingRow> out;
  for (int m = m_lo; m <= m_hi; ++m) {
    long long L = table[m - 1];
    out.push_back({m, L, f.is_realizable(L), f.is_realizable(L + 1)});
  }
  return out;
}

template <typename Coeffs>
bool verify_encoding(const CrotonBasis& basis, const Coeffs& coefficients,
                     long long claimed_value) {
  if (static_cast<int>(coefficients.size()) != basis.size())
    throw std::invalid_argument("coefficient length does not match tuple");
  long long s = 0;
  for (int i = 0; i < basis.size(); ++i)
    s += static_cast<long long>(coefficients[i]) * basis.values[i];
  return s == claimed_value;
}

/* Field cache: version byte, then order/kind/T/max_value header plus the
 * derived counts, then the positive-label bitset as little-endian words. */
inline constexpr std::uint8_t kFieldCacheVersion = 1;

namespace detail {

inline void put_u32(std::ostream& os, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) os.put(static_cast<char>((v >> (8 * i)) & 0xff));
}
inline void put_u64(std::ostream& os, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) os.put(static_cast<char>((v >> (8 * i)) & 0xff));
}
inline std::uint32_t get_u32(std::istream& is) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i)
    v |= static_cast<std::uint32_t>(static_cast<unsigned char>(is.get())) << (8 * i);
  return v;
}
inline std::uint64_t get_u64(std::istream& is) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i)
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(is.get())) << (8 * i);
  return v;
}

}  // namespace detail

inline void save_field(const LabelField& f, std::ostream& os) {
  os.put(static_cast<char>(kFieldCacheVersion));
  detail::put_u32(os, static_cast<std::uint32_t>(f.basis.order_lo));
  detail::put_u32(os, static_cast<std::uint32_t>(f.basis.order_hi));
  os.put(f.basis.kind == BasisKind::G ? 'G' : 'J');
  detail::put_u32(os, static_cast<std::uint32_t>(f.basis.size()));
  detail::put_u64(os, static_cast<std::uint64_t>(f.max_value));
  detail::put_u64(os, static_cast<std::uint64_t>(f.realized_count));
  detail::put_u64(os, static_cast<std::uint64_t>(f.zero_reps));
  detail::put_u64(os, static_cast<std::uint64_t>(f.positives.size()));
  for (std::uint64_t w : f.positives.words()) detail::put_u64(os, w);
}

inline LabelField load_field(std::istream& is) {
  int version = is.get();
  if (version != kFieldCacheVersion)
    throw std::runtime_error("unsupported field cache version");
  int lo = static_cast<int>(detail::get_u32(is));
  int hi = static_cast<int>(detail::get_u32(is));
  BasisKind kind = is.get() == 'G' ? BasisKind::G : BasisKind::J;
  int T = static_cast<int>(detail::get_u32(is));
  LabelField f;
  f.basis = lo == hi ? builtin_basis(lo, kind) : interordinal_basis(lo, hi, kind);
  if (f.basis.size() != T) throw std::runtime_error("field cache tuple mismatch");
  f.max_value = static_cast<long long>(detail::get_u64(is));
  f.realized_count = static_cast<long long>(detail::get_u64(is));
  f.zero_reps = static_cast<long long>(detail::get_u64(is));
  std::size_t nbits = static_cast<std::size_t>(detail::get_u64(is));
  f.positives = DynBitset(nbits);
  for (std::uint64_t& w : f.positives.words()) w = detail::get_u64(is);
  if (!is) throw std::runtime_error("truncated field cache");
  return f;
}

}  // namespace croton
