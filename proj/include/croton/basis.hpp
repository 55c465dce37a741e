#pragma once

/* Croton base-number tuples of orders 3/7/15/31, their interordinal merges,
 * and the two 8x8 quadrant matrices the order-31 tuples are extracted from.
 * All tuples are shipped as checked-in data; extract_tuple re-derives the
 * order-31 tuples from the matrices and is required to agree. */

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "constants.hpp"

namespace croton {

enum class BasisKind { G, J };

inline char basis_kind_char(BasisKind k) { return k == BasisKind::G ? 'G' : 'J'; }

struct CrotonBasis {
  int order_lo = 0;           // single order p, or low member of a merged pair
  int order_hi = 0;           // == order_lo unless interordinal
  BasisKind kind = BasisKind::G;
  std::vector<long long> values;
  std::vector<int> centers;   // indices of the underlined Catalan entries

  bool interordinal() const { return order_lo != order_hi; }
  int size() const { return static_cast<int>(values.size()); }

  long long abs_sum() const {
    long long s = 0;
    for (long long v : values) s += std::llabs(v);
    return s;
  }
};

namespace basis_data {

inline const std::vector<long long>& tuple(int order, BasisKind kind) {
  static const std::vector<long long> g3{1};
  static const std::vector<long long> j3{1};
  static const std::vector<long long> g7{1};
  static const std::vector<long long> j7{-1, 3};
  static const std::vector<long long> g15{3, 5, 11, 17, 41, 113};
  static const std::vector<long long> j15{-5, 15, -43, 149};
  static const std::vector<long long> g31{
      19, 43, 115, 155, 429, 1275, 1595, 1633, 4819, 4905,
      15067, 15297, 18627, 58781, 189371, 227089, 737953, 2430289};
  static const std::vector<long long> j31{
      13, -41, 117, 143, -429, 1319, 1343, 1547, -4823, -4903,
      15547, 17989, 18269, -58791, 194993, 223573, -747765, 2886235};
  switch (order) {
    case 3: return kind == BasisKind::G ? g3 : j3;
    case 7: return kind == BasisKind::G ? g7 : j7;
    case 15: return kind == BasisKind::G ? g15 : j15;
    case 31: return kind == BasisKind::G ? g31 : j31;
    default: throw std::domain_error("unsupported basis order");
  }
}

}  // namespace basis_data

inline CrotonBasis builtin_basis(int order, BasisKind kind) {
  CrotonBasis b;
  b.order_lo = b.order_hi = order;
  b.kind = kind;
  b.values = basis_data::tuple(order, kind);
  // underlined center carries |value| = C_q, q = (p-3)/4
  Int cq = catalan(static_cast<unsigned long>((order - 3) / 4));
  for (int i = 0; i < b.size(); ++i)
    if (Int(std::llabs(b.values[i])) == cq) {
      b.centers.push_back(i);
      break;
    }
  if (b.centers.empty()) throw std::logic_error("basis missing Catalan center");
  return b;
}

// merge of two neighboring orders, ascending by absolute value, signs kept
inline CrotonBasis interordinal_basis(int lo, int hi, BasisKind kind) {
  if (lo != 7 || hi != 15) throw std::domain_error("unsupported interordinal pair");
  CrotonBasis b;
  b.order_lo = lo;
  b.order_hi = hi;
  b.kind = kind;
  auto& a = basis_data::tuple(lo, kind);
  auto& c = basis_data::tuple(hi, kind);
  b.values.insert(b.values.end(), a.begin(), a.end());
  b.values.insert(b.values.end(), c.begin(), c.end());
  std::sort(b.values.begin(), b.values.end(),
            [](long long x, long long y) { return std::llabs(x) < std::llabs(y); });
  // both constituent centers stay underlined: C_1 = 1 and C_3 = 5
  for (int i = 0; i < b.size(); ++i)
    if (std::llabs(b.values[i]) == 1 || std::llabs(b.values[i]) == 5)
      b.centers.push_back(i);
  return b;
}

/* 8x8 quadrant matrices. The upper-right 4x4 block is the order-15
 * reproduction; everything else carries the order-31 values. Two print
 * artifacts in the J matrix (an inconsistent underline and one "41" whose
 * sign disagrees with the twice-stated prose tuple) are normalized to the
 * prose tuples. */
struct QuadrantMatrix {
  BasisKind kind;
  std::array<std::array<long long, 8>, 8> entries;
};

inline const QuadrantMatrix& quadrant_matrix(BasisKind kind) {
  static const QuadrantMatrix g{
      BasisKind::G,
      {{{429, 155, 43, 19, 5, 3, 1, 1},
        {1275, 429, 115, 43, 11, 5, 1, 1},
        {4819, 1595, 429, 155, 41, 17, 5, 3},
        {15067, 4819, 1275, 429, 113, 41, 11, 5},
        {58781, 18627, 4905, 1633, 429, 155, 43, 19},
        {189371, 58781, 15297, 4905, 1275, 429, 115, 43},
        {737953, 227089, 58781, 18627, 4819, 1595, 429, 155},
        {2430289, 737953, 189371, 58781, 15067, 4819, 1275, 429}}}};
  static const QuadrantMatrix j{
      BasisKind::J,
      {{{-429, 117, -41, 13, -5, 1, -1, 1},
        {1547, -429, 143, -41, 15, -5, 3, -1},
        {-4903, 1343, -429, 117, -43, 15, -5, 1},
        {18269, -4903, 1547, -429, 149, -43, 15, -5},
        {-58791, 15547, -4823, 1319, -429, 117, -41, 13},
        {223573, -58791, 17989, -4823, 1547, -429, 143, -41},
        {-747765, 194993, -58791, 15547, -4903, 1343, -429, 117},
        {2886235, -747765, 223573, -58791, 18269, -4903, 1547, -429}}}};
  return kind == BasisKind::G ? g : j;
}

// collect entries outside the upper-right 4x4 reproduction block, dedup by
// absolute value keeping the first-seen sign, sort ascending by |value|
inline CrotonBasis extract_tuple(const QuadrantMatrix& q) {
  std::vector<long long> vals;
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) {
      if (r < 4 && c >= 4) continue;
      long long v = q.entries[r][c];
      bool seen = false;
      for (long long w : vals)
        if (std::llabs(w) == std::llabs(v)) {
          seen = true;
          break;
        }
      if (!seen) vals.push_back(v);
    }
  std::sort(vals.begin(), vals.end(),
            [](long long x, long long y) { return std::llabs(x) < std::llabs(y); });
  CrotonBasis b = builtin_basis(31, q.kind);
  b.values = std::move(vals);
  b.centers.clear();
  for (int i = 0; i < b.size(); ++i)
    if (std::llabs(b.values[i]) == 429) b.centers.push_back(i);
  return b;
}

/* The upper-right 4x4 block must reproduce the order-15 quadrant, whose own
 * corner in turn nests the order-7 values, so its distinct magnitudes are the
 * unit plus the order-15 and order-7 tuples. (For G the order-7 tuple is just
 * the unit; for J it contributes the 3.) */
inline bool verify_subquadrant_recursion(const QuadrantMatrix& q) {
  std::vector<long long> have;
  for (int r = 0; r < 4; ++r)
    for (int c = 4; c < 8; ++c) {
      long long a = std::llabs(q.entries[r][c]);
      if (std::find(have.begin(), have.end(), a) == have.end()) have.push_back(a);
    }
  std::vector<long long> want{1};
  for (int order : {7, 15})
    for (long long v : basis_data::tuple(order, q.kind)) {
      long long a = std::llabs(v);
      if (std::find(want.begin(), want.end(), a) == want.end()) want.push_back(a);
    }
  std::sort(have.begin(), have.end());
  std::sort(want.begin(), want.end());
  return have == want;
}

// FNV-1a over the decimal rendering of the entries, row-major; guards the
// checked-in matrix data against silent edits
inline std::uint64_t quadrant_checksum(const QuadrantMatrix& q) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](char c) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  };
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) {
      for (char ch : std::to_string(q.entries[r][c])) mix(ch);
      mix(',');
    }
  return h;
}

inline std::string basis_to_json(const CrotonBasis& b) {
  std::string s = "{\"order\":";
  if (b.interordinal())
    s += "[" + std::to_string(b.order_lo) + "," + std::to_string(b.order_hi) + "]";
  else
    s += std::to_string(b.order_lo);
  s += ",\"kind\":\"";
  s += basis_kind_char(b.kind);
  s += "\",\"values\":[";
  for (int i = 0; i < b.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(b.values[i]);
  }
  s += "],\"center_index\":" + std::to_string(b.centers.empty() ? -1 : b.centers.front());
  s += ",\"centers\":[";
  for (std::size_t i = 0; i < b.centers.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(b.centers[i]);
  }
  s += "]}";
  return s;
}

}  // namespace croton
