#pragma once

/* Magnus sums and the force-ratio bound, the Mersennian preon charge model
 * with its quark configurations, and the kissing-number selection rules that
 * pick out the quark generations, their family law and the inter-generational
 * controls. All charge arithmetic is exact. */

#include <array>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "constants.hpp"
#include "interval.hpp"
#include "kissing.hpp"
#include "numeric.hpp"

namespace croton {

inline Rat magnus_term(unsigned long k, const Rat& x) {
  if (!(x > 0 && x < 1)) throw std::domain_error("magnus_term: x outside (0,1)");
  unsigned long e = k * (k + 1) / 2;
  Rat p = make_rat(ipow(rat_num(x), e), ipow(rat_den(x), e));
  if (e % 2 == 1) p = -p;
  Int w(2 * k + 1);
  return Rat(w * w) * p;
}

namespace detail {

// partial Magnus sum with a certified tail enclosure; the term magnitudes
// decrease geometrically (ratio < 1/2) from index 3 on when x <= 1/2
inline RatInterval magnus_sum_enclosure(const Rat& x, unsigned terms) {
  if (x > Rat(1, 2)) throw std::domain_error("magnus_sum_enclosure: x > 1/2");
  if (terms < 4) terms = 4;
  Rat s = 0;
  for (unsigned k = 0; k < terms; ++k) s += magnus_term(k, x);
  Rat bound = 2 * abs(magnus_term(terms, x));
  return {s - bound, s + bound};
}

}  // namespace detail

inline int magnus_sign(const Rat& x, const Rat& tolerance) {
  for (unsigned terms = 4; terms <= 4096; terms *= 2) {
    RatInterval f = detail::magnus_sum_enclosure(x, terms);
    if (f.width() >= tolerance / 2) continue;  // tail bound not yet < tolerance/4
    if (f.lo > 0) return 1;
    if (f.hi < 0) return -1;
  }
  throw std::logic_error("magnus_sign: undecidable");
}

// unique root in (0,1) of the full Magnus sum, bracketed by bisection with
// certified signs at every probe
inline RatInterval one_ninth_root(const Rat& tolerance) {
  if (!(tolerance > 0)) throw std::domain_error("one_ninth_root: tolerance must be positive");
  Rat lo(1, 16), hi(1, 4);
  if (magnus_sign(lo, tolerance) <= 0 || magnus_sign(hi, tolerance) >= 0)
    throw std::logic_error("one_ninth_root: bracket carries no sign change");
  // overshoot the requested width; the slope near the root is about -10, so
  // this keeps the midpoint residual itself below the tolerance
  while (hi - lo > tolerance / 16) {
    Rat mid = (lo + hi) / 2;
    if (magnus_sign(mid, tolerance) > 0)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

struct ElectricBound {
  Rat x_e;
  Rat scaled;  // the surviving Magnus term at 10^80 protons
  std::string rendering;
};

inline ElectricBound electric_bound() {
  Rat xe(1, 31);
  Rat scaled = magnus_term(7, xe) * Rat(pow10(80));
  return {xe, scaled, sci_string(scaled, 16)};
}

struct ForceRatio {
  RatInterval value;  // 2^129 * 31 * root
  std::string rendering;
};

inline ForceRatio force_ratio() {
  RatInterval root = one_ninth_root(make_rat(Int(1), pow10(15)));
  Rat scale(pow2(129) * 31);
  RatInterval v{root.lo * scale, root.hi * scale};
  return {v, sci_string(v.midpoint(), 6)};
}

// ---- preon charges ----------------------------------------------------

// (c_up, c_down) for preons of order f_{n1} = 2^{n1} - 1
inline std::pair<Rat, Rat> preon_charges(unsigned long n1) {
  if (n1 < 1) throw std::domain_error("preon_charges: order index must be >= 1");
  Int prod = 1, sum = 0;
  for (unsigned long r = 1; r <= n1; ++r) prod *= Int(mersenne(r));
  for (unsigned long s = 0; s < n1; ++s) sum += Int(mersenne(s));
  return {make_rat(Int(n1), prod), make_rat(-sum, prod)};
}

inline bool charge_transform_check(unsigned long n) {
  if (n < 1) throw std::domain_error("charge_transform_check: n must be >= 1");
  auto [cu1, cd1] = preon_charges(n);
  auto [cu2, cd2] = preon_charges(n + 1);
  Rat fn(mersenne(n)), fn1(mersenne(n + 1));
  return cu1 == (fn1 - 1) * cu2 + cd2 && cd1 == (fn + 1) * cd2 + fn * cu2;
}

enum class PreonType { Up, Down };

// one Q-block: preons of order 2f+1 arranged to realize c_type^(f)
struct QSymbol {
  unsigned long order = 1;  // f, a Mersenne number
  PreonType type = PreonType::Up;
  bool anti = false;
  int mult = 1;
};

using QuarkConfig = std::vector<QSymbol>;

namespace detail {

inline unsigned long mersenne_index(unsigned long f) {
  unsigned long n = 0, v = f + 1;
  while (v > 1) {
    if (v % 2 != 0) throw std::invalid_argument("mersenne_index: not a Mersenne number");
    v /= 2;
    ++n;
  }
  if (n == 0) throw std::invalid_argument("mersenne_index: order must be >= 1");
  return n;
}

}  // namespace detail

inline Rat q_symbol_charge(const QSymbol& q) {
  unsigned long n = detail::mersenne_index(q.order);
  auto [cu, cd] = preon_charges(n + 1);
  Rat fn(q.order), fn1(mersenne(n + 1));
  Rat c = q.type == PreonType::Up ? Rat((fn1 - 1) * cu + cd) : Rat((fn + 1) * cd + fn * cu);
  if (q.anti) c = -c;
  return c * q.mult;
}

inline Rat quark_config_charge(const QuarkConfig& cfg) {
  Rat c = 0;
  for (auto& q : cfg) c += q_symbol_charge(q);
  return c;
}

inline const std::map<std::string, QuarkConfig>& quark_configs() {
  static const std::map<std::string, QuarkConfig> table = {
      {"p", {{1, PreonType::Up, false, 1}}},
      {"n", {{1, PreonType::Down, false, 1}}},
      {"u", {{3, PreonType::Up, false, 1}}},
      {"d", {{3, PreonType::Down, false, 1}}},
      {"c",
       {{7, PreonType::Up, false, 1},
        {7, PreonType::Down, true, 1},
        {3, PreonType::Down, true, 1}}},
      {"s",
       {{7, PreonType::Up, false, 1},
        {7, PreonType::Down, true, 1},
        {3, PreonType::Up, true, 1}}},
      {"t",
       {{15, PreonType::Up, true, 1},
        {15, PreonType::Down, false, 1},
        {7, PreonType::Up, true, 2},
        {3, PreonType::Up, false, 1},
        {3, PreonType::Down, true, 1}}},
      {"b",
       {{15, PreonType::Up, true, 1},
        {15, PreonType::Down, false, 1},
        {7, PreonType::Up, true, 1},
        {7, PreonType::Down, true, 1},
        {3, PreonType::Up, true, 1},
        {3, PreonType::Down, true, 1}}},
  };
  return table;
}

inline QuarkConfig conjugate(const QuarkConfig& cfg) {
  QuarkConfig out = cfg;
  for (auto& q : out) q.anti = !q.anti;
  return out;
}

struct PreonCount {
  unsigned long order_index = 1;  // constituents are preons of order f_{order_index}
  PreonType type = PreonType::Up;
  bool anti = false;
  Int count;
};

inline std::vector<PreonCount> expand_to_preons(const QuarkConfig& cfg) {
  std::map<std::tuple<unsigned long, int, bool>, Int> agg;
  for (auto& q : cfg) {
    unsigned long n = detail::mersenne_index(q.order);
    Int up_ct = q.type == PreonType::Up ? Int(mersenne(n + 1)) - 1 : Int(q.order);
    Int dn_ct = q.type == PreonType::Up ? Int(1) : Int(q.order) + 1;
    agg[{n + 1, 0, q.anti}] += up_ct * q.mult;
    agg[{n + 1, 1, q.anti}] += dn_ct * q.mult;
  }
  std::vector<PreonCount> out;
  for (auto& [key, count] : agg)
    out.push_back({std::get<0>(key),
                   std::get<1>(key) == 0 ? PreonType::Up : PreonType::Down,
                   std::get<2>(key), count});
  return out;
}

// ---- kissing table with factorizations and divisor marks --------------

struct Factor {
  long long p = 0;
  int e = 0;
};

struct KissingRow {
  int m = 0;
  long long L = 0;
  std::vector<Factor> factors;
};

inline std::vector<Factor> factorize(long long v) {
  if (v < 1) throw std::domain_error("factorize: value must be positive");
  std::vector<Factor> out;
  for (long long p = 2; p * p <= v; ++p)
    if (v % p == 0) {
      int e = 0;
      while (v % p == 0) {
        v /= p;
        ++e;
      }
      out.push_back({p, e});
    }
  if (v > 1) out.push_back({v, 1});
  return out;
}

inline bool is_prime(long long v) {
  if (v < 2) return false;
  for (long long p = 2; p * p <= v; ++p)
    if (v % p == 0) return false;
  return true;
}

inline std::string factorization_string(const std::vector<Factor>& fs) {
  std::string out;
  for (auto& f : fs) {
    if (!out.empty()) out += "*";
    out += std::to_string(f.p);
    if (f.e > 1) out += "^" + std::to_string(f.e);
  }
  return out;
}

inline const std::vector<KissingRow>& kissing_rows() {
  static const std::vector<KissingRow> rows = [] {
    std::vector<KissingRow> r;
    for (int m = 1; m <= 31; ++m) r.push_back({m, kissing_number(m), factorize(kissing_number(m))});
    return r;
  }();
  return rows;
}

inline std::vector<KissingRow> load_kissing_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open kissing table: " + path);
  std::string line;
  if (!std::getline(in, line) || line != "m,L,factorization")
    throw std::runtime_error("kissing table: bad header");
  std::vector<KissingRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string mf, lf, ff;
    if (!std::getline(ls, mf, ',') || !std::getline(ls, lf, ',') || !std::getline(ls, ff))
      throw std::runtime_error("kissing table: bad row: " + line);
    KissingRow row;
    row.m = std::stoi(mf);
    row.L = std::stoll(lf);
    std::istringstream fs(ff);
    std::string tok;
    long long product = 1;
    while (std::getline(fs, tok, '*')) {
      auto caret = tok.find('^');
      Factor f;
      f.p = std::stoll(tok.substr(0, caret));
      f.e = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
      for (int i = 0; i < f.e; ++i) product *= f.p;
      row.factors.push_back(f);
    }
    if (product != row.L)
      throw std::runtime_error("kissing table: factorization does not reproduce L at m=" + mf);
    if (row.m != static_cast<int>(rows.size()) + 1)
      throw std::runtime_error("kissing table: rows out of order at m=" + mf);
    rows.push_back(std::move(row));
  }
  if (rows.size() != 31) throw std::runtime_error("kissing table: expected 31 rows");
  return rows;
}

// bracketed table marks name the down-type divisor on contributing rows; the
// bare mark sits on the generation's up-type row
struct DivisorMark {
  int m = 0;
  long long divisor = 0;
  bool down = false;
};

inline const std::array<std::vector<DivisorMark>, 3>& generation_marks() {
  static const std::array<std::vector<DivisorMark>, 3> marks = {{
      {{4, 4, true},
       {5, 4, true},
       {6, 4, true},
       {8, 4, true},
       {9, 4, true},
       {10, 4, true},
       {11, 6, false}},
      {{8, 8, true}, {9, 8, true}, {10, 8, true}, {19, 14, false}},
      {{8, 16, true}, {9, 16, true}, {10, 16, true}, {16, 16, true}, {29, 30, false}},
  }};
  return marks;
}

// ---- generation selection ----------------------------------------------

struct UpCandidate {
  int m = 0;
  long long L = 0;
  long long P = 0;  // prime factor beyond the 3D amplitude 13
  int j = 0;        // |P - L_j| = 1
};

inline std::vector<UpCandidate> up_candidates(long long up_divisor) {
  std::vector<UpCandidate> out;
  for (auto& row : kissing_rows()) {
    if (row.L % up_divisor != 0) continue;
    for (auto& f : row.factors) {
      if (f.p <= 13) continue;
      for (int j = 1; j <= 31; ++j)
        if (std::llabs(f.p - kissing_number(j)) == 1) out.push_back({row.m, row.L, f.p, j});
    }
  }
  return out;
}

inline long long generation_up_divisor(int mu) {
  return (1LL << (mu + 2)) - 2;  // f_{n+1} - 1
}

inline long long generation_down_divisor(int mu) {
  return 1LL << (mu + 1);  // f_n + 1
}

// the neighbor index base shared by all three generations; any other offset
// strands at least one generation without an admissible prime
inline int consistent_mu0() {
  static const int value = [] {
    std::array<std::vector<UpCandidate>, 3> cands;
    for (int mu = 1; mu <= 3; ++mu) cands[mu - 1] = up_candidates(generation_up_divisor(mu));
    std::vector<int> ok;
    for (int mu0 = 1; mu0 <= 28; ++mu0) {
      bool all = true;
      for (int mu = 1; mu <= 3; ++mu) {
        bool found = false;
        for (auto& c : cands[mu - 1]) found |= c.j == mu0 + mu;
        all = all && found;
      }
      if (all) ok.push_back(mu0);
    }
    if (ok.size() != 1) throw std::logic_error("generation base index not unique");
    return ok.front();
  }();
  return value;
}

struct GenerationSelection {
  int mu = 0;
  int m_up = 0;
  long long L_up = 0;
  long long P = 0;
  std::vector<long long> L_down;
  double ratio = 0;
};

inline GenerationSelection select_generation(int mu) {
  if (mu < 1 || mu > 3) throw std::invalid_argument("select_generation: mu must be 1..3");
  const int mu0 = consistent_mu0();
  long long up_div = generation_up_divisor(mu), down_div = generation_down_divisor(mu);
  std::vector<UpCandidate> picks;
  for (auto& c : up_candidates(up_div))
    if (c.j == mu0 + mu) picks.push_back(c);
  if (picks.size() != 1) throw std::logic_error("up-type selection not unique");
  GenerationSelection sel;
  sel.mu = mu;
  sel.m_up = picks[0].m;
  sel.L_up = picks[0].L;
  sel.P = picks[0].P;
  long long sum = 0;
  for (auto& mark : generation_marks()[static_cast<std::size_t>(mu - 1)]) {
    auto& row = kissing_rows()[static_cast<std::size_t>(mark.m - 1)];
    if (mark.down) {
      if (mark.divisor != down_div || row.L % down_div != 0)
        throw std::logic_error("down-type mark violates its divisor");
      for (auto& f : row.factors)
        if (f.p >= sel.P) throw std::logic_error("down-type mark carries a large prime");
      sel.L_down.push_back(row.L);
      sum += row.L;
    } else if (mark.m != sel.m_up || mark.divisor != up_div) {
      throw std::logic_error("up-type mark disagrees with the selection");
    }
  }
  sel.ratio = static_cast<double>(sel.L_up) / static_cast<double>(sum);
  return sel;
}

// measured intra-generational mass ratios, carried as data
inline double measured_intragen_ratio(int mu) {
  switch (mu) {
    case 1: return 0.48;
    case 2: return 13.58;
    case 3: return 41.86;
    default: throw std::invalid_argument("measured_intragen_ratio: mu must be 1..3");
  }
}

// ---- family law ---------------------------------------------------------

inline long long nth_prime(int n) {
  if (n < 1) throw std::domain_error("nth_prime: n must be >= 1");
  int count = 0;
  for (long long v = 2;; ++v)
    if (is_prime(v) && ++count == n) return v;
}

inline long long family_kappa(int mu) {
  return 6 * nth_prime(mu) + (mu % 2 ? -1 : 1);
}

struct FamilyRow {
  int mu = 0;
  long long S = 0;  // sum of the Mersenne numbers through index mu0+mu-1
  long long L = 0;  // L_{mu0+mu}
  long long P = 0;  // prime neighbor of L
  long long kappa = 0;
  bool law = false;
  bool neighbor_ambiguous = false;  // both L-1 and L+1 prime
};

inline std::vector<FamilyRow> family_table(int mu_max) {
  if (mu_max < 1 || mu_max > 8) throw std::invalid_argument("family_table: mu_max must be 1..8");
  const int mu0 = consistent_mu0();
  std::vector<FamilyRow> out;
  for (int mu = 1; mu <= mu_max; ++mu) {
    FamilyRow row;
    row.mu = mu;
    int top = mu0 + mu - 1;
    row.S = (2LL << top) - 2 - top;
    row.L = kissing_number(mu0 + mu);
    auto sgn = [](long long v) { return (v > 0) - (v < 0); };
    auto cancels = [&](long long p) { return sgn(p - row.L) - sgn(p - row.S) == 0; };
    bool lo = is_prime(row.L - 1), hi = is_prime(row.L + 1);
    row.neighbor_ambiguous = lo && hi;
    if (lo && hi)
      row.P = cancels(row.L - 1) ? row.L - 1 : row.L + 1;
    else if (lo || hi)
      row.P = lo ? row.L - 1 : row.L + 1;
    else
      throw std::logic_error("family_table: no prime neighbor");
    row.kappa = family_kappa(mu);
    row.law = cancels(row.P) && is_prime(row.kappa);
    out.push_back(row);
  }
  return out;
}

struct FourthGeneration {
  int dimension = 0;  // the kappa(4) slot
  std::vector<long long> required_factors;
};

// reported only: no accepted kissing number exists that deep
inline FourthGeneration fourth_generation_prediction() {
  FourthGeneration out;
  out.dimension = static_cast<int>(family_kappa(4));
  for (auto& f : factorize(generation_up_divisor(4))) out.required_factors.push_back(f.p);
  out.required_factors.push_back(family_table(4).back().P);
  return out;
}

// ---- inter-generational controls ----------------------------------------

struct ControlRow {
  std::string label;
  double measured = 0;  // carried, never recomputed
  long long control = 0;
};

inline long long capped_catalan(unsigned long x) {
  Int c = catalan(x);
  return c > 13 ? static_cast<long long>(c) : 1;
}

inline std::vector<ControlRow> intergen_controls() {
  return {
      {"m_t/m_c", 135.64, capped_catalan(6)},
      {"m_c/m_u", 560.87, 5 * 8 * capped_catalan(4)},
      {"m_b/m_s", 44.0, capped_catalan(5)},
      {"m_s/m_d", 19.79, 5 * 4 * capped_catalan(3)},
  };
}

}  // namespace croton
