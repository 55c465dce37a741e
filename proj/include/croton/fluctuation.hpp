#pragma once

/* Mersenne-fluctuation tracking over denominator grids: leg-equation paths,
 * qphylum assembly, phase lookup, kissing-number scans and the clamp
 * truncation calendar.
 *
 * Left-leg steps obey phi' = 2 phi + delta + eps (delta in {0,1}, eps in
 * {-1,0,1}); right-leg steps obey phi' = floor(phi/2) - delta. A path rises
 * to a single peak and then falls, stays on one alpha parity, and mirrors
 * around the peak within 1. */

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "grid.hpp"
#include "kissing.hpp"

namespace croton {

struct PathNode {
  long n = 0;
  int alpha = 0;
  std::uint64_t phi = 0;
};

struct FluctuationPath {
  std::vector<PathNode> nodes;
  std::size_t peak_index = 0;
  struct Branch {
    long n = 0;
    int chosen_alpha = 0;
    int other_alpha = 0;
  };
  std::vector<Branch> branches;  // continuations that tied on |dalpha|
};

// rising-step classification with minimal |eps|:
// v - 2*phi = 2 -> (1,1), 1 -> (1,0), 0 -> (0,0), -1 -> (0,-1)
struct RiseStep {
  int delta = 0;
  int eps = 0;
};

inline std::optional<RiseStep> classify_rise(std::uint64_t phi, std::uint64_t v) {
  long long d = static_cast<long long>(v) - 2 * static_cast<long long>(phi);
  switch (d) {
    case 2: return RiseStep{1, 1};
    case 1: return RiseStep{1, 0};
    case 0: return RiseStep{0, 0};
    case -1: return RiseStep{0, -1};
    default: return std::nullopt;
  }
}

inline bool legal_fall(std::uint64_t phi, std::uint64_t v) {
  std::uint64_t h = phi / 2;
  return v == h || (h > 0 && v == h - 1);
}

struct PathCheck {
  bool legal = true;
  std::string reason;
};

inline PathCheck check_path(const FluctuationPath& p) {
  if (p.nodes.empty()) return {false, "empty path"};
  if (p.peak_index >= p.nodes.size()) return {false, "peak index out of range"};
  int parity = p.nodes.front().alpha & 1;
  for (auto& node : p.nodes)
    if ((node.alpha & 1) != parity) return {false, "alpha parity broken"};
  for (std::size_t i = 0; i + 1 < p.nodes.size(); ++i) {
    if (p.nodes[i + 1].n != p.nodes[i].n + 1) return {false, "non-adjacent n"};
    bool rising = i + 1 <= p.peak_index;
    if (rising && !classify_rise(p.nodes[i].phi, p.nodes[i + 1].phi))
      return {false, "illegal left-leg step"};
    if (!rising && !legal_fall(p.nodes[i].phi, p.nodes[i + 1].phi))
      return {false, "illegal right-leg step"};
  }
  for (std::size_t r = 1; p.peak_index >= r && p.peak_index + r < p.nodes.size(); ++r) {
    long long a = static_cast<long long>(p.nodes[p.peak_index - r].phi);
    long long b = static_cast<long long>(p.nodes[p.peak_index + r].phi);
    if (std::llabs(a - b) > 1) return {false, "mirror constraint broken"};
  }
  return {true, ""};
}

namespace detail {

struct Candidate {
  int alpha = 0;
  std::uint64_t value = 0;
};

// alpha = 0 holds the integer part of the source value, not a denominator
// term, so it never carries an amplitude
template <typename Pred>
std::vector<Candidate> column_candidates(const DenominatorGrid& g, long n, int parity,
                                         Pred&& admissible) {
  std::vector<Candidate> out;
  if (n < g.n_lo || n > g.n_hi) return out;
  auto& col = g.column(n).reg;
  for (int a = parity == 0 ? 2 : 1; a < static_cast<int>(col.size()); a += 2) {
    std::uint64_t v = col[static_cast<std::size_t>(a)];
    if (v != kSaturated && admissible(v)) out.push_back({a, v});
  }
  return out;
}

// pick by smallest |alpha - ref|, then smaller alpha; record a branch when
// the runner-up ties on |dalpha|
inline std::optional<Candidate> pick(std::vector<Candidate>& cands, int ref_alpha,
                                     long n, std::vector<FluctuationPath::Branch>& branches) {
  if (cands.empty()) return std::nullopt;
  std::sort(cands.begin(), cands.end(), [&](const Candidate& x, const Candidate& y) {
    int dx = std::abs(x.alpha - ref_alpha), dy = std::abs(y.alpha - ref_alpha);
    if (dx != dy) return dx < dy;
    return x.alpha < y.alpha;
  });
  if (cands.size() > 1 &&
      std::abs(cands[0].alpha - ref_alpha) == std::abs(cands[1].alpha - ref_alpha))
    branches.push_back({n, cands[0].alpha, cands[1].alpha});
  return cands[0];
}

}  // namespace detail

/* Greedy bidirectional extension from a seed cell. Rightward the path keeps
 * rising while any left-leg continuation exists, then falls; leftward the
 * left-leg (halving) predecessor is preferred, a doubling predecessor is
 * accepted only while no halving step has been taken (seed on the right
 * leg). */
inline FluctuationPath track_fluctuation(const DenominatorGrid& g, long n, int alpha) {
  auto seed = g.reg_at(n, alpha);
  if (!seed) throw std::invalid_argument("seed cell not present in grid");
  int parity = alpha & 1;

  FluctuationPath path;
  path.nodes.push_back({n, alpha, *seed});

  // rightward
  bool rising = true;
  while (true) {
    const PathNode cur = path.nodes.back();
    std::optional<detail::Candidate> next;
    if (rising) {
      auto cands = detail::column_candidates(
          g, cur.n + 1, parity,
          [&](std::uint64_t v) { return classify_rise(cur.phi, v).has_value(); });
      next = detail::pick(cands, cur.alpha, cur.n + 1, path.branches);
    }
    if (!next) {
      auto cands = detail::column_candidates(
          g, cur.n + 1, parity,
          [&](std::uint64_t v) { return legal_fall(cur.phi, v); });
      next = detail::pick(cands, cur.alpha, cur.n + 1, path.branches);
      if (next) rising = false;
    }
    if (!next) break;
    path.nodes.push_back({cur.n + 1, next->alpha, next->value});
  }

  // leftward
  std::vector<PathNode> left;
  bool doubling_allowed = true;
  {
    PathNode cur = path.nodes.front();
    while (true) {
      std::optional<detail::Candidate> prev;
      auto halve = detail::column_candidates(
          g, cur.n - 1, parity,
          [&](std::uint64_t u) { return classify_rise(u, cur.phi).has_value(); });
      prev = detail::pick(halve, cur.alpha, cur.n - 1, path.branches);
      if (prev) {
        doubling_allowed = false;
      } else if (doubling_allowed) {
        auto dbl = detail::column_candidates(
            g, cur.n - 1, parity,
            [&](std::uint64_t u) { return legal_fall(u, cur.phi); });
        prev = detail::pick(dbl, cur.alpha, cur.n - 1, path.branches);
      }
      if (!prev) break;
      cur = {cur.n - 1, prev->alpha, prev->value};
      left.push_back(cur);
    }
  }
  if (!left.empty()) {
    std::reverse(left.begin(), left.end());
    left.insert(left.end(), path.nodes.begin(), path.nodes.end());
    path.nodes = std::move(left);
  }

  std::size_t peak = 0;
  for (std::size_t i = 1; i < path.nodes.size(); ++i)
    if (path.nodes[i].phi > path.nodes[peak].phi) peak = i;
  path.peak_index = peak;
  return path;
}

/* Qphylum membership: paths are aligned by magnitude level (side of the
 * peak, floor(log2 phi)) rather than by n, since related fluctuations are
 * rooted in different time-like refinements. Two paths are compatible when
 * every shared level carries amplitudes within 1. The members organize into
 * a left-complete binary tree ordered by peak height. */
struct Qphylum {
  std::vector<int> members;  // input indices, ascending peak amplitude
  struct TreeNode {
    int member = -1;
    int left = -1;
    int right = -1;
    bool is_right_child = false;
  };
  std::vector<TreeNode> tree;  // tree[0] is the root (smallest peak)
};

namespace detail {

inline int log2_level(std::uint64_t v) {
  return v == 0 ? -1 : 63 - __builtin_clzll(v);
}

// (side, level) -> first amplitude seen; side L includes the peak
inline std::map<std::pair<int, int>, std::uint64_t> level_keys(const FluctuationPath& p) {
  std::map<std::pair<int, int>, std::uint64_t> keys;
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    int side = i <= p.peak_index ? 0 : 1;
    keys.emplace(std::make_pair(side, log2_level(p.nodes[i].phi)), p.nodes[i].phi);
  }
  return keys;
}

inline bool compatible(const std::map<std::pair<int, int>, std::uint64_t>& a,
                       const std::map<std::pair<int, int>, std::uint64_t>& b) {
  for (auto& [k, va] : a) {
    auto it = b.find(k);
    if (it == b.end()) continue;
    long long d = static_cast<long long>(va) - static_cast<long long>(it->second);
    if (d > 1 || d < -1) return false;
  }
  return true;
}

}  // namespace detail

inline std::vector<Qphylum> assemble_qphyla(const std::vector<FluctuationPath>& paths) {
  int n = static_cast<int>(paths.size());
  std::vector<std::map<std::pair<int, int>, std::uint64_t>> keys;
  keys.reserve(static_cast<std::size_t>(n));
  for (auto& p : paths) keys.push_back(detail::level_keys(p));

  // connected components of the pairwise-compatibility graph
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int ncomp = 0;
  for (int i = 0; i < n; ++i) {
    if (comp[static_cast<std::size_t>(i)] != -1) continue;
    std::vector<int> stack{i};
    comp[static_cast<std::size_t>(i)] = ncomp;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v)
        if (comp[static_cast<std::size_t>(v)] == -1 &&
            detail::compatible(keys[static_cast<std::size_t>(u)],
                               keys[static_cast<std::size_t>(v)])) {
          comp[static_cast<std::size_t>(v)] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }

  std::vector<Qphylum> out(static_cast<std::size_t>(ncomp));
  for (int i = 0; i < n; ++i)
    out[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])].members.push_back(i);

  for (auto& q : out) {
    std::sort(q.members.begin(), q.members.end(), [&](int a, int b) {
      return paths[static_cast<std::size_t>(a)].nodes[paths[static_cast<std::size_t>(a)].peak_index].phi <
             paths[static_cast<std::size_t>(b)].nodes[paths[static_cast<std::size_t>(b)].peak_index].phi;
    });
    // BFS slot fill: a left slot opens both child slots, a right slot only
    // the right one, so the tree stays left-complete
    struct Slot {
      int parent;
      bool right;
    };
    std::vector<Slot> open;
    std::size_t next_slot = 0;
    for (std::size_t i = 0; i < q.members.size(); ++i) {
      Qphylum::TreeNode node;
      node.member = q.members[i];
      int idx = static_cast<int>(q.tree.size());
      if (i == 0) {
        q.tree.push_back(node);
        open.push_back({idx, false});
        open.push_back({idx, true});
        continue;
      }
      Slot s = open[next_slot++];
      node.is_right_child = s.right;
      q.tree.push_back(node);
      auto& parent = q.tree[static_cast<std::size_t>(s.parent)];
      (s.right ? parent.right : parent.left) = idx;
      if (!s.right) open.push_back({idx, false});
      open.push_back({idx, true});
    }
  }
  return out;
}

inline bool is_left_complete(const Qphylum& q) {
  for (auto& node : q.tree)
    if (node.is_right_child && node.left != -1) return false;
  return true;
}

/* Phase lookup: the smallest alpha_psi >= alpha_phi in the alternating
 * column whose digit w matches the amplitude under the parity rule
 * (even alpha needs w == phi+1, odd alpha accepts w in {phi, phi+1});
 * the phase is negative on even alpha, positive on odd. */
struct PhasePick {
  long long psi = 0;
  int alpha_psi = 0;
};

inline std::optional<PhasePick> phase_of(const DenominatorGrid& g, long n, int alpha_phi,
                                         std::uint64_t phi) {
  if (n < g.n_lo || n > g.n_hi) return std::nullopt;
  auto& col = g.column(n).alt;
  for (int a = std::max(alpha_phi, 0); a < static_cast<int>(col.size()); ++a) {
    std::uint64_t w = col[static_cast<std::size_t>(a)];
    bool even = (a & 1) == 0;
    if (even) {
      if (w == phi + 1) return PhasePick{-static_cast<long long>(w), a};
    } else {
      if (w == phi || w == phi + 1) return PhasePick{static_cast<long long>(w), a};
    }
  }
  return std::nullopt;
}

/* A matched cell counts as a peak when no fluctuation step can continue
 * above it: no cell at n+1 within {2v-1..2v+2} and no cell at n-1 within
 * {2v..2v+3} (either would make it an interior left/right-leg node). */
inline bool is_peak_cell(const DenominatorGrid& g, long n, std::uint64_t v) {
  auto column_has = [&](long nn, std::uint64_t lo, std::uint64_t hi) {
    if (nn < g.n_lo || nn > g.n_hi) return false;
    auto& col = g.column(nn).reg;
    for (std::size_t a = 1; a < col.size(); ++a)
      if (col[a] != kSaturated && col[a] >= lo && col[a] <= hi) return true;
    return false;
  };
  std::uint64_t lo1 = 2 * v >= 1 ? 2 * v - 1 : 0;
  if (column_has(n + 1, lo1, 2 * v + 2)) return false;
  if (column_has(n - 1, 2 * v, 2 * v + 3)) return false;
  return true;
}

enum class ScanMode { Match, Pivot };

struct ScanHit {
  long n = 0;
  int alpha = 0;
  std::uint64_t value = 0;
  bool peak = false;
};

struct ResidueReport {
  ScanHit cell;
  std::optional<PhasePick> phase;
  int targets[2] = {0, 0};  // the extra kissing indices the triple sums to
};

struct PivotReport {
  int m = 0;
  long long target = 0;
  std::vector<ScanHit> matches;
  long long peak_incidence = 0;
  std::optional<ScanHit> pivot;
  std::optional<PhasePick> pivot_phase;
  std::vector<ResidueReport> residues;
  std::string classification;  // match | close-pivot | co-occurrent
};

namespace detail {

// nearest miss: strictly closer wins; equidistant keeps the smaller value;
// otherwise the first encountered (ascending n, then alpha) stays
inline void consider_pivot(std::optional<ScanHit>& best, long long target, long n,
                           int alpha, std::uint64_t v) {
  long long d = std::llabs(static_cast<long long>(v) - target);
  if (!best) {
    best = ScanHit{n, alpha, v, false};
    return;
  }
  long long db = std::llabs(static_cast<long long>(best->value) - target);
  if (d < db || (d == db && v < best->value)) best = ScanHit{n, alpha, v, false};
}

}  // namespace detail

/* Residue search around a pivot: cells within two columns of the pivotal n
 * whose amplitudes close the integer identity
 *   phi_P + v1 + v2 = L_m + L_a + L_b
 * and whose phase offsets correlate (the two residues' |alpha_psi -
 * alpha_phi| differ by at most 1). */
inline void co_occurrence_search(const DenominatorGrid& g, PivotReport& rep,
                                 const std::array<long long, 31>& table) {
  if (!rep.pivot) return;
  const ScanHit& p = *rep.pivot;
  long long d = static_cast<long long>(p.value) - rep.target;

  // map of needed residue sums: L_a + L_b - (pivot gap) for target pairs
  std::map<long long, std::pair<int, int>> needs;
  for (int a = 1; a <= 31; ++a)
    for (int b = a; b <= 31; ++b) {
      long long need = table[a - 1] + table[b - 1] - d;
      if (need > 0) needs.emplace(need, std::make_pair(a, b));
    }

  struct Cand {
    ScanHit cell;
    std::vector<PhasePick> phases;
  };
  std::vector<Cand> cands;
  std::uint64_t vmax = static_cast<std::uint64_t>(2 * table[30]);
  for (long nn = p.n - 2; nn <= p.n + 2; ++nn) {
    if (nn < g.n_lo || nn > g.n_hi) continue;
    auto& col = g.column(nn).reg;
    auto& alt = g.column(nn).alt;
    for (int a = 1; a < static_cast<int>(col.size()); ++a) {
      std::uint64_t v = col[static_cast<std::size_t>(a)];
      if (nn == p.n && a == p.alpha) continue;
      if (v == 0 || v == kSaturated || v > vmax) continue;
      Cand c;
      c.cell = {nn, a, v, false};
      // residue phases may sit below alpha_phi (Table 3 prints one), so the
      // whole alternating column is admissible
      for (int ap = 1; ap < static_cast<int>(alt.size()); ++ap) {
        std::uint64_t w = alt[static_cast<std::size_t>(ap)];
        bool even = (ap & 1) == 0;
        if (even ? w == v + 1 : (w == v || w == v + 1))
          c.phases.push_back({even ? -static_cast<long long>(w)
                                   : static_cast<long long>(w),
                              ap});
      }
      if (!c.phases.empty()) cands.push_back(std::move(c));
    }
  }

  // pick the pair with the tightest phase-offset correlation, then the
  // smallest combined offset
  struct Choice {
    ResidueReport r1, r2;
    long long corr = 0;
    long long span = 0;
  };
  std::optional<Choice> best;
  for (std::size_t i = 0; i < cands.size(); ++i)
    for (std::size_t j = i + 1; j < cands.size(); ++j) {
      long long sum = static_cast<long long>(cands[i].cell.value) +
                      static_cast<long long>(cands[j].cell.value);
      auto it = needs.find(sum);
      if (it == needs.end()) continue;
      for (auto& p1 : cands[i].phases)
        for (auto& p2 : cands[j].phases) {
          long long o1 = std::llabs(p1.alpha_psi - cands[i].cell.alpha);
          long long o2 = std::llabs(p2.alpha_psi - cands[j].cell.alpha);
          long long corr = std::llabs(o1 - o2);
          if (corr > 1) continue;
          long long span = o1 + o2;
          if (!best || corr < best->corr || (corr == best->corr && span < best->span)) {
            Choice c;
            c.r1 = {cands[i].cell, p1, {it->second.first, it->second.second}};
            c.r2 = {cands[j].cell, p2, {it->second.first, it->second.second}};
            c.corr = corr;
            c.span = span;
            best = c;
          }
        }
    }
  if (best) {
    rep.residues.push_back(best->r1);
    rep.residues.push_back(best->r2);
    rep.classification = "co-occurrent";
  }
}

inline std::vector<PivotReport> scan_targets(const DenominatorGrid& g,
                                             const std::array<long long, 31>& table,
                                             ScanMode mode, int m_lo = 1, int m_hi = 31,
                                             bool with_residues = false) {
  std::vector<PivotReport> out;
  for (int m = m_lo; m <= m_hi; ++m) {
    PivotReport rep;
    rep.m = m;
    rep.target = table[m - 1];
    for (long n = g.n_lo; n <= g.n_hi; ++n) {
      auto& col = g.column(n).reg;
      for (int a = 1; a < static_cast<int>(col.size()); ++a) {
        std::uint64_t v = col[static_cast<std::size_t>(a)];
        if (v == static_cast<std::uint64_t>(rep.target) ||
            v == static_cast<std::uint64_t>(rep.target) + 1)
          rep.matches.push_back({n, a, v, false});
        if (mode == ScanMode::Pivot && v != 0 && v != kSaturated)
          detail::consider_pivot(rep.pivot, rep.target, n, a, v);
      }
    }
    for (auto& hit : rep.matches) {
      hit.peak = is_peak_cell(g, hit.n, hit.value);
      if (hit.peak) ++rep.peak_incidence;
    }
    if (!rep.matches.empty())
      rep.classification = "match";
    else
      rep.classification = "close-pivot";
    if (mode == ScanMode::Pivot && rep.pivot) {
      rep.pivot_phase = phase_of(g, rep.pivot->n, rep.pivot->alpha, rep.pivot->value);
      if (with_residues) co_occurrence_search(g, rep, table);
    }
    out.push_back(std::move(rep));
  }
  return out;
}

/* Clamp calendar: every change point of the delta_tau sequence truncates the
 * running sequence family and births the next one. */
struct TruncationEvent {
  long n = 0;
  bool truncation = false;  // otherwise a birth
};

inline std::vector<TruncationEvent> truncation_events(long n_lo, long n_hi) {
  std::vector<TruncationEvent> out;
  if (n_lo < 3 || n_hi < n_lo) throw std::domain_error("clamp range needs n >= 3");
  int prev = delta_tau(n_lo);
  for (long n = n_lo + 1; n <= n_hi; ++n) {
    int cur = delta_tau(n);
    if (cur != prev) {
      out.push_back({n, true});
      out.push_back({n, false});
    }
    prev = cur;
  }
  return out;
}

inline std::vector<TruncationEvent> truncation_events(const DenominatorGrid& g) {
  if (g.family != Family::TypeIII)
    throw std::invalid_argument("truncation calendar applies to clamp-scaled grids");
  return truncation_events(g.n_lo, g.n_hi);
}

}  // namespace croton
