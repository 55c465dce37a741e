#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <set>

#include "croton/fluctuation.hpp"

using namespace croton;

namespace {

struct NodePin {
  long n;
  int alpha;
  std::uint64_t phi;
};

void require_nodes(const FluctuationPath& p, const std::vector<NodePin>& pins) {
  REQUIRE(p.nodes.size() == pins.size());
  for (std::size_t i = 0; i < pins.size(); ++i) {
    CAPTURE(i, pins[i].n);
    CHECK(p.nodes[i].n == pins[i].n);
    CHECK(p.nodes[i].alpha == pins[i].alpha);
    CHECK(p.nodes[i].phi == pins[i].phi);
  }
}

}  // namespace

TEST_CASE("rise classification covers the legal differences only") {
  auto step = [](std::uint64_t phi, std::uint64_t v) { return classify_rise(phi, v); };
  REQUIRE(step(5, 12).has_value());
  CHECK(step(5, 12)->delta == 1);
  CHECK(step(5, 12)->eps == 1);
  CHECK(step(5, 11)->delta == 1);
  CHECK(step(5, 11)->eps == 0);
  CHECK(step(5, 10)->delta == 0);
  CHECK(step(5, 10)->eps == 0);
  CHECK(step(5, 9)->delta == 0);
  CHECK(step(5, 9)->eps == -1);
  CHECK_FALSE(step(5, 13).has_value());
  CHECK_FALSE(step(5, 8).has_value());
  // the rare inverted-eps doubling
  REQUIRE(step(4676, 9351).has_value());
  CHECK(step(4676, 9351)->delta == 0);
  CHECK(step(4676, 9351)->eps == -1);
  CHECK(2 * 4676 - 1 == 9351);

  CHECK(legal_fall(918, 459));
  CHECK(legal_fall(918, 458));
  CHECK_FALSE(legal_fall(918, 457));
  CHECK_FALSE(legal_fall(918, 460));
  CHECK(legal_fall(1, 0));
}

TEST_CASE("prototype fluctuation tracked from its peak seed") {
  DenominatorGrid g = build_grid(Family::TypeI, 2, 200, 224);
  FluctuationPath p = track_fluctuation(g, 212, 352);

  const std::vector<NodePin> pins = {
      {200, 340, 1},   {201, 342, 1},   {202, 342, 1},  {203, 346, 1},  {204, 342, 2},
      {205, 342, 6},   {206, 336, 13},  {207, 326, 27}, {208, 338, 56}, {209, 344, 114},
      {210, 338, 228}, {211, 366, 458}, {212, 352, 918}, {213, 362, 459}, {214, 350, 229},
      {215, 328, 114}, {216, 336, 56},  {217, 328, 28}, {218, 324, 14}, {219, 322, 6},
      {220, 322, 2},   {221, 322, 1}};
  require_nodes(p, pins);
  CHECK(p.peak_index == 12);
  CHECK(p.nodes[p.peak_index].phi == 918);
  CHECK(check_path(p).legal);
  for (auto& node : p.nodes) CHECK(node.alpha % 2 == 0);

  // ties on |dalpha| among unit amplitudes are reported, not hidden
  REQUIRE(p.branches.size() == 2);
  CHECK(p.branches[0].n == 202);
  CHECK(p.branches[0].chosen_alpha == 342);
  CHECK(p.branches[0].other_alpha == 350);
  CHECK(p.branches[1].n == 200);
  CHECK(p.branches[1].chosen_alpha == 340);
  CHECK(p.branches[1].other_alpha == 344);

  CHECK_THROWS_AS(track_fluctuation(g, 212, 5000), std::invalid_argument);
}

TEST_CASE("path checker rejects broken paths") {
  DenominatorGrid g = build_grid(Family::TypeI, 2, 210, 216);
  FluctuationPath p = track_fluctuation(g, 212, 352);
  REQUIRE(check_path(p).legal);

  FluctuationPath bad = p;
  bad.nodes[1].phi += 3;
  CHECK_FALSE(check_path(bad).legal);

  bad = p;
  bad.nodes[2].alpha += 1;
  CHECK(check_path(bad).reason == "alpha parity broken");

  bad = p;
  bad.nodes[1].n += 1;
  CHECK(check_path(bad).reason == "non-adjacent n");

  bad = p;
  bad.peak_index = bad.nodes.size();
  CHECK_FALSE(check_path(bad).legal);

  CHECK_FALSE(check_path(FluctuationPath{}).legal);

  // mirror violation: legs legal but asymmetric by 2
  FluctuationPath mirror;
  mirror.nodes = {{1, 1, 4}, {2, 1, 9}, {3, 1, 4}};
  mirror.peak_index = 1;
  CHECK(check_path(mirror).legal);
  mirror.nodes[2].phi = 2;  // 9 -> 2 is not a legal fall either way
  CHECK_FALSE(check_path(mirror).legal);
  mirror.nodes = {{1, 1, 6}, {2, 1, 13}, {3, 1, 4}};
  mirror.peak_index = 1;
  CHECK(check_path(mirror).reason == "illegal right-leg step");
  mirror.nodes = {{1, 1, 7}, {2, 1, 13}, {3, 1, 5}};
  mirror.peak_index = 1;
  CHECK(check_path(mirror).reason == "mirror constraint broken");
}

TEST_CASE("phase lookup follows the parity rule") {
  DenominatorGrid g = build_grid(Family::TypeI, 2, 200, 224);

  auto peak = phase_of(g, 212, 352, 918);
  REQUIRE(peak.has_value());
  CHECK(peak->psi == 918);
  CHECK(peak->alpha_psi == 371);

  auto feed = phase_of(g, 207, 336, 13);
  REQUIRE(feed.has_value());
  CHECK(feed->psi == -14);
  CHECK(feed->alpha_psi == 346);

  FluctuationPath p = track_fluctuation(g, 212, 352);
  for (auto& node : p.nodes) {
    auto ph = phase_of(g, node.n, node.alpha, node.phi);
    if (!ph) continue;
    long long mag = ph->psi < 0 ? -ph->psi : ph->psi;
    long long d = mag - static_cast<long long>(node.phi);
    CHECK((d == 0 || d == 1));
    if (ph->psi < 0) {
      CHECK(ph->alpha_psi % 2 == 0);
      CHECK(d == 1);
    } else {
      CHECK(ph->alpha_psi % 2 == 1);
    }
    CHECK(ph->alpha_psi >= node.alpha);
  }

  CHECK_FALSE(phase_of(g, 212, 499, 123456).has_value());
  CHECK_FALSE(phase_of(g, 199, 10, 5).has_value());
}

TEST_CASE("footnote qphylum: three kin fluctuations and one outsider") {
  DenominatorGrid g1 = build_grid(Family::TypeI, 5, 1488, 1500);
  DenominatorGrid g2 = build_grid(Family::TypeII, 5, 1068, 1082);
  DenominatorGrid g3 = build_grid(Family::TypeII, 5, 2012, 2028);
  DenominatorGrid g4 = build_grid(Family::TypeI, 5, 1951, 1959);

  FluctuationPath s1 = track_fluctuation(g1, 1494, 334);
  FluctuationPath s2 = track_fluctuation(g2, 1075, 383);
  FluctuationPath s3 = track_fluctuation(g3, 2020, 380);
  FluctuationPath s4 = track_fluctuation(g4, 1955, 255);

  require_nodes(s1, {{1488, 302, 17},
                     {1489, 322, 35},
                     {1490, 308, 72},
                     {1491, 296, 145},
                     {1492, 292, 291},
                     {1493, 320, 584},
                     {1494, 334, 1170},
                     {1495, 318, 585},
                     {1496, 312, 292},
                     {1497, 308, 145},
                     {1498, 298, 72},
                     {1499, 294, 36},
                     {1500, 314, 17}});
  CHECK(s1.peak_index == 6);

  require_nodes(s2, {{1068, 405, 18},
                     {1069, 399, 36},
                     {1070, 407, 72},
                     {1071, 401, 145},
                     {1072, 383, 291},
                     {1073, 401, 584},
                     {1074, 381, 1169},
                     {1075, 383, 2340},
                     {1076, 371, 1170},
                     {1077, 391, 585},
                     {1078, 411, 292},
                     {1079, 399, 145},
                     {1080, 385, 72},
                     {1081, 381, 36},
                     {1082, 399, 17}});
  CHECK(s2.peak_index == 7);

  require_nodes(s3, {{2012, 358, 17},
                     {2013, 372, 35},
                     {2014, 388, 72},
                     {2015, 388, 146},
                     {2016, 398, 292},
                     {2017, 378, 584},
                     {2018, 342, 1169},
                     {2019, 366, 2340},
                     {2020, 380, 4681},
                     {2021, 378, 2340},
                     {2022, 372, 1169},
                     {2023, 382, 584},
                     {2024, 376, 292},
                     {2025, 368, 145},
                     {2026, 366, 72},
                     {2027, 348, 36},
                     {2028, 392, 17}});
  CHECK(s3.peak_index == 8);

  require_nodes(s4, {{1951, 297, 584},
                     {1952, 273, 1168},
                     {1953, 285, 2337},
                     {1954, 263, 4675},
                     {1955, 255, 9350},
                     {1956, 257, 4674},
                     {1957, 257, 2336},
                     {1958, 265, 1168},
                     {1959, 281, 583}});
  CHECK(s4.peak_index == 4);

  for (auto* p : {&s1, &s2, &s3, &s4}) CHECK(check_path(*p).legal);

  // the published right-leg variants (other delta at the last fall) are
  // grid-realizable too, on the same alpha parity
  CHECK(g1.reg_at(1499, 444) == 35);
  CHECK(g2.reg_at(1082, 15) == 18);

  // the alternating grid carries the inverted-eps doubling verbatim
  CHECK(g4.alt_at(1954, 277) == 4676);
  CHECK(g4.alt_at(1955, 281) == 9351);
  CHECK(g4.alt_at(1956, 278) == 4675);

  std::vector<FluctuationPath> paths{s1, s2, s3, s4};
  auto phyla = assemble_qphyla(paths);
  REQUIRE(phyla.size() == 2);

  auto peak_of = [&](int idx) {
    return paths[static_cast<std::size_t>(idx)]
        .nodes[paths[static_cast<std::size_t>(idx)].peak_index]
        .phi;
  };
  const Qphylum* kin = phyla[0].members.size() == 3 ? &phyla[0] : &phyla[1];
  const Qphylum* lone = phyla[0].members.size() == 3 ? &phyla[1] : &phyla[0];
  REQUIRE(kin->members.size() == 3);
  CHECK(peak_of(kin->members[0]) == 1170);
  CHECK(peak_of(kin->members[1]) == 2340);
  CHECK(peak_of(kin->members[2]) == 4681);
  REQUIRE(kin->tree.size() == 3);
  CHECK(kin->tree[0].left == 1);
  CHECK(kin->tree[0].right == 2);
  CHECK_FALSE(kin->tree[1].is_right_child);
  CHECK(kin->tree[2].is_right_child);
  CHECK(is_left_complete(*kin));

  REQUIRE(lone->members.size() == 1);
  CHECK(peak_of(lone->members[0]) == 9350);
  CHECK(is_left_complete(*lone));

  // single path in, singleton tree out
  auto solo = assemble_qphyla({s1});
  REQUIRE(solo.size() == 1);
  CHECK(solo[0].tree.size() == 1);
}

TEST_CASE("left-completeness check catches malformed trees") {
  Qphylum q;
  q.members = {0, 1, 2};
  q.tree.resize(3);
  q.tree[0] = {0, 1, 2, false};
  q.tree[1] = {1, -1, -1, false};
  q.tree[2] = {2, -1, -1, true};
  CHECK(is_left_complete(q));
  q.tree[2].left = 1;  // a right child with a left child
  CHECK_FALSE(is_left_complete(q));
}

TEST_CASE("kissing matches and nearest misses at desk scale") {
  DenominatorGrid g = build_grid(Family::Sqrt2, 0, 1, 2048);
  auto reps = scan_targets(g, kissing_table(), ScanMode::Pivot, 13, 14);
  REQUIRE(reps.size() == 2);

  auto& m13 = reps[0];
  CHECK(m13.target == 918);
  CHECK(m13.classification == "match");
  REQUIRE(m13.matches.size() == 2);
  CHECK(m13.matches[0].n == 1658);
  CHECK(m13.matches[0].alpha == 188);
  CHECK(m13.matches[0].value == 918);
  CHECK(m13.matches[0].peak);
  CHECK(m13.matches[1].n == 1847);
  CHECK(m13.matches[1].alpha == 176);
  CHECK(m13.matches[1].value == 919);
  CHECK_FALSE(m13.matches[1].peak);
  CHECK(m13.peak_incidence == 1);

  auto& m14 = reps[1];
  CHECK(m14.target == 1422);
  CHECK(m14.classification == "close-pivot");
  CHECK(m14.matches.empty());
  REQUIRE(m14.pivot.has_value());
  CHECK(m14.pivot->n == 1916);
  CHECK(m14.pivot->alpha == 398);
  CHECK(m14.pivot->value == 1421);

  DenominatorGrid g2 = build_grid(Family::TypeII, 5, 3, 2048);
  auto reps2 = scan_targets(g2, kissing_table(), ScanMode::Match, 15, 15);
  auto& m15 = reps2[0];
  REQUIRE(m15.matches.size() == 3);
  CHECK(m15.peak_incidence == 1);
  CHECK(m15.matches[0].n == 1075);
  CHECK(m15.matches[0].alpha == 383);
  CHECK(m15.matches[0].peak);
  CHECK(m15.matches[1].n == 2019);
  CHECK_FALSE(m15.matches[1].peak);
  CHECK(m15.matches[2].n == 2021);
  CHECK_FALSE(m15.matches[2].peak);
}

TEST_CASE("co-occurrent pivots close the target sum with correlated phases") {
  auto table = kissing_table();

  SECTION("clamp grid s=9 around n=609") {
    DenominatorGrid g = build_grid(Family::TypeIII, 9, 607, 611);
    auto reps = scan_targets(g, table, ScanMode::Pivot, 29, 29, true);
    auto& r = reps[0];
    REQUIRE(r.pivot.has_value());
    CHECK(r.pivot->n == 609);
    CHECK(r.pivot->alpha == 72);
    CHECK(r.pivot->value == 208430);
    REQUIRE(r.pivot_phase.has_value());
    CHECK(r.pivot_phase->psi == -208431);
    CHECK(r.pivot_phase->alpha_psi == 72);
    CHECK(r.classification == "co-occurrent");
    REQUIRE(r.residues.size() == 2);
    long long sum = static_cast<long long>(r.pivot->value) +
                    static_cast<long long>(r.residues[0].cell.value) +
                    static_cast<long long>(r.residues[1].cell.value);
    CHECK(sum == r.target + table[r.residues[0].targets[0] - 1] +
                     table[r.residues[0].targets[1] - 1]);
    long long o1 = std::llabs(r.residues[0].phase->alpha_psi - r.residues[0].cell.alpha);
    long long o2 = std::llabs(r.residues[1].phase->alpha_psi - r.residues[1].cell.alpha);
    CHECK(std::llabs(o1 - o2) <= 1);

    // the published triple obeys the same identity and correlation
    CHECK(208430 + 10 + 66 == table[28] + table[9] + table[7]);
    CHECK(std::llabs(std::llabs(52 - 58) - std::llabs(83 - 78)) == 1);
  }

  SECTION("clamp grid s=5 around n=1000") {
    DenominatorGrid g = build_grid(Family::TypeIII, 5, 998, 1002);
    auto reps = scan_targets(g, table, ScanMode::Pivot, 12, 12, true);
    auto& r = reps[0];
    REQUIRE(r.pivot.has_value());
    CHECK(r.pivot->n == 1000);
    CHECK(r.pivot->alpha == 239);
    CHECK(r.pivot->value == 758);
    REQUIRE(r.pivot_phase.has_value());
    CHECK(r.pivot_phase->psi == 758);
    CHECK(r.pivot_phase->alpha_psi == 269);
    CHECK(r.classification == "co-occurrent");
    REQUIRE(r.residues.size() == 2);
    long long sum = static_cast<long long>(r.pivot->value) +
                    static_cast<long long>(r.residues[0].cell.value) +
                    static_cast<long long>(r.residues[1].cell.value);
    CHECK(sum == r.target + table[r.residues[0].targets[0] - 1] +
                     table[r.residues[0].targets[1] - 1]);

    CHECK(758 + 335 + 5 == table[11] + table[9] + table[1]);
    CHECK(std::llabs(std::llabs(388 - 356) - std::llabs(168 - 135)) == 1);
  }
}

TEST_CASE("clamp truncation calendar") {
  for (long n = 3; n <= 64; ++n) {
    CAPTURE(n);
    CHECK(Int(delta_tau(n)) == tau1(n + 1) - 2 * tau1(n));
  }

  auto events = truncation_events(4, 64);
  REQUIRE(!events.empty());
  REQUIRE(events.size() % 2 == 0);
  for (std::size_t i = 0; i < events.size(); i += 2) {
    CHECK(events[i].n == events[i + 1].n);
    CHECK(events[i].truncation);
    CHECK_FALSE(events[i + 1].truncation);
    CHECK(delta_tau(events[i].n) != delta_tau(events[i].n - 1));
  }
  // no event inside constant runs
  std::set<long> event_ns;
  for (auto& e : events) event_ns.insert(e.n);
  for (long n = 5; n <= 64; ++n)
    if (delta_tau(n) == delta_tau(n - 1)) CHECK_FALSE(event_ns.count(n));

  DenominatorGrid g3 = build_grid(Family::TypeIII, 9, 607, 611);
  auto from_grid = truncation_events(g3);
  auto direct = truncation_events(607, 611);
  REQUIRE(from_grid.size() == direct.size());
  for (std::size_t i = 0; i < direct.size(); ++i) {
    CHECK(from_grid[i].n == direct[i].n);
    CHECK(from_grid[i].truncation == direct[i].truncation);
  }
  DenominatorGrid gs = build_grid(Family::Sqrt2, 0, 10, 12);
  CHECK_THROWS_AS(truncation_events(gs), std::invalid_argument);
  CHECK_THROWS_AS(truncation_events(1, 5), std::domain_error);
}

TEST_CASE("very high incidence classes at desk scale") {
  auto table = kissing_table();
  auto class_counts = [&](const DenominatorGrid& g, long long counts[7]) {
    for (long n = g.n_lo; n <= g.n_hi; ++n) {
      auto& col = g.column(n).reg;
      for (std::size_t a = 1; a < col.size(); ++a)
        for (int m = 1; m <= 7; ++m)
          if (col[a] == static_cast<std::uint64_t>(table[m - 1]) ||
              col[a] == static_cast<std::uint64_t>(table[m - 1]) + 1)
            ++counts[m - 1];
    }
  };

  long long sqrt2c[7] = {0}, kappac[7] = {0}, t1c[7] = {0}, t2c[7] = {0}, t3c[7] = {0};
  class_counts(build_grid(Family::Sqrt2, 0, 1, 1024), sqrt2c);
  class_counts(build_grid(Family::Kappa, 0, 1, 1024), kappac);
  for (int s = 2; s <= 9; ++s) {
    class_counts(build_grid(Family::TypeI, s, 1, 1024), t1c);
    class_counts(build_grid(Family::TypeII, s, 1, 1024), t2c);
    class_counts(build_grid(Family::TypeIII, s, 3, 1024), t3c);
  }
  for (int m = 0; m < 7; ++m) {
    CAPTURE(m);
    CHECK(sqrt2c[m] > 50);
    CHECK(kappac[m] > 50);
    CHECK(t1c[m] > 50);
    CHECK(t2c[m] > 50);
    CHECK(t3c[m] > 50);
  }
  CHECK(sqrt2c[6] == 82);
  CHECK(kappac[6] == 86);
  CHECK(t1c[6] == 715);
  CHECK(t2c[6] == 790);
  CHECK(t3c[6] == 737);
}

TEST_CASE("single-cell seeds and degenerate grids") {
  DenominatorGrid g = build_grid(Family::Sqrt2, 0, 10, 10);
  FluctuationPath p = track_fluctuation(g, 10, 1);
  CHECK(p.nodes.size() == 1);
  CHECK(p.peak_index == 0);
  CHECK(check_path(p).legal);
}
