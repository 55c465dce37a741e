#include "catch2/catch_amalgamated.hpp"

#include <random>
#include <sstream>

#include <croton/boundary.hpp>
#include <croton/encodings.hpp>
#include <croton/kissing.hpp>

using namespace croton;

namespace {

CrotonBasis ad_hoc(std::vector<long long> vals) {
  CrotonBasis b;
  b.order_lo = b.order_hi = 0;
  b.values = std::move(vals);
  return b;
}

// lexicographically first vector with the requested dot product, by walking
// the full 3^T odometer; reference for the split-search implementation
std::optional<std::vector<int>> lex_first_brute(const CrotonBasis& b, long long target) {
  int T = b.size();
  std::vector<int> e(static_cast<std::size_t>(T));
  for (std::uint32_t idx = 0; idx < detail::pow3(T); ++idx) {
    detail::lex_vector(idx, T, e.data());
    long long s = 0;
    for (int j = 0; j < T; ++j) s += static_cast<long long>(e[j]) * b.values[j];
    if (s != target) continue;
    if (target == 0) {
      bool all_zero = true;
      for (int c : e) all_zero = all_zero && c == 0;
      if (all_zero) continue;
      for (int c : e) {
        if (c == 0) continue;
        if (c < 0)
          for (int& x : e) x = -x;
        break;
      }
    }
    return e;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("field counts over the published tuples") {
  auto g15 = enumerate_realizable(builtin_basis(15, BasisKind::G));
  auto j15 = enumerate_realizable(builtin_basis(15, BasisKind::J));
  auto g715 = enumerate_realizable(interordinal_basis(7, 15, BasisKind::G));
  auto j715 = enumerate_realizable(interordinal_basis(7, 15, BasisKind::J));

  CHECK(g15.max_value == 190);
  CHECK(g15.realized_count == 170);
  CHECK(j15.max_value == 212);
  CHECK(j15.realized_count == 40);
  CHECK(g715.max_value == 191);
  CHECK(g715.realized_count == 191);
  CHECK(j715.max_value == 216);
  CHECK(j715.realized_count == 202);

  CHECK(g15.zero_reps == 0);
  CHECK(j15.zero_reps == 0);
  CHECK(g715.zero_reps == 1);
  CHECK(j715.zero_reps == 0);
}

TEST_CASE("unrealizable lists") {
  auto g15 = enumerate_realizable(builtin_basis(15, BasisKind::G));
  auto u = unrealizable_list(g15);
  CHECK(u == std::vector<long long>{7, 34, 48, 51, 62, 65, 79, 106, 120, 147, 161,
                                    164, 172, 175, 178, 181, 183, 186, 188, 189});

  auto j715 = enumerate_realizable(interordinal_basis(7, 15, BasisKind::J));
  std::vector<long long> consecutive;
  for (long long v = 68; v <= 81; ++v) consecutive.push_back(v);
  CHECK(unrealizable_list(j715) == consecutive);

  auto g715 = enumerate_realizable(interordinal_basis(7, 15, BasisKind::G));
  CHECK(unrealizable_list(g715).empty());

  auto j15 = enumerate_realizable(builtin_basis(15, BasisKind::J));
  auto uj = unrealizable_list(j15);
  REQUIRE(uj.size() == 172);
  CHECK(uj[0] == 1);
  CHECK(uj[1] == 2);
  CHECK(uj[2] == 3);
  CHECK(uj[3] == 4);
  CHECK(uj[4] == 6);
  CHECK(uj.back() == 211);
}

TEST_CASE("membership semantics") {
  auto g15 = enumerate_realizable(builtin_basis(15, BasisKind::G));
  CHECK_FALSE(g15.is_realizable(0));
  CHECK(g15.is_realizable(190));
  CHECK(g15.is_realizable(-190));
  CHECK_FALSE(g15.is_realizable(7));
  CHECK_FALSE(g15.is_realizable(-7));
  CHECK_FALSE(g15.is_realizable(191));
  for (long long v = 1; v <= g15.max_value; ++v)
    CHECK(g15.is_realizable(v) == g15.is_realizable(-v));
}

TEST_CASE("split construction equals direct enumeration") {
  for (int order : {15}) {
    for (BasisKind k : {BasisKind::G, BasisKind::J}) {
      auto a = enumerate_realizable(builtin_basis(order, k));
      auto b = brute_realizable(builtin_basis(order, k));
      CHECK(a.positives == b.positives);
      CHECK(a.zero_reps == b.zero_reps);
    }
  }

  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> len(1, 10);
  std::uniform_int_distribution<long long> mag(1, 300);
  std::bernoulli_distribution neg(0.5);
  for (int trial = 0; trial < 100; ++trial) {
    int T = len(rng);
    std::vector<long long> vals;
    for (int i = 0; i < T; ++i) vals.push_back(neg(rng) ? -mag(rng) : mag(rng));
    auto basis = ad_hoc(vals);
    auto a = enumerate_realizable(basis);
    auto b = brute_realizable(basis);
    REQUIRE(a.positives == b.positives);
    REQUIRE(a.realized_count == b.realized_count);
    REQUIRE(a.zero_reps == b.zero_reps);
  }

  CHECK_THROWS_AS(brute_realizable(builtin_basis(31, BasisKind::G)), std::domain_error);
}

TEST_CASE("order-31 fields at full scale") {
  auto g31 = enumerate_realizable(builtin_basis(31, BasisKind::G));
  auto j31 = enumerate_realizable(builtin_basis(31, BasisKind::J));
  CHECK(g31.max_value == 3707462);
  CHECK(g31.realized_count == 3703788);
  CHECK(g31.zero_reps == 40);
  CHECK(j31.max_value == 4177840);
  CHECK(j31.realized_count == 3861334);
  CHECK(j31.zero_reps == 32);
  CHECK(g31.is_realizable(g31.max_value));
  CHECK(j31.is_realizable(j31.max_value));
}

TEST_CASE("representations are found lex-first") {
  auto g15 = builtin_basis(15, BasisKind::G);
  auto rep6 = find_representation(g15, 6);
  REQUIRE(rep6.has_value());
  CHECK(rep6->coefficients == std::vector<int>{0, -1, 1, 0, 0, 0});
  CHECK(verify_encoding(g15, rep6->coefficients, 6));
  // the other published variant verifies as well
  CHECK(verify_encoding(g15, std::vector<int>{0, 0, -1, 1, 0, 0}, 6));

  CHECK_FALSE(find_representation(builtin_basis(15, BasisKind::J), 1).has_value());
  CHECK_FALSE(find_representation(g15, 7).has_value());
  CHECK_FALSE(find_representation(g15, -7).has_value());

  // highest label: the signs of the tuple itself
  auto mx = find_representation(builtin_basis(15, BasisKind::J), 212);
  REQUIRE(mx.has_value());
  CHECK(mx->coefficients == std::vector<int>{-1, 1, -1, 1});

  // split search agrees with the full odometer on every reachable target
  for (long long t : {1LL, 6LL, 20LL, 100LL, 163LL, 190LL, -6LL, -100LL}) {
    auto got = find_representation(g15, t);
    auto want = lex_first_brute(g15, t);
    REQUIRE(got.has_value() == want.has_value());
    if (got) CHECK(got->coefficients == *want);
  }
}

TEST_CASE("zero singularities") {
  auto g15 = builtin_basis(15, BasisKind::G);
  auto z15 = zero_representations(g15);
  CHECK(z15.count == 0);
  CHECK(z15.witnesses.empty());
  CHECK_FALSE(find_representation(g15, 0).has_value());

  auto g715 = interordinal_basis(7, 15, BasisKind::G);
  auto z715 = zero_representations(g715);
  CHECK(z715.count == 1);
  REQUIRE(z715.witnesses.size() == 1);
  CHECK(z715.witnesses[0] == std::vector<int>{1, 0, 1, 1, -1, 0, 0});
  auto rep0 = find_representation(g715, 0);
  REQUIRE(rep0.has_value());
  CHECK(rep0->coefficients == std::vector<int>{1, 0, 1, 1, -1, 0, 0});
  CHECK(rep0->coefficients == *lex_first_brute(g715, 0));

  auto g31 = builtin_basis(31, BasisKind::G);
  auto z31 = zero_representations(g31);
  CHECK(z31.count == 40);
  CHECK(z31.witnesses.size() == 8);  // capped
  for (auto& w : z31.witnesses) CHECK(verify_encoding(g31, w, 0));
  std::vector<int> quoted{-1, 0, 1, 0, 1, -1, 0, -1, 1, 0, 0, 0, 1, -1, -1, 1, 0, 0};
  CHECK(verify_encoding(g31, quoted, 0));

  CHECK(zero_representations(builtin_basis(31, BasisKind::J)).count == 32);
}

TEST_CASE("duality controls") {
  auto g15 = enumerate_realizable(builtin_basis(15, BasisKind::G));
  auto j15 = enumerate_realizable(builtin_basis(15, BasisKind::J));
  auto intra = duality_report(g15, j15, DualityCase::Intra);
  CHECK(intra.gamma_realized == 170);
  CHECK(intra.chi_unrealized == 172);
  CHECK(intra.chi_realized == 40);
  CHECK(intra.gamma_unrealized == 20);
  CHECK(intra.controls[0].difference == 2);
  CHECK(intra.controls[0].control == 2);
  CHECK(intra.controls[1].difference == 20);
  CHECK(intra.controls[1].control == 20);
  CHECK(intra.ok());

  auto g715 = enumerate_realizable(interordinal_basis(7, 15, BasisKind::G));
  auto j715 = enumerate_realizable(interordinal_basis(7, 15, BasisKind::J));
  auto inter = duality_report(g715, j715, DualityCase::Inter);
  CHECK(inter.gamma_realized_starred == 192);
  CHECK(inter.chi_realized == 202);
  CHECK(inter.chi_unrealized == 14);
  CHECK(inter.gamma_unrealized == 0);
  CHECK(inter.controls[0].difference == 10);
  CHECK(inter.controls[0].control == 10);
  CHECK(inter.controls[1].difference == 14);
  CHECK(inter.controls[1].control == 14);
  CHECK(inter.ok());

  auto self = duality_report(g15, g15, DualityCase::Intra);
  CHECK(self.d_realized == 0);
  CHECK(self.d_unrealized == 0);

  CHECK_THROWS_AS(duality_report(g15, j715, DualityCase::Intra), std::invalid_argument);
}

TEST_CASE("kissing-number realizability") {
  auto g15 = enumerate_realizable(builtin_basis(15, BasisKind::G));
  auto rows = kissing_realizability(g15, kissing_table(), 2, 2);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].L == 6);
  CHECK(rows[0].l_realizable);
  CHECK_FALSE(rows[0].l1_realizable);

  auto j715 = enumerate_realizable(interordinal_basis(7, 15, BasisKind::J));
  auto r6 = kissing_realizability(j715, kissing_table(), 6, 6);
  CHECK(r6[0].L == 72);
  CHECK_FALSE(r6[0].l_realizable);
  CHECK_FALSE(r6[0].l1_realizable);

  for (BasisKind k : {BasisKind::G, BasisKind::J}) {
    auto f = enumerate_realizable(builtin_basis(31, k));
    for (auto& row : kissing_realizability(f, kissing_table(), 8, 31)) {
      CHECK(row.l_realizable);
      CHECK(row.l1_realizable);
    }
  }
}

TEST_CASE("sub-tuple labels stay realizable in the super-tuple") {
  auto g15 = enumerate_realizable(builtin_basis(15, BasisKind::G));
  auto g715 = enumerate_realizable(interordinal_basis(7, 15, BasisKind::G));
  for (long long v = 1; v <= g15.max_value; ++v)
    if (g15.is_realizable(v)) CHECK(g715.is_realizable(v));

  auto j15 = enumerate_realizable(builtin_basis(15, BasisKind::J));
  auto j715 = enumerate_realizable(interordinal_basis(7, 15, BasisKind::J));
  for (long long v = 1; v <= j15.max_value; ++v)
    if (j15.is_realizable(v)) CHECK(j715.is_realizable(v));
}

TEST_CASE("published encodings all verify") {
  auto g31 = builtin_basis(31, BasisKind::G);
  auto j31 = builtin_basis(31, BasisKind::J);
  auto& rows = label_encodings();
  REQUIRE(rows.size() == 214);
  int zero_rows = 0;
  for (auto& row : rows) {
    const CrotonBasis& b = row.field == BasisKind::G ? g31 : j31;
    CHECK(verify_encoding(b, row.coeffs, row.value));
    CHECK_FALSE(verify_encoding(b, row.coeffs, row.value + 1));
    if (row.nlabels == 0) ++zero_rows;
  }
  CHECK(zero_rows == 2);

  CHECK_THROWS_AS(verify_encoding(g31, std::vector<int>{1, 0, 1}, 0),
                  std::invalid_argument);
}

TEST_CASE("field cache round-trip") {
  auto f = enumerate_realizable(interordinal_basis(7, 15, BasisKind::G));
  std::stringstream ss;
  save_field(f, ss);
  std::stringstream ss2;
  save_field(f, ss2);
  CHECK(ss.str() == ss2.str());

  auto g = load_field(ss);
  CHECK(g.basis.values == f.basis.values);
  CHECK(g.basis.kind == f.basis.kind);
  CHECK(g.max_value == f.max_value);
  CHECK(g.realized_count == f.realized_count);
  CHECK(g.zero_reps == f.zero_reps);
  CHECK(g.positives == f.positives);

  std::string bad = ss2.str();
  bad[0] = 99;
  std::stringstream sb(bad);
  CHECK_THROWS_AS(load_field(sb), std::runtime_error);
}
