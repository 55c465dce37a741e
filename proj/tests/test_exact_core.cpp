#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "croton/constants.hpp"
#include "croton/contfrac.hpp"

using namespace croton;

namespace {

Rat rat_from_digits(const char* digits) {
  // "3.14159" -> exact rational
  std::string s(digits);
  auto dot = s.find('.');
  std::string intpart = s.substr(0, dot);
  std::string frac = s.substr(dot + 1);
  Int num(intpart + frac);
  return make_rat(num, pow10(frac.size()));
}

// check that the last two convergents of every emitted prefix bracket both
// interval endpoints
bool convergents_bracket(const std::vector<Int>& terms, const RatInterval& x) {
  auto cv = convergents(terms);
  for (std::size_t k = 1; k < cv.size(); ++k) {
    Rat a = make_rat(cv[k - 1].first, cv[k - 1].second);
    Rat b = make_rat(cv[k].first, cv[k].second);
    Rat lo = std::min(a, b), hi = std::max(a, b);
    if (!(lo <= x.lo && x.hi <= hi)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("pi enclosure matches known digits", "[constants]") {
  auto pi5 = pi_interval(5);
  CHECK(pi5.lo >= rat_from_digits("3.14159"));
  CHECK(pi5.hi <= rat_from_digits("3.14160"));

  auto pi1000 = pi_interval(1000);
  CHECK(pi1000.width() <= make_rat(Int(1), pow10(1000)));
}

TEST_CASE("constant enclosures nest when precision doubles", "[constants]") {
  for (unsigned d : {25u, 50u, 100u}) {
    CHECK(pi_interval(d).contains(pi_interval(2 * d)));
    CHECK(sqrt2_interval(d).contains(sqrt2_interval(2 * d)));
    CHECK(kappa_interval(d).contains(kappa_interval(2 * d)));
    for (unsigned s = 2; s <= 9; ++s)
      CHECK(log2_catalan_interval(s, d).contains(log2_catalan_interval(s, 2 * d)));
  }
}

TEST_CASE("sqrt2 enclosure", "[constants]") {
  auto r = sqrt2_interval(5);
  CHECK(r.lo <= rat_from_digits("1.41421"));
  CHECK(r.hi >= rat_from_digits("1.41421"));
  CHECK(r.lo * r.lo <= 2);
  CHECK(r.hi * r.hi >= 2);
}

TEST_CASE("catalan numbers", "[constants]") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(6) == 132);
  CHECK(catalan(7) == 429);
}

TEST_CASE("catalan tie closed form", "[constants]") {
  CHECK(catalan_tie(1) == 2);
  CHECK(catalan_tie(6) == 42);
  CHECK(catalan_tie(11) == 132);
  for (unsigned long q = 1; q <= 64; ++q)
    CHECK(catalan_tie(q) == Int(q) * (q + 1));
}

TEST_CASE("log2 of Catalan numbers", "[constants]") {
  CHECK(log2_catalan_floor(2) == 2);  // C_3 = 5
  CHECK(log2_catalan_floor(5) == static_cast<long>(bit_length(catalan(31))) - 1);

  // log2(5) = 2.32192809488736234787... ; enclosure at 30 digits must agree
  auto iv = log2_catalan_interval(2, 30);
  CHECK(iv.lo >= rat_from_digits("2.3219280948873623"));
  CHECK(iv.hi <= rat_from_digits("2.3219280948873624"));
  CHECK(rat_floor(iv.lo) == 2);
  CHECK(rat_floor(iv.hi) == 2);

  // floor from the interval agrees with the bit-length shortcut
  for (unsigned s = 2; s <= 9; ++s) {
    auto v = log2_catalan_interval(s, 50);
    CHECK(rat_floor(v.lo) == log2_catalan_floor(s));
    CHECK(rat_floor(v.hi) == log2_catalan_floor(s));
  }
}

TEST_CASE("kappa enclosure", "[constants]") {
  auto k = kappa_interval(40);
  CHECK(k.lo >= rat_from_digits("3.49224185659958437392377299278"));
  CHECK(k.hi <= rat_from_digits("3.49224185659958437392377299279"));
}

TEST_CASE("regular expansion of exact rationals", "[contfrac]") {
  auto e = cf_regular(RatInterval::exact(Rat(43, 30)), 50);
  CHECK_FALSE(e.exhausted);
  CHECK(e.terms == std::vector<Int>{1, 2, 3, 4});

  auto whole = cf_regular(RatInterval::exact(Rat(7)), 50);
  CHECK_FALSE(whole.exhausted);
  CHECK(whole.terms == std::vector<Int>{7});
}

TEST_CASE("regular expansion matches Euclid on random rationals", "[contfrac][property]") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<long> dist(1, 1000000);
  for (int i = 0; i < 10000; ++i) {
    Rat x(dist(rng), dist(rng));
    auto e = cf_regular(RatInterval::exact(x), 200);
    CHECK_FALSE(e.exhausted);
    CHECK(e.terms == euclid_cf(x));
    if (e.terms.size() > 1) CHECK(e.terms.back() >= 2);
  }
}

TEST_CASE("convergents of certified prefixes bracket the interval", "[contfrac][property]") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> dist(1, 1000000);
  for (int i = 0; i < 200; ++i) {
    Rat mid(dist(rng), dist(rng));
    Rat eps(1, pow10(12));
    RatInterval x(mid - eps, mid + eps);
    auto e = cf_regular(x, 100);
    CHECK(e.exhausted);  // a genuine interval cannot resolve forever
    CHECK(convergents_bracket(e.terms, x));
  }
}

TEST_CASE("sqrt2 expansion is [1; 2, 2, 2, ...]", "[contfrac]") {
  auto e = cf_regular(sqrt2_interval(50), 45);
  REQUIRE(e.terms.size() >= 40);
  CHECK(e.terms[0] == 1);
  for (std::size_t i = 1; i < e.terms.size(); ++i) CHECK(e.terms[i] == 2);
}

TEST_CASE("alternating expansion of exact rationals round-trips", "[contfrac]") {
  auto e = cf_alternating(RatInterval::exact(Rat(3, 8)), 50);
  CHECK_FALSE(e.exhausted);
  CHECK(eval_alternating(e.terms) == Rat(3, 8));

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(1, 100000);
  for (int i = 0; i < 500; ++i) {
    Rat x(dist(rng), dist(rng));
    auto a = cf_alternating(RatInterval::exact(x), 400);
    REQUIRE_FALSE(a.exhausted);
    CHECK(eval_alternating(a.terms) == x);
    for (std::size_t j = 1; j < a.terms.size(); ++j) CHECK(a.terms[j] >= 1);
  }
}

TEST_CASE("alternating prefix evaluations re-enclose the source", "[contfrac]") {
  // replace the final term by the two endpoints of its legal tail range
  // (floor step: [b, b+1]; ceil step: [b-1, b]) and evaluate both; the
  // resulting values must bracket the source interval
  auto eval_with_tail = [](const std::vector<Int>& terms, const Rat& tail) {
    Rat v = tail;
    for (std::size_t j = terms.size() - 1; j-- > 0;) {
      int sign = ((j + 1) % 2 == 1) ? 1 : -1;
      v = Rat(terms[j]) + Rat(sign) / v;
    }
    return v;
  };
  auto src = div_pow2(sqrt2_interval(60), 1);  // sqrt(2)/2
  auto e = cf_alternating(src, 40);
  REQUIRE(e.terms.size() >= 10);
  for (std::size_t k = 3; k <= e.terms.size(); ++k) {
    std::vector<Int> pre(e.terms.begin(), e.terms.begin() + k);
    std::size_t last = k - 1;
    Rat t1(pre.back());
    Rat t2 = (last % 2 == 0) ? Rat(t1 + 1) : Rat(t1 - 1);
    if (t2 == 0) continue;
    Rat a = eval_with_tail(pre, t1), b = eval_with_tail(pre, t2);
    Rat lo = std::min(a, b), hi = std::max(a, b);
    CHECK(lo <= src.lo);
    CHECK(src.hi <= hi);
  }
}

TEST_CASE("tau values and recurrence", "[tau]") {
  CHECK(tau1(4) == 5);
  CHECK(tau1(5) == 10);
  CHECK(tau1(7) == 40);
  CHECK(tau1(8) == 81);
  CHECK(tau1(8) == 2 * tau1(7) + 1);

  RatInterval pi = pi_interval(200);
  for (long n = 3; n <= 64; ++n) {
    int d = delta_tau(n, &pi);  // asserts the recurrence internally
    CHECK(tau1(n + 1, &pi) == 2 * tau1(n, &pi) + d);
    Int t2 = tau2(n, &pi);
    if (t2 >= 2) CHECK(d == 0);
    if (t2 == 1) CHECK(d == 1);
  }
}

TEST_CASE("Catalan bit-length identity", "[constants]") {
  for (unsigned long n = 4; n <= 12; ++n) CHECK(identity_eq25(n));
}

TEST_CASE("grid column pin: third source family of the smallest order", "[contfrac]") {
  // 2*pi/2^206 carries denominator 13 at position 336
  RatInterval x = div_pow2(pi_interval(1100) * Rat(2), 206);
  auto e = cf_regular(x, 500);
  REQUIRE(e.terms.size() > 336);
  CHECK(e.terms[336] == 13);

  auto a = cf_alternating(div_pow2(pi_interval(1100) * Rat(2), 212), 500);
  REQUIRE(a.terms.size() > 371);
  CHECK(a.terms[371] == 918);
}
