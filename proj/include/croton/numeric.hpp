#pragma once

/* Exact integer/rational types and the handful of GMP helpers the rest of
 * the library leans on. Everything here is value-semantic and thread-safe. */

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace croton {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int pow2(unsigned long n) {
  return Int(1) << n;
}

inline Int pow10(unsigned long n) {
  Int r;
  mpz_ui_pow_ui(r.backend().data(), 10, n);
  return r;
}

inline Int ipow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.backend().data(), base.backend().data(), exp);
  return r;
}

// floor/ceil quotients; mpz_int's operator/ truncates toward zero instead
inline Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.backend().data(), a.backend().data(), b.backend().data());
  return q;
}

inline Int cdiv(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.backend().data(), a.backend().data(), b.backend().data());
  return q;
}

inline Int isqrt(const Int& x) {
  Int r;
  mpz_sqrt(r.backend().data(), x.backend().data());
  return r;
}

// floor of the k-th root
inline Int iroot(const Int& x, unsigned long k) {
  Int r;
  mpz_root(r.backend().data(), x.backend().data(), k);
  return r;
}

inline std::size_t bit_length(const Int& x) {
  if (x == 0) return 0;
  return mpz_sizeinbase(x.backend().data(), 2);
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.backend().data(), n);
  return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.backend().data(), n, k);
  return r;
}

inline Int rat_num(const Rat& r) {
  return boost::multiprecision::numerator(r);
}

inline Int rat_den(const Rat& r) {
  return boost::multiprecision::denominator(r);
}

inline Int rat_floor(const Rat& r) {
  return fdiv(rat_num(r), rat_den(r));
}

inline Int rat_ceil(const Rat& r) {
  return cdiv(rat_num(r), rat_den(r));
}

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  return Rat(num) / Rat(den);
}

// decimal exponent e with 10^e <= |r| < 10^(e+1)
inline long dec_exponent(const Rat& r) {
  if (r == 0) throw std::domain_error("dec_exponent: zero");
  Int num = abs(rat_num(r)), den = rat_den(r);
  auto below = [&](long k) {  // |r| < 10^k
    return k >= 0 ? num < den * pow10(static_cast<unsigned long>(k))
                  : num * pow10(static_cast<unsigned long>(-k)) < den;
  };
  long e = static_cast<long>(num.str().size()) - static_cast<long>(den.str().size());
  while (below(e)) --e;
  while (!below(e + 1)) ++e;
  return e;
}

// round-half-up rendering with the requested significant digits, "d.dd...e<exp>"
inline std::string sci_string(const Rat& r, unsigned sig) {
  if (sig == 0) throw std::domain_error("sci_string: zero digits");
  if (r == 0) return "0";
  long e = dec_exponent(r);
  Int num = abs(rat_num(r)), den = rat_den(r);
  long shift = static_cast<long>(sig) - 1 - e;
  if (shift >= 0)
    num *= pow10(static_cast<unsigned long>(shift));
  else
    den *= pow10(static_cast<unsigned long>(-shift));
  Int digits = fdiv(2 * num + den, 2 * den);  // floor(num/den + 1/2)
  if (digits >= pow10(sig)) {
    digits /= 10;
    ++e;
  }
  std::string ds = digits.str();
  std::string out = (r < 0 ? "-" : "");
  out += ds.substr(0, 1);
  if (sig > 1) out += "." + ds.substr(1);
  out += "e" + std::to_string(e);
  return out;
}

}  // namespace croton
