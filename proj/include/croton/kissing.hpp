#pragma once

/* Lattice kissing numbers L_m for dimensions m = 1..31, as used for the
 * grid-amplitude matching targets and the quark-generation bounds. */

#include <array>
#include <stdexcept>

namespace croton {

inline const std::array<long long, 31>& kissing_table() {
  static const std::array<long long, 31> t{
      2,      6,      12,     24,     40,     72,     126,    240,
      272,    336,    438,    756,    918,    1422,   2340,   4320,
      5346,   7398,   10668,  17400,  27720,  49896,  93150,  196560,
      197040, 198480, 199912, 204188, 207930, 219008, 230872};
  return t;
}

inline long long kissing_number(int m) {
  if (m < 1 || m > 31) throw std::domain_error("kissing number out of range");
  return kissing_table()[m - 1];
}

}  // namespace croton
