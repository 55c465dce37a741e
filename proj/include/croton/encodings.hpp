#pragma once

/* Published coefficient encodings of croton amplitudes and phases over the
 * order-31 tuples, shipped as checked-in data. Each row records which grid
 * cells (amplitude phi_alpha^(n) or phase psi_alpha^(n)) carry the value and
 * the ternary coefficient vector that realizes it; rows with no cell are the
 * singularity assignments. */

#include <array>
#include <cstdint>
#include <vector>

#include "basis.hpp"

namespace croton {

enum class LabelRole { Amplitude, Phase };

struct GridLabelRef {
  LabelRole role;
  int alpha;
  int n;
};

struct LabelEncoding {
  BasisKind field;
  long long value;
  int nlabels;
  std::array<GridLabelRef, 2> labels;
  std::array<std::int8_t, 18> coeffs;
};

inline const std::vector<LabelEncoding>& label_encodings() {
  static const std::vector<LabelEncoding> rows{
      {BasisKind::G, 13, 1,
       {{{LabelRole::Amplitude, 336, 206}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 0, -1, 1, -1, -1, -1, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, -14, 1,
       {{{LabelRole::Phase, 384, 207}, {LabelRole::Amplitude, 0, 0}}},
       {{0, -1, 1, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 27, 2,
       {{{LabelRole::Amplitude, 326, 207}, {LabelRole::Phase, 363, 207}}},
       {{-1, 0, -1, 0, 1, 0, 1, -1, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 56, 1,
       {{{LabelRole::Amplitude, 338, 208}, {LabelRole::Amplitude, 0, 0}}},
       {{1, 1, -1, 0, 1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, -57, 1,
       {{{LabelRole::Phase, 372, 208}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 1, -1, 0, -1, -1, 0, 1, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 114, 2,
       {{{LabelRole::Amplitude, 344, 209}, {LabelRole::Phase, 359, 209}}},
       {{0, 1, 0, 0, 1, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 228, 1,
       {{{LabelRole::Amplitude, 338, 210}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 0, -1, 0, 1, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, -229, 1,
       {{{LabelRole::Phase, 380, 210}, {LabelRole::Amplitude, 0, 0}}},
       {{0, -1, -1, 0, -1, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 458, 1,
       {{{LabelRole::Amplitude, 366, 211}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 0, 1, 0, 1, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, -459, 1,
       {{{LabelRole::Phase, 356, 211}, {LabelRole::Amplitude, 0, 0}}},
       {{1, 0, -1, 1, 1, 0, 0, 0, 1, 0, 0, 1, 0, -1, -1, 1, 0, 0}}},
      {BasisKind::G, 918, 2,
       {{{LabelRole::Amplitude, 352, 212}, {LabelRole::Phase, 371, 212}}},
       {{0, 1, 1, 0, -1, 1, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 459, 2,
       {{{LabelRole::Amplitude, 362, 213}, {LabelRole::Phase, 375, 213}}},
       {{-1, 0, 1, -1, -1, 0, 0, 0, -1, 0, 0, -1, 0, 1, 1, -1, 0, 0}}},
      {BasisKind::G, 229, 2,
       {{{LabelRole::Amplitude, 350, 214}, {LabelRole::Phase, 363, 214}}},
       {{0, 1, 1, 0, 1, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 114, 2,
       {{{LabelRole::Amplitude, 328, 215}, {LabelRole::Phase, 371, 215}}},
       {{0, 1, 0, 0, 1, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 56, 1,
       {{{LabelRole::Amplitude, 336, 216}, {LabelRole::Amplitude, 0, 0}}},
       {{1, 1, -1, 0, 1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 57, 1,
       {{{LabelRole::Phase, 351, 216}, {LabelRole::Amplitude, 0, 0}}},
       {{0, -1, 1, 0, 1, 1, 0, -1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 28, 2,
       {{{LabelRole::Amplitude, 328, 217}, {LabelRole::Phase, 343, 217}}},
       {{0, -1, 0, 0, 1, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 14, 1,
       {{{LabelRole::Amplitude, 324, 218}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 1, -1, 0, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 15, 1,
       {{{LabelRole::Phase, 391, 218}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, -1, 1, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 13, 1,
       {{{LabelRole::Amplitude, 336, 206}, {LabelRole::Amplitude, 0, 0}}},
       {{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, -14, 1,
       {{{LabelRole::Phase, 384, 207}, {LabelRole::Amplitude, 0, 0}}},
       {{1, 0, 1, 0, 0, -1, 0, -1, 0, 0, -1, 0, 1, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 27, 2,
       {{{LabelRole::Amplitude, 326, 207}, {LabelRole::Amplitude, 363, 207}}},
       {{0, 0, -1, 0, 0, 1, 0, 1, 0, 0, 1, 0, -1, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 56, 1,
       {{{LabelRole::Amplitude, 338, 208}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 0, 1, 1, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, -57, 1,
       {{{LabelRole::Phase, 372, 208}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, 1, 0, -1, 0, -1, -1, 0, 1, -1, -1, 0, 1, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 114, 2,
       {{{LabelRole::Amplitude, 344, 209}, {LabelRole::Amplitude, 359, 209}}},
       {{1, 1, 1, -1, 0, 0, 1, 1, 0, 0, 1, 0, -1, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 228, 1,
       {{{LabelRole::Amplitude, 338, 210}, {LabelRole::Amplitude, 0, 0}}},
       {{1, 0, 1, 1, 0, 0, -1, 0, 0, -1, -1, 0, -1, -1, 1, -1, 0, 0}}},
      {BasisKind::J, -229, 1,
       {{{LabelRole::Phase, 380, 210}, {LabelRole::Amplitude, 0, 0}}},
       {{1, 1, 0, 0, 1, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 458, 1,
       {{{LabelRole::Amplitude, 366, 211}, {LabelRole::Amplitude, 0, 0}}},
       {{1, 0, 1, 1, 1, -1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, -459, 1,
       {{{LabelRole::Phase, 356, 211}, {LabelRole::Amplitude, 0, 0}}},
       {{1, 1, 1, -1, 1, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 918, 2,
       {{{LabelRole::Amplitude, 352, 212}, {LabelRole::Phase, 371, 212}}},
       {{0, 1, 0, 0, 0, 1, 0, 0, -1, 1, 0, 1, -1, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 459, 2,
       {{{LabelRole::Amplitude, 362, 213}, {LabelRole::Phase, 375, 213}}},
       {{-1, -1, -1, 1, -1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 229, 2,
       {{{LabelRole::Amplitude, 350, 214}, {LabelRole::Phase, 363, 214}}},
       {{-1, -1, 0, 0, -1, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 114, 2,
       {{{LabelRole::Amplitude, 328, 215}, {LabelRole::Phase, 371, 215}}},
       {{1, 1, 1, -1, 0, 0, 1, 1, 0, 0, 1, 0, -1, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 56, 1,
       {{{LabelRole::Amplitude, 336, 216}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 0, 1, 1, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 57, 1,
       {{{LabelRole::Phase, 351, 216}, {LabelRole::Amplitude, 0, 0}}},
       {{1, -1, 0, 1, 0, 1, 1, 0, -1, 1, 1, 0, -1, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 28, 2,
       {{{LabelRole::Amplitude, 328, 217}, {LabelRole::Phase, 343, 217}}},
       {{-1, 1, 0, -1, -1, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 14, 1,
       {{{LabelRole::Amplitude, 324, 218}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, 0, -1, 0, 0, 1, 0, 1, 0, 0, 1, 0, -1, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 15, 1,
       {{{LabelRole::Phase, 391, 218}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 1, 1, 1, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 1304, 2,
       {{{LabelRole::Amplitude, 448, 1556}, {LabelRole::Phase, 441, 1556}}},
       {{0, 0, -1, 0, 0, 1, 0, 1, -1, 0, 0, -1, 1, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 2609, 1,
       {{{LabelRole::Amplitude, 442, 1557}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, -1, 0, 0, -1, 1, 1, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 2610, 1,
       {{{LabelRole::Phase, 413, 1557}, {LabelRole::Amplitude, 0, 0}}},
       {{0, -1, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, -1, -1, 1, 0, 0}}},
      {BasisKind::G, 5219, 1,
       {{{LabelRole::Amplitude, 401, 1558}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 0, 1, 0, 1, 0, 0, 0, 0, 1, 1, -1, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, -5220, 1,
       {{{LabelRole::Phase, 430, 1558}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, 0, 0, 0, 0, 1, 1, 1, -1, 1, 1, 1, 1, -1, 0, 0, 0, 0}}},
      {BasisKind::G, 2609, 1,
       {{{LabelRole::Amplitude, 407, 1559}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, -1, 0, 0, -1, 1, 1, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, -2610, 1,
       {{{LabelRole::Phase, 430, 1559}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 1, -1, -1, 0, 0, 0, 0, -1, 0, 0, 0, -1, 1, 1, -1, 0, 0}}},
      {BasisKind::J, 1304, 2,
       {{{LabelRole::Amplitude, 448, 1556}, {LabelRole::Phase, 441, 1556}}},
       {{0, -1, 0, 0, 0, 0, 1, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 2609, 1,
       {{{LabelRole::Amplitude, 442, 1557}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, 0, 1, 1, -1, 0, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 2610, 1,
       {{{LabelRole::Phase, 413, 1557}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 5219, 1,
       {{{LabelRole::Amplitude, 401, 1558}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, 0, 0, 0, 1, 0, -1, 0, -1, -1, 1, 0, -1, 0, 0, 0, 0, 0}}},
      {BasisKind::J, -5220, 1,
       {{{LabelRole::Phase, 430, 1558}, {LabelRole::Amplitude, 0, 0}}},
       {{1, 0, -1, -1, 0, 0, -1, -1, 0, -1, 1, 1, 1, 1, 0, 0, 0, 0}}},
      {BasisKind::J, 2609, 1,
       {{{LabelRole::Amplitude, 407, 1559}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, 0, 1, 1, -1, 0, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, -2610, 1,
       {{{LabelRole::Phase, 430, 1559}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 0, 0, 0, 0, 0, -1, -1, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 102, 1,
       {{{LabelRole::Amplitude, 404, 1556}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, 0, -1, -1, 1, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 103, 1,
       {{{LabelRole::Phase, 427, 1556}, {LabelRole::Amplitude, 0, 0}}},
       {{0, -1, 1, 1, 0, 0, 1, -1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 205, 2,
       {{{LabelRole::Amplitude, 380, 1557}, {LabelRole::Phase, 403, 1557}}},
       {{1, 0, 1, 0, 1, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 411, 2,
       {{{LabelRole::Amplitude, 390, 1558}, {LabelRole::Phase, 423, 1558}}},
       {{-1, -1, 1, 0, 0, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 205, 2,
       {{{LabelRole::Amplitude, 398, 1559}, {LabelRole::Phase, 419, 1559}}},
       {{1, 0, 1, 0, 1, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 102, 1,
       {{{LabelRole::Amplitude, 404, 1556}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 103, 1,
       {{{LabelRole::Phase, 427, 1556}, {LabelRole::Amplitude, 0, 0}}},
       {{1, 1, 0, -1, 1, 1, 0, 1, -1, 0, 1, 1, 1, 1, 0, 0, 0, 0}}},
      {BasisKind::J, 205, 2,
       {{{LabelRole::Amplitude, 380, 1557}, {LabelRole::Phase, 403, 1557}}},
       {{0, 0, 0, 0, 1, 0, 0, -1, 0, -1, 1, 0, -1, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 411, 2,
       {{{LabelRole::Amplitude, 390, 1558}, {LabelRole::Phase, 423, 1558}}},
       {{0, 0, 0, -1, 0, 0, 0, -1, -1, 0, 1, 0, -1, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 205, 2,
       {{{LabelRole::Amplitude, 398, 1559}, {LabelRole::Phase, 419, 1559}}},
       {{0, 0, 0, 0, 1, 0, 0, -1, 0, -1, 1, 0, -1, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 100, 1,
       {{{LabelRole::Amplitude, 406, 1556}, {LabelRole::Amplitude, 0, 0}}},
       {{1, 1, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, -101, 1,
       {{{LabelRole::Phase, 428, 1556}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 1, 0, 0, 0, 0, 0, -1, 1, 0, 0, 1, -1, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 49, 1,
       {{{LabelRole::Amplitude, 382, 1557}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 1, 1, 0, -1, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, -50, 1,
       {{{LabelRole::Phase, 404, 1557}, {LabelRole::Amplitude, 0, 0}}},
       {{1, 0, 0, -1, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 24, 1,
       {{{LabelRole::Amplitude, 392, 1558}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, -25, 1,
       {{{LabelRole::Phase, 424, 1558}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, 0, 0, 1, -1, 0, -1, 1, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 12, 2,
       {{{LabelRole::Amplitude, 400, 1559}, {LabelRole::Phase, 423, 1559}}},
       {{0, 1, 0, 0, 1, 1, 1, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 100, 1,
       {{{LabelRole::Amplitude, 406, 1556}, {LabelRole::Amplitude, 0, 0}}},
       {{1, 0, -1, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, -101, 1,
       {{{LabelRole::Phase, 428, 1556}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 0, 0, 0, 0, -1, 0, 0, -1, 0, -1, 0, -1, -1, 1, -1, 0, 0}}},
      {BasisKind::J, 49, 1,
       {{{LabelRole::Amplitude, 382, 1557}, {LabelRole::Amplitude, 0, 0}}},
       {{1, -1, 0, 1, 0, 1, 0, -1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, -50, 1,
       {{{LabelRole::Phase, 404, 1557}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 0, 1, -1, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 24, 1,
       {{{LabelRole::Amplitude, 392, 1558}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, 0, 1, 0, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, -25, 1,
       {{{LabelRole::Phase, 424, 1558}, {LabelRole::Amplitude, 0, 0}}},
       {{1, 0, -1, 0, 1, -1, 0, 1, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 12, 2,
       {{{LabelRole::Amplitude, 400, 1559}, {LabelRole::Phase, 423, 1559}}},
       {{-1, -1, 0, 1, -1, 1, 0, -1, -1, 1, 0, 1, -1, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 51919, 1,
       {{{LabelRole::Amplitude, 448, 1003}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, 0, 0, 0, -1, 0, -1, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0}}},
      {BasisKind::G, -51920, 1,
       {{{LabelRole::Phase, 468, 1003}, {LabelRole::Amplitude, 0, 0}}},
       {{1, -1, 0, 1, 0, 0, 1, 0, 0, 1, -1, 1, 0, -1, 0, 0, 0, 0}}},
      {BasisKind::G, 103839, 2,
       {{{LabelRole::Amplitude, 442, 1004}, {LabelRole::Phase, 464, 1004}}},
       {{1, 1, -1, 1, -1, 0, 0, -1, -1, -1, -1, 0, 0, -1, 1, 0, 0, 0}}},
      {BasisKind::G, 207679, 2,
       {{{LabelRole::Amplitude, 438, 1005}, {LabelRole::Phase, 443, 1005}}},
       {{1, 0, -1, 0, 1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0}}},
      {BasisKind::G, 103839, 2,
       {{{LabelRole::Amplitude, 449, 1006}, {LabelRole::Phase, 447, 1006}}},
       {{1, 1, -1, 1, -1, 0, 0, -1, -1, -1, -1, 0, 0, -1, 1, 0, 0, 0}}},
      {BasisKind::J, 51919, 1,
       {{{LabelRole::Amplitude, 448, 1003}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, 1, 0, -1, 1, 0, -1, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 0}}},
      {BasisKind::J, -51920, 1,
       {{{LabelRole::Phase, 468, 1003}, {LabelRole::Amplitude, 0, 0}}},
       {{1, 1, -1, -1, -1, 0, 0, 1, 0, -1, 0, -1, 1, 1, 0, 0, 0, 0}}},
      {BasisKind::J, 103839, 2,
       {{{LabelRole::Amplitude, 442, 1004}, {LabelRole::Phase, 464, 1004}}},
       {{0, 0, -1, 1, 0, 0, 0, -1, 0, 0, 0, 1, 0, -1, -1, 1, 0, 0}}},
      {BasisKind::J, 207679, 2,
       {{{LabelRole::Amplitude, 438, 1005}, {LabelRole::Phase, 443, 1005}}},
       {{1, 0, 0, 0, -1, 0, -1, -1, -1, 0, 0, 0, -1, 0, 0, 1, 0, 0}}},
      {BasisKind::J, 103839, 2,
       {{{LabelRole::Amplitude, 449, 1006}, {LabelRole::Phase, 447, 1006}}},
       {{0, 0, -1, 1, 0, 0, 0, -1, 0, 0, 0, 1, 0, -1, -1, 1, 0, 0}}},
      {BasisKind::G, 193, 1,
       {{{LabelRole::Amplitude, 448, 1003}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 0, 0, 1, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 194, 1,
       {{{LabelRole::Phase, 469, 1003}, {LabelRole::Amplitude, 0, 0}}},
       {{1, 0, 0, 0, 1, 1, -1, 0, -1, -1, -1, -1, -1, 1, 0, 0, 0, 0}}},
      {BasisKind::G, 96, 2,
       {{{LabelRole::Amplitude, 443, 1004}, {LabelRole::Phase, 465, 1004}}},
       {{-1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 48, 2,
       {{{LabelRole::Amplitude, 443, 1005}, {LabelRole::Phase, 465, 1005}}},
       {{0, 0, 0, 0, 0, 0, 1, -1, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 23, 1,
       {{{LabelRole::Amplitude, 427, 1006}, {LabelRole::Amplitude, 0, 0}}},
       {{0, -1, 0, 0, 0, 0, 0, 0, -1, -1, -1, -1, -1, 1, 0, 0, 0, 0}}},
      {BasisKind::G, 24, 1,
       {{{LabelRole::Phase, 449, 1006}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 193, 1,
       {{{LabelRole::Amplitude, 448, 1003}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, -1, 0, -1, 0, -1, 0, 1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 194, 1,
       {{{LabelRole::Phase, 469, 1003}, {LabelRole::Amplitude, 0, 0}}},
       {{1, 0, 1, 1, -1, 1, 0, -1, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 96, 2,
       {{{LabelRole::Amplitude, 443, 1004}, {LabelRole::Phase, 465, 1004}}},
       {{-1, -1, -1, 0, 1, -1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 48, 2,
       {{{LabelRole::Amplitude, 443, 1005}, {LabelRole::Phase, 465, 1005}}},
       {{0, 1, -1, -1, -1, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 23, 1,
       {{{LabelRole::Amplitude, 427, 1006}, {LabelRole::Amplitude, 0, 0}}},
       {{1, 1, -1, -1, 1, 0, -1, 0, 0, 1, -1, -1, -1, -1, 0, 0, 0, 0}}},
      {BasisKind::J, 24, 1,
       {{{LabelRole::Phase, 449, 1006}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 58, 1,
       {{{LabelRole::Amplitude, 479, 1003}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, 0, 1, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 117, 1,
       {{{LabelRole::Amplitude, 477, 1004}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 0, 0, 1, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 58, 2,
       {{{LabelRole::Amplitude, 465, 1005}, {LabelRole::Phase, 477, 1005}}},
       {{-1, 0, 1, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 29, 1,
       {{{LabelRole::Amplitude, 449, 1006}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 0, 1, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 30, 1,
       {{{LabelRole::Phase, 473, 1006}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 1, -1, 0, 0, 0, -1, -1, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 58, 1,
       {{{LabelRole::Amplitude, 479, 1003}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, -1, 1, -1, 0, 1, -1, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 117, 1,
       {{{LabelRole::Amplitude, 477, 1004}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 58, 2,
       {{{LabelRole::Amplitude, 465, 1005}, {LabelRole::Phase, 477, 1005}}},
       {{-1, -1, 1, -1, 0, 1, -1, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 29, 1,
       {{{LabelRole::Amplitude, 449, 1006}, {LabelRole::Amplitude, 0, 0}}},
       {{1, -1, 1, 1, 1, 1, 0, 1, 0, 0, 1, 0, -1, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 30, 1,
       {{{LabelRole::Phase, 473, 1006}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 0, 1, -1, 0, 1, -1, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 12977, 2,
       {{{LabelRole::Amplitude, 407, 987}, {LabelRole::Phase, 437, 987}}},
       {{0, 0, -1, 0, 0, 0, -1, 1, 1, 1, 0, -1, 1, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 25955, 1,
       {{{LabelRole::Amplitude, 411, 988}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 0, -1, -1, -1, 0, 0, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 25956, 1,
       {{{LabelRole::Amplitude, 418, 988}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 0, 0, -1, 0, -1, 0, -1, 0, -1, 0, 1, 1, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 51911, 2,
       {{{LabelRole::Amplitude, 397, 989}, {LabelRole::Phase, 449, 989}}},
       {{-1, -1, -1, -1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1, 0, 0, 0, 0}}},
      {BasisKind::G, 103823, 1,
       {{{LabelRole::Amplitude, 433, 990}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, -1, -1, 1, -1, 1, 1, 0, 0, 1, 0, 0, 0, 1, -1, 1, 0, 0}}},
      {BasisKind::G, 103824, 1,
       {{{LabelRole::Phase, 441, 990}, {LabelRole::Amplitude, 0, 0}}},
       {{0, -1, -1, 1, -1, -1, 1, -1, -1, -1, 0, -1, 0, -1, 1, 0, 0, 0}}},
      {BasisKind::G, 207646, 1,
       {{{LabelRole::Amplitude, 417, 991}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, 1, 0, 1, -1, 0, 1, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0}}},
      {BasisKind::G, 207647, 1,
       {{{LabelRole::Phase, 457, 991}, {LabelRole::Amplitude, 0, 0}}},
       {{1, 0, 0, -1, -1, -1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0}}},
      {BasisKind::G, 415294, 2,
       {{{LabelRole::Amplitude, 421, 992}, {LabelRole::Phase, 469, 992}}},
       {{0, 0, 0, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0}}},
      {BasisKind::G, 207647, 2,
       {{{LabelRole::Phase, 423, 993}, {LabelRole::Phase, 473, 993}}},
       {{1, 0, 0, -1, -1, -1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0}}},
      {BasisKind::G, 103823, 2,
       {{{LabelRole::Amplitude, 443, 994}, {LabelRole::Phase, 475, 994}}},
       {{-1, -1, -1, 1, -1, 1, 1, 0, 0, 1, 0, 0, 0, 1, -1, 1, 0, 0}}},
      {BasisKind::G, 51911, 1,
       {{{LabelRole::Amplitude, 425, 995}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, -1, -1, -1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1, 0, 0, 0, 0}}},
      {BasisKind::G, 51912, 1,
       {{{LabelRole::Phase, 453, 995}, {LabelRole::Amplitude, 0, 0}}},
       {{1, -1, -1, 0, 0, 0, -1, 0, 0, -1, 1, -1, 0, 1, 0, 0, 0, 0}}},
      {BasisKind::G, 25955, 2,
       {{{LabelRole::Amplitude, 431, 996}, {LabelRole::Phase, 477, 996}}},
       {{0, 0, -1, -1, -1, 0, 0, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 12977, 1,
       {{{LabelRole::Amplitude, 439, 997}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 0, -1, 0, 0, 0, -1, 1, 1, 1, 0, -1, 1, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 12978, 1,
       {{{LabelRole::Phase, 469, 997}, {LabelRole::Amplitude, 0, 0}}},
       {{1, -1, -1, 1, 1, -1, 0, 0, -1, 0, 0, 0, 1, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 12977, 2,
       {{{LabelRole::Amplitude, 407, 987}, {LabelRole::Phase, 437, 987}}},
       {{1, 0, -1, 0, -1, 0, -1, 1, -1, -1, -1, 0, 1, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 25955, 1,
       {{{LabelRole::Amplitude, 411, 988}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, -1, -1, -1, 1, 0, 1, 0, -1, -1, 1, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 25956, 1,
       {{{LabelRole::Amplitude, 418, 988}, {LabelRole::Amplitude, 0, 0}}},
       {{1, 1, 0, -1, 0, -1, 0, -1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 51911, 2,
       {{{LabelRole::Amplitude, 397, 989}, {LabelRole::Phase, 449, 989}}},
       {{0, -1, 0, 1, 0, 1, 1, 0, 1, 1, 0, 0, 0, -1, 0, 0, 0, 0}}},
      {BasisKind::J, 103823, 1,
       {{{LabelRole::Amplitude, 433, 990}, {LabelRole::Amplitude, 0, 0}}},
       {{1, -1, 1, 0, 0, 1, 0, 0, -1, -1, 1, 0, 1, -1, 0, 0, 0, 0}}},
      {BasisKind::J, 103824, 1,
       {{{LabelRole::Phase, 441, 990}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, 0, 0, 0, 0, -1, 1, -1, 0, 0, 0, 1, 0, -1, -1, 1, 0, 0}}},
      {BasisKind::J, 207646, 1,
       {{{LabelRole::Amplitude, 417, 991}, {LabelRole::Amplitude, 0, 0}}},
       {{1, -1, 1, 1, -1, 1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 1, 0, 0}}},
      {BasisKind::J, 207647, 1,
       {{{LabelRole::Phase, 457, 991}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 0, -1, 1, 0, -1, 0, -1, 0, -1, 0, -1, 0, 0, 0, 1, 0, 0}}},
      {BasisKind::J, 415294, 2,
       {{{LabelRole::Amplitude, 421, 992}, {LabelRole::Phase, 469, 992}}},
       {{-1, -1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0}}},
      {BasisKind::J, 207647, 2,
       {{{LabelRole::Phase, 423, 993}, {LabelRole::Phase, 473, 993}}},
       {{0, 0, -1, 1, 0, -1, 0, -1, 0, -1, 0, -1, 0, 0, 0, 1, 0, 0}}},
      {BasisKind::J, 103823, 2,
       {{{LabelRole::Amplitude, 443, 994}, {LabelRole::Phase, 475, 994}}},
       {{1, -1, 1, 0, 0, 1, 0, 0, -1, -1, 1, 0, 1, -1, 0, 0, 0, 0}}},
      {BasisKind::J, 51911, 1,
       {{{LabelRole::Amplitude, 425, 995}, {LabelRole::Amplitude, 0, 0}}},
       {{0, -1, 0, 1, 0, 1, 1, 0, 1, 1, 0, 0, 0, -1, 0, 0, 0, 0}}},
      {BasisKind::J, 51912, 1,
       {{{LabelRole::Phase, 453, 995}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 0, 0, 0, 1, 0, 0, -1, 0, 1, 0, 0, 0, -1, 0, 0, 0, 0}}},
      {BasisKind::J, 25955, 2,
       {{{LabelRole::Amplitude, 431, 996}, {LabelRole::Phase, 477, 996}}},
       {{-1, -1, -1, -1, 1, 0, 1, 0, -1, -1, 1, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 12977, 1,
       {{{LabelRole::Amplitude, 439, 997}, {LabelRole::Amplitude, 0, 0}}},
       {{1, 0, -1, 0, -1, 0, -1, 1, -1, -1, -1, 0, 1, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 12978, 1,
       {{{LabelRole::Phase, 469, 997}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, 0, 1, -1, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 9434, 1,
       {{{LabelRole::Amplitude, 397, 987}, {LabelRole::Amplitude, 0, 0}}},
       {{0, -1, 1, 0, 1, -1, 1, 0, 1, 0, 0, -1, -1, 0, -1, 1, 0, 0}}},
      {BasisKind::G, -9435, 1,
       {{{LabelRole::Phase, 426, 987}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, 1, 0, 0, 1, -1, 0, 0, -1, 0, 0, 1, 1, 0, 1, -1, 0, 0}}},
      {BasisKind::G, 4716, 1,
       {{{LabelRole::Amplitude, 399, 988}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 0, 1, 1, 0, -1, 0, -1, 0, 0, -1, -1, 0, 0, -1, 1, 0, 0}}},
      {BasisKind::G, -4717, 1,
       {{{LabelRole::Phase, 410, 988}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 1, 1, 0, -1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, -1, 0, 0}}},
      {BasisKind::G, 2357, 1,
       {{{LabelRole::Amplitude, 385, 989}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 1, 0, -1, 0, 0, 0, 0, 0, 1, 0, 0, 1, -1, -1, 1, 0, 0}}},
      {BasisKind::G, -2358, 1,
       {{{LabelRole::Phase, 438, 989}, {LabelRole::Amplitude, 0, 0}}},
       {{1, 1, 1, 0, 0, 0, 0, 0, 1, 0, 1, 1, 0, 0, 1, -1, 0, 0}}},
      {BasisKind::G, 1178, 1,
       {{{LabelRole::Amplitude, 421, 990}, {LabelRole::Amplitude, 0, 0}}},
       {{0, -1, 0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 1, -1, -1, 1, 0, 0}}},
      {BasisKind::G, -1179, 1,
       {{{LabelRole::Phase, 430, 990}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 0, 0, 0, -1, 0, 0, 1, -1, 0, 0, 0, -1, 1, 1, -1, 0, 0}}},
      {BasisKind::G, 589, 2,
       {{{LabelRole::Amplitude, 409, 991}, {LabelRole::Phase, 449, 991}}},
       {{0, 1, 0, 0, 0, -1, -1, 0, -1, 1, 0, -1, 1, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 294, 2,
       {{{LabelRole::Amplitude, 413, 992}, {LabelRole::Phase, 461, 992}}},
       {{-1, 1, -1, 1, 0, 0, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 147, 2,
       {{{LabelRole::Amplitude, 405, 993}, {LabelRole::Phase, 461, 993}}},
       {{0, -1, 1, -1, 0, 0, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 73, 1,
       {{{LabelRole::Amplitude, 435, 994}, {LabelRole::Amplitude, 0, 0}}},
       {{1, -1, 0, 0, 1, 0, 1, 1, 0, 0, 1, 0, -1, 0, 0, 0, 0, 0}}},
      {BasisKind::G, -74, 1,
       {{{LabelRole::Phase, 446, 994}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 1, 0, -1, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 36, 2,
       {{{LabelRole::Amplitude, 413, 995}, {LabelRole::Phase, 445, 995}}},
       {{-1, -1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, -1, -1, 1, 0, 0}}},
      {BasisKind::G, 17, 2,
       {{{LabelRole::Amplitude, 417, 996}, {LabelRole::Phase, 461, 996}}},
       {{1, 0, 1, -1, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 8, 2,
       {{{LabelRole::Amplitude, 427, 997}, {LabelRole::Phase, 457, 997}}},
       {{0, 1, 1, 1, -1, 0, -1, 1, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 9434, 1,
       {{{LabelRole::Amplitude, 397, 987}, {LabelRole::Amplitude, 0, 0}}},
       {{1, 0, 0, 0, -1, -1, 0, 0, 0, 0, 0, 0, -1, 0, -1, 1, 0, 0}}},
      {BasisKind::J, -9435, 1,
       {{{LabelRole::Phase, 426, 987}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, 0, 0, 0, -1, 0, -1, 0, 0, 1, -1, 0, -1, -1, 1, -1, 0, 0}}},
      {BasisKind::J, 4716, 1,
       {{{LabelRole::Amplitude, 399, 988}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, -1, -1, -1, 0, 0, 1, 0, 0, 0, 1, 0, 1, 1, -1, 1, 0, 0}}},
      {BasisKind::J, -4717, 1,
       {{{LabelRole::Phase, 410, 988}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 0, 0, -1, 0, 0, 0, -1, -1, -1, 1, -1, 1, 0, 1, -1, 0, 0}}},
      {BasisKind::J, 2357, 1,
       {{{LabelRole::Amplitude, 385, 989}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 0, 0, 0, -1, 0, 1, 0, 1, 1, 0, 0, -1, 0, -1, 1, 0, 0}}},
      {BasisKind::J, -2358, 1,
       {{{LabelRole::Phase, 438, 989}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, 0, 0, -1, 1, 0, 0, -1, 1, 1, 1, -1, -1, -1, 1, -1, 0, 0}}},
      {BasisKind::J, 1178, 1,
       {{{LabelRole::Amplitude, 421, 990}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 0, -1, -1, 0, -1, 1, 1, -1, 0, -1, -1, 0, 0, -1, 1, 0, 0}}},
      {BasisKind::J, -1179, 1,
       {{{LabelRole::Phase, 430, 990}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, 1, -1, -1, 0, 0, 0, 0, -1, -1, 0, 1, 0, 0, 1, -1, 0, 0}}},
      {BasisKind::J, 589, 2,
       {{{LabelRole::Amplitude, 409, 991}, {LabelRole::Phase, 449, 991}}},
       {{0, 0, 1, 1, 0, 0, 0, 1, 1, 0, 1, 0, 1, 1, -1, 1, 0, 0}}},
      {BasisKind::J, 294, 2,
       {{{LabelRole::Amplitude, 413, 992}, {LabelRole::Phase, 461, 992}}},
       {{0, -1, 0, 0, -1, -1, 1, 0, 1, -1, 0, 1, -1, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 147, 2,
       {{{LabelRole::Amplitude, 405, 993}, {LabelRole::Phase, 461, 993}}},
       {{-1, -1, 0, 1, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 73, 1,
       {{{LabelRole::Amplitude, 435, 994}, {LabelRole::Amplitude, 0, 0}}},
       {{1, -1, 0, 1, 0, 0, 1, -1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, -74, 1,
       {{{LabelRole::Phase, 446, 994}, {LabelRole::Amplitude, 0, 0}}},
       {{1, 1, 1, 0, -1, -1, 1, 1, -1, 0, 1, 1, 1, 1, 0, 0, 0, 0}}},
      {BasisKind::J, 36, 2,
       {{{LabelRole::Amplitude, 413, 995}, {LabelRole::Phase, 445, 995}}},
       {{0, -1, 1, 1, -1, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 17, 2,
       {{{LabelRole::Amplitude, 417, 996}, {LabelRole::Phase, 461, 996}}},
       {{1, -1, -1, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 8, 2,
       {{{LabelRole::Amplitude, 427, 997}, {LabelRole::Phase, 457, 997}}},
       {{-1, -1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 136, 2,
       {{{LabelRole::Amplitude, 485, 990}, {LabelRole::Phase, 497, 990}}},
       {{-1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 68, 1,
       {{{LabelRole::Amplitude, 465, 991}, {LabelRole::Amplitude, 0, 0}}},
       {{0, -1, -1, 1, 1, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 33, 1,
       {{{LabelRole::Amplitude, 465, 992}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, 1, -1, 0, 0, 0, -1, 1, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 16, 1,
       {{{LabelRole::Amplitude, 471, 993}, {LabelRole::Amplitude, 0, 0}}},
       {{1, -1, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 136, 2,
       {{{LabelRole::Amplitude, 485, 990}, {LabelRole::Phase, 497, 990}}},
       {{-1, -1, -1, 0, -1, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 68, 1,
       {{{LabelRole::Amplitude, 465, 991}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, 1, 0, -1, 1, -1, -1, -1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 33, 1,
       {{{LabelRole::Amplitude, 465, 992}, {LabelRole::Amplitude, 0, 0}}},
       {{1, 1, 0, -1, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 16, 1,
       {{{LabelRole::Amplitude, 471, 993}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 1, 0, -1, 0, 0, 0, 0, -1, 1, 0, -1, 1, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 208430, 1,
       {{{LabelRole::Amplitude, 72, 609}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1, -1, -1, 0, 0, 1, 0, 0}}},
      {BasisKind::G, -208431, 1,
       {{{LabelRole::Phase, 72, 609}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, 0, -1, -1, 0, -1, 1, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 0}}},
      {BasisKind::J, 208430, 1,
       {{{LabelRole::Amplitude, 72, 609}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 0, 1, 1, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, 1, 0, 0}}},
      {BasisKind::J, -208431, 1,
       {{{LabelRole::Phase, 72, 609}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 0, 0, 0, 1, -1, 1, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0}}},
      {BasisKind::G, 66, 2,
       {{{LabelRole::Amplitude, 78, 609}, {LabelRole::Phase, 83, 609}}},
       {{0, 0, 0, 0, 0, 0, 0, 0, -1, -1, -1, -1, -1, 1, 0, 0, 0, 0}}},
      {BasisKind::J, 66, 2,
       {{{LabelRole::Amplitude, 78, 609}, {LabelRole::Phase, 83, 609}}},
       {{0, 1, 0, 0, 1, 0, 0, -1, 0, 1, -1, -1, -1, -1, 0, 0, 0, 0}}},
      {BasisKind::G, 10, 1,
       {{{LabelRole::Amplitude, 58, 609}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, 0, 1, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, -11, 1,
       {{{LabelRole::Phase, 52, 609}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 0, 0, -1, 0, 0, 0, 1, -1, 0, 0, -1, 1, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 10, 1,
       {{{LabelRole::Amplitude, 58, 609}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 1, -1, 0, 0, 0, 1, 1, 0, 0, 1, 0, -1, 0, 0, 0, 0, 0}}},
      {BasisKind::J, -11, 1,
       {{{LabelRole::Phase, 52, 609}, {LabelRole::Amplitude, 0, 0}}},
       {{1, -1, -1, 0, 0, 1, 0, -1, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 233, 1,
       {{{LabelRole::Amplitude, 438, 609}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 1, 1, -1, 0, 0, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 39, 1,
       {{{LabelRole::Amplitude, 453, 609}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, 1, -1, -1, 1, 0, 0, 0, -1, 1, 1, -1, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 233, 1,
       {{{LabelRole::Amplitude, 438, 609}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, -1, 0, 0, -1, 1, -1, 0, 1, -1, 0, 1, -1, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 39, 1,
       {{{LabelRole::Amplitude, 453, 609}, {LabelRole::Amplitude, 0, 0}}},
       {{1, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 50, 2,
       {{{LabelRole::Amplitude, 437, 988}, {LabelRole::Phase, 449, 988}}},
       {{0, 0, 1, -1, 0, -1, 1, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 589, 2,
       {{{LabelRole::Amplitude, 409, 991}, {LabelRole::Phase, 449, 991}}},
       {{1, 0, 1, 1, 0, -1, 0, 0, 0, 1, 0, 1, -1, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 97, 1,
       {{{LabelRole::Amplitude, 377, 991}, {LabelRole::Amplitude, 0, 0}}},
       {{1, 0, -1, 1, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 98, 1,
       {{{LabelRole::Phase, 409, 991}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 1, 0, 0, 1, 0, 0, -1, 1, 0, 1, 0, -1, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 50, 2,
       {{{LabelRole::Amplitude, 437, 988}, {LabelRole::Phase, 449, 988}}},
       {{0, 0, -1, 1, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 589, 2,
       {{{LabelRole::Amplitude, 409, 991}, {LabelRole::Phase, 449, 991}}},
       {{-1, -1, 0, 0, -1, 1, 0, -1, 1, -1, 0, -1, 1, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 97, 1,
       {{{LabelRole::Amplitude, 377, 991}, {LabelRole::Amplitude, 0, 0}}},
       {{1, 0, -1, 0, -1, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 98, 1,
       {{{LabelRole::Phase, 409, 991}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, 0, -1, 0, 0, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 758, 2,
       {{{LabelRole::Amplitude, 239, 1000}, {LabelRole::Phase, 269, 1000}}},
       {{0, 0, -1, 0, 1, -1, 0, 1, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 758, 2,
       {{{LabelRole::Amplitude, 239, 1000}, {LabelRole::Phase, 269, 1000}}},
       {{1, 0, -1, 0, 1, -1, 1, 1, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 335, 1,
       {{{LabelRole::Amplitude, 356, 1000}, {LabelRole::Amplitude, 0, 0}}},
       {{1, 0, 0, 0, 0, 0, 0, 0, -1, 1, -1, 1, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, -336, 1,
       {{{LabelRole::Phase, 388, 1000}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, -1, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 335, 1,
       {{{LabelRole::Amplitude, 356, 1000}, {LabelRole::Amplitude, 0, 0}}},
       {{1, -1, 0, 0, -1, 1, 0, -1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, -336, 1,
       {{{LabelRole::Phase, 388, 1000}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 0, 1, 0, 1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 5, 1,
       {{{LabelRole::Amplitude, 135, 1000}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 1, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::G, -6, 1,
       {{{LabelRole::Phase, 168, 1000}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 0, 0, 1, -1, 0, -1, 1, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, 5, 1,
       {{{LabelRole::Amplitude, 135, 1000}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, 1, 1, 1, 1, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {BasisKind::J, -6, 1,
       {{{LabelRole::Phase, 168, 1000}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0}}},
      {BasisKind::G, 0, 0,
       {{{LabelRole::Amplitude, 0, 0}, {LabelRole::Amplitude, 0, 0}}},
       {{-1, 0, 1, 0, 1, -1, 0, -1, 1, 0, 0, 0, 1, -1, -1, 1, 0, 0}}},
      {BasisKind::J, 0, 0,
       {{{LabelRole::Amplitude, 0, 0}, {LabelRole::Amplitude, 0, 0}}},
       {{0, 0, 0, 0, 1, 0, 1, 1, 0, 1, -1, 1, 0, 0, 0, 0, 0, 0}}},
  };
  return rows;
}

}  // namespace croton
