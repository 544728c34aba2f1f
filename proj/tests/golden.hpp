#pragma once

// Published reference data, transcribed by hand.

#include "oracles.hpp"

#include <vector>

namespace golden {

using oracle::Rel;

// S2 x sl2R, E_{2(i-1)+alpha} = lambda_alpha e_i.
inline std::vector<Rel> s2_sl2r() {
  return {{1, 3, 2, 1}, {1, 4, 2, 1}, {1, 5, 4, 2}, {1, 6, 4, 2}, {2, 3, 2, 1}, {2, 4, 2, 1},
          {2, 5, 4, 2}, {2, 6, 4, 2}, {3, 5, 6, 1}, {3, 6, 6, 1}, {4, 5, 6, 1}, {4, 6, 6, 1}};
}

// S3 x sl2R with the literal three-element table, E_{3(i-1)+alpha}.
inline std::vector<Rel> s3_sl2r() {
  return {{1, 4, 1, 1}, {1, 5, 1, 1}, {1, 6, 1, 1}, {1, 7, 4, 2}, {1, 8, 4, 2}, {1, 9, 4, 2},
          {2, 4, 1, 1}, {2, 5, 1, 1}, {2, 6, 2, 1}, {2, 7, 4, 2}, {2, 8, 4, 2}, {2, 9, 5, 2},
          {3, 4, 1, 1}, {3, 5, 2, 1}, {3, 6, 1, 1}, {3, 7, 4, 2}, {3, 8, 5, 2}, {3, 9, 4, 2},
          {4, 7, 7, 1}, {4, 8, 7, 1}, {4, 9, 7, 1}, {5, 7, 7, 1}, {5, 8, 7, 1}, {5, 9, 8, 1},
          {6, 7, 7, 1}, {6, 8, 8, 1}, {6, 9, 7, 1}};
}

// Derivations as sums of matrix units E_ij (1-based row i, column j).
struct Unit {
  int i, j;
  int coeff;
};
using Generator = std::vector<Unit>;

inline std::vector<Generator> der_gf_listed() {
  return {
      {{2, 1, 2}, {4, 2, 1}, {5, 3, 1}, {6, 4, 3}, {7, 5, 5}, {7, 6, 2}},
      {{3, 1, 1}, {5, 2, 1}, {7, 5, -1}},
      {{3, 2, 1}, {4, 3, 1}, {5, 4, 1}, {6, 5, 1}, {7, 6, 1}},
      {{6, 1, 1}},
      {{4, 1, 1}, {5, 1, -1}, {7, 4, 1}},
      {{5, 1, 1}, {6, 2, 1}},
  };
}

inline std::vector<Generator> der_ge_listed() {
  return {
      {{3, 1, 1}, {4, 1, -1}, {5, 2, 1}},
      {{4, 1, 1}, {6, 2, 1}},
      {{3, 1, -1}, {4, 1, 1}, {6, 3, 1}, {7, 4, 1}},
      {{2, 1, -1}, {3, 1, -1}, {4, 1, 1}, {4, 2, 2}, {5, 3, 2}, {6, 3, 1}, {6, 4, 1}},
      {{7, 1, 1}},
      {{5, 1, 1}},
      {{2, 1, 1}, {3, 1, 1}, {4, 1, -1}, {4, 2, -1}, {5, 3, -1}, {6, 3, -1}, {7, 5, 1}},
      {{4, 1, -1}, {7, 3, 1}},
      {{3, 2, 1}, {4, 3, 1}, {5, 4, 1}, {6, 5, 1}, {7, 6, 1}},
      {{7, 2, 1}},
      {{6, 1, 1}},
  };
}

}  // namespace golden
