#pragma once

#include <vector>

#include "tilekit/code.hpp"

namespace tilekit {

/// Centers of max-metric balls of radius `radius` in Z^dim_{modulus}.
struct PerfectCode {
  int dim = 0;
  int radius = 0;
  int modulus = 0;
  std::vector<std::vector<int>> centers;
};

/// Realizes a cube tiling code as an r-perfect code in Z^d_{4r+2}.
///
/// At position i the occurring pairs, taken in increasing pair index as
/// j = 1..k_i, map a_j to the 2r+1 consecutive residues starting at j-1 and
/// a_j' to the complementary run. Throws NotTilingCode.
PerfectCode realize_perfect_code(const Code& c, int radius);

/// True iff every point of Z^dim_modulus lies within max-metric distance
/// `radius` of exactly one center. Exhaustive over the torus.
bool is_perfect_code(const PerfectCode& p);

}  // namespace tilekit
