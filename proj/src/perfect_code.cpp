#include "tilekit/perfect_code.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

#include "tilekit/error.hpp"

namespace tilekit {

PerfectCode realize_perfect_code(const Code& c, int radius) {
  if (radius < 1) throw Error("radius must be at least 1");
  if (!is_cube_tiling_code(c)) throw NotTilingCode();
  PerfectCode out;
  out.dim = c.dim();
  out.radius = radius;
  out.modulus = 4 * radius + 2;
  const auto masks = position_pair_masks(c);
  for (const auto& w : c) {
    std::vector<int> center(static_cast<std::size_t>(c.dim()));
    for (int i = 0; i < c.dim(); ++i) {
      const Letter l = w[i];
      const unsigned below = masks[static_cast<std::size_t>(i)] & ((1u << l.pair_slot()) - 1u);
      const int offset = std::popcount(below);  // j - 1
      const int start = l.primed() ? offset + 2 * radius + 1 : offset;
      center[static_cast<std::size_t>(i)] = (start + radius) % out.modulus;
    }
    out.centers.push_back(std::move(center));
  }
  return out;
}

bool is_perfect_code(const PerfectCode& p) {
  if (p.dim <= 0 || p.modulus <= 0) return false;
  std::size_t total = 1;
  for (int i = 0; i < p.dim; ++i) total *= static_cast<std::size_t>(p.modulus);
  std::vector<int> point(static_cast<std::size_t>(p.dim), 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (int i = p.dim - 1; i >= 0; --i) {
      point[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::size_t>(p.modulus));
      rest /= static_cast<std::size_t>(p.modulus);
    }
    int hits = 0;
    for (const auto& c : p.centers) {
      bool inside = true;
      for (int i = 0; i < p.dim && inside; ++i) {
        const int diff = std::abs(c[static_cast<std::size_t>(i)] - point[static_cast<std::size_t>(i)]);
        inside = std::min(diff, p.modulus - diff) <= p.radius;
      }
      hits += inside ? 1 : 0;
    }
    if (hits != 1) return false;
  }
  return true;
}

}  // namespace tilekit
