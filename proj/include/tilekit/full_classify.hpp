#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "tilekit/iso.hpp"

namespace tilekit {

/// Classes with a given largest per-position pair count.
struct LevelResult {
  int k = 0;
  std::vector<IsoClass> classes;
  std::uint64_t generated = 0;  // codes built before deduplication
};

struct CylinderClassifyOptions {
  int dim = 4;
  int max_k = 8;
  int workers = 1;
  std::set<int> skip_levels;                            // levels already available (resume)
  std::function<void(const LevelResult&)> on_level;   // called after each finished level
  std::function<void(int k, std::size_t done, std::size_t total)> on_progress;
};

/// All cube tiling codes of dimension `dim` up to isomorphism, built level by
/// level: a code whose largest position carries k pairs is cut along that
/// position into V^j a_j and W^j a_j' with V a class representative one
/// dimension down, the V^j a set partition into k blocks and each W^j a
/// proper code equivalent to V^j.
std::vector<LevelResult> classify_by_cylinders(const CylinderClassifyOptions& options);

/// Set partitions of {0..n-1} into exactly k blocks as restricted growth strings.
std::vector<std::vector<int>> set_partitions(int n, int k);

}  // namespace tilekit
