#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tilekit/code.hpp"
#include "tilekit/iso.hpp"

namespace tilekit {

/// Enumerates every cube tiling code whose letters at position i come from
/// pairs 1..pairs[i], as exact covers of the generic atom grid. With
/// `fix_root`, only codes containing the word a...a are produced. Returns the
/// number of codes emitted.
std::uint64_t enumerate_tiling_codes(const std::vector<int>& pairs, bool fix_root,
                                     const std::function<void(const Code&)>& emit);

/// Every proper code over pairs 1..pairs[i] at position i whose union equals
/// that of the polybox code `region`. Throws AlphabetTooSmall.
std::uint64_t enumerate_equivalent_proper(const Code& region, const std::vector<int>& pairs,
                                          const std::function<void(const Code&)>& emit);

/// All cube tiling codes of dimension `dim` over `pairs` pairs.
std::vector<Code> all_tiling_codes(int dim, int pairs);

/// Isomorphism classes of cube tiling codes of dimension `dim` using at most
/// `pairs` pairs at each position (only one rooted, position-sorted
/// representative per pair-count vector is searched).
std::vector<IsoClass> classify_tiling_codes(int dim, int pairs, int workers = 1);

}  // namespace tilekit
