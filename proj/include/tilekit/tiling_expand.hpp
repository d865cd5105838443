#pragma once

#include <functional>
#include <vector>

#include "tilekit/code.hpp"
#include "tilekit/iso.hpp"

namespace tilekit {

/// Ordered blocks partitioning a code.
struct CodePartition {
  std::vector<Code> blocks;
};

/// Proper codes equivalent to {w}: every cube tiling code of dimension m over
/// the supply pairs (1-based indices), grafted into the m star positions of w.
/// Throws EmptySupply.
std::vector<Code> star_expansions(const Word& w, const std::vector<int>& supply);

/// Streams every proper code obtained by expanding each improper word of a
/// partition code independently. Returns the number of codes emitted.
std::uint64_t expand_code(const Code& c, const std::vector<int>& supply,
                          const std::function<void(const Code&)>& emit);
std::vector<Code> expand_code(const Code& c, const std::vector<int>& supply);

/// V^1 a_1 ∪ W^1 a_1' ∪ ... ∪ V^k a_k ∪ W^k a_k' with a_i = pair letters[i].
/// Throws BlocksNotEquivalent when some V^i and W^i are not equivalent.
Code cylinder_extend(const CodePartition& v, const CodePartition& w, const std::vector<int>& letters);

/// Cylinder extensions of the dimension-three classes with eight singleton blocks.
std::vector<Code> build_N48(const std::vector<Code>& n3);

/// Seven-block cylinder extensions: family A (no twin-pair block, equal
/// sides) and family B (twin-pair block re-cut over each of eight pairs).
struct SevenBlockFamilies {
  std::vector<Code> a;
  std::vector<Code> b;
};
SevenBlockFamilies build_N47_families(const std::vector<Code>& n3);
/// Isomorphism classes of A ∪ B.
std::vector<IsoClass> build_N47(const std::vector<Code>& n3, int workers = 1);

}  // namespace tilekit
