#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tilekit/code.hpp"
#include "tilekit/iso.hpp"

namespace tilekit {

/// Number of words with i stars, for i = 0..d-1.
using StarComposition = std::vector<int>;

/// Solutions of sum x_i 2^i = 2^d and sum x_i = k.
std::vector<StarComposition> compositions(int k, int d);

/// All words over the first `pairs` pairs with exactly `star_count` stars, sorted.
std::vector<Word> words_with_stars(int star_count, int pairs, int d);

/// The two four-dimensional parity-pair seeds {aaaa, AAAa} and {aaa*, AAA*}.
Code proper_seed();
Code starred_seed();

/// Every k-word twin-pair-free partition code over {a,A,b,B,*}^4 that contains
/// one of the seeds verbatim. Sorted, duplicate free.
std::vector<Code> enumerate_k(int k, int workers = 1);

/// Isomorphism classes of all twin-pair-free partition codes in dimension
/// four, excluding the layered class {a***, A***}.
std::vector<IsoClass> all_twin_pair_free(int workers = 1);

/// The twenty published twin-pair-free partition codes, named "C1".."C20".
std::vector<std::pair<std::string, Code>> reference_twin_pair_free_codes();

/// The layered two-word code {a***, A***}.
Code layered_partition_code();

}  // namespace tilekit
