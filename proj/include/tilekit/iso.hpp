#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tilekit/code.hpp"

namespace tilekit {

/// Complement-preserving bijection of the letters at one position: pair slot
/// j goes to slot `to[j]`, swapping orientation when bit j of `flip` is set.
struct PositionBijection {
  std::array<std::uint8_t, Letter::kMaxPairs> to{};
  std::uint16_t flip = 0;

  static PositionBijection identity();
  Letter operator()(Letter l) const;
  PositionBijection inverse() const;
  /// `next` applied after `*this`.
  PositionBijection then(const PositionBijection& next) const;
  friend bool operator==(const PositionBijection&, const PositionBijection&) = default;
};

/// An element h∘σ̄ of the isomorphism group: output position i reads input
/// position `source[i]` and applies `letters[i]`.
struct CandidateMap {
  std::vector<int> source;
  std::vector<PositionBijection> letters;

  static CandidateMap identity(int dim);
  int dim() const { return static_cast<int>(source.size()); }
  Word operator()(const Word& w) const;
  Code operator()(const Code& c) const;
  CandidateMap inverse() const;
  friend bool operator==(const CandidateMap&, const CandidateMap&) = default;
};

/// outer ∘ inner.
CandidateMap compose(const CandidateMap& outer, const CandidateMap& inner);

/// Count pairs (|V^{i,a_j}|, |V^{i,a_j'}|) for every position and pair slot.
struct MatrixProfile {
  using Entry = std::pair<int, int>;
  std::vector<std::array<Entry, Letter::kMaxPairs>> rows;

  int dim() const { return static_cast<int>(rows.size()); }
  int support(int row) const;
  /// Row contents up to entry permutation and entry orientation.
  std::vector<Entry> normalized_row(int row) const;
  friend bool operator==(const MatrixProfile&, const MatrixProfile&) = default;
};

MatrixProfile matrix_profile(const Code& c);
/// Zero entries right-justified in every row and rows ordered by support.
bool has_compressed_form(const MatrixProfile& p);

/// Isomorphic copy in compressed form with the map that produces it.
/// Codes already in compressed form are returned unchanged.
std::pair<Code, CandidateMap> compress(const Code& c);

/// Equality up to row permutation and within-row entry permutation.
/// Throws ShapeMismatch when the dimensions differ.
bool profile_equal(const MatrixProfile& p, const MatrixProfile& q);

/// t_i = number of twin pairs differing at position i.
std::vector<int> twin_vector(const Code& c);

/// Witness map m with m(v) == u, if the codes are isomorphic.
/// Throws DimensionMismatch.
std::optional<CandidateMap> isomorphic(const Code& v, const Code& u);

/// Lexicographically least image of a code under the maps that order
/// positions by a profile invariant, with the labelling that produces it.
struct CanonicalForm {
  Code code;
  CandidateMap map;                        // map(input) == code
  std::size_t automorphism_count = 0;      // maps fixing the input, restricted to its letters
  std::vector<CandidateMap> automorphisms; // filled on request
};

CanonicalForm canonical_form(const Code& c, bool collect_automorphisms = false);
std::string canonical_key(const Code& c);

/// One isomorphism class found by `classify`.
struct IsoClass {
  Code representative;  // the canonical form
  std::string key;
  std::size_t multiplicity = 0;  // members in the input family
  std::size_t first_index = 0;   // index of the first member in the input
  std::vector<int> tp;
  MatrixProfile profile;
};

/// Partitions a family by isomorphism; classes are sorted by key.
std::vector<IsoClass> classify(std::span<const Code> family, int workers = 1);

}  // namespace tilekit
