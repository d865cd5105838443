#pragma once

#include <cstdint>
#include <vector>

#include "tilekit/code.hpp"

namespace tilekit {

/// Generic realization of codes on a grid of Boolean atoms.
///
/// Position i carries the k_i pairs listed in `pairs[i]`; its atoms are the
/// 2^k_i sign patterns, atom t lying in letter (pair j, primed p) iff bit j of t
/// equals p. A star covers every atom. Every atom is nonempty, so two polybox
/// codes have equal generic realizations iff they are equivalent.
class AtomRealization {
 public:
  AtomRealization(int dim, std::vector<std::vector<int>> pairs);
  /// Realization over the union of the per-position alphabets of `codes`.
  static AtomRealization joint(std::initializer_list<const Code*> codes);

  int dim() const { return dim_; }
  std::uint64_t cell_count() const { return cells_; }
  int atoms_at(int position) const { return 1 << pairs_[static_cast<std::size_t>(position)].size(); }

  bool covers(const Word& w, std::uint64_t cell) const;
  /// Number of boxes covering each cell.
  std::vector<std::uint32_t> cover_counts(const Code& c) const;
  /// Occupied-cell indicator.
  std::vector<bool> occupied(const Code& c) const;

 private:
  int dim_;
  std::vector<std::vector<int>> pairs_;  // 1-based pair indices per position
  std::uint64_t cells_ = 1;
};

/// Equal unions under every dichotomy-preserving realization.
/// Both codes must be polybox codes of the same dimension.
bool equivalent(const Code& v, const Code& u);

/// Union of `inner` contained in union of `outer` (both polybox codes).
bool covered_by(const Code& inner, const Code& outer);

}  // namespace tilekit
