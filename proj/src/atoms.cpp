#include "tilekit/atoms.hpp"

#include <algorithm>

#include "tilekit/error.hpp"

namespace tilekit {

AtomRealization::AtomRealization(int dim, std::vector<std::vector<int>> pairs)
    : dim_(dim), pairs_(std::move(pairs)) {
  if (static_cast<int>(pairs_.size()) != dim_) throw DimensionMismatch(dim_, static_cast<int>(pairs_.size()));
  int bits = 0;
  for (const auto& p : pairs_) bits += static_cast<int>(p.size());
  if (bits > 32) throw Error("atom grid too large: 2^" + std::to_string(bits) + " cells");
  cells_ = std::uint64_t{1} << bits;
}

AtomRealization AtomRealization::joint(std::initializer_list<const Code*> codes) {
  int dim = -1;
  std::vector<std::uint16_t> masks;
  for (const Code* c : codes) {
    if (dim < 0) {
      dim = c->dim();
      masks.assign(static_cast<std::size_t>(dim), 0);
    }
    if (c->dim() != dim) throw DimensionMismatch(dim, c->dim());
    const auto m = position_pair_masks(*c);
    for (std::size_t i = 0; i < m.size(); ++i) masks[i] |= m[i];
  }
  std::vector<std::vector<int>> pairs(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (int j = 0; j < Letter::kMaxPairs; ++j) {
      if (masks[i] & (1u << j)) pairs[i].push_back(j + 1);
    }
  }
  return AtomRealization(std::max(dim, 0), std::move(pairs));
}

bool AtomRealization::covers(const Word& w, std::uint64_t cell) const {
  // Cell index is mixed-radix with position 0 in the most significant digit.
  for (int i = dim_ - 1; i >= 0; --i) {
    const auto& p = pairs_[static_cast<std::size_t>(i)];
    const std::uint64_t atom = cell & ((std::uint64_t{1} << p.size()) - 1);
    cell >>= p.size();
    const Letter l = w[i];
    if (l.is_star()) continue;
    const auto it = std::find(p.begin(), p.end(), l.pair_index());
    if (it == p.end()) throw Error("letter outside the realization alphabet");
    const auto bit = static_cast<unsigned>(it - p.begin());
    if (((atom >> bit) & 1u) != (l.primed() ? 1u : 0u)) return false;
  }
  return true;
}

std::vector<std::uint32_t> AtomRealization::cover_counts(const Code& c) const {
  if (c.dim() != dim_) throw DimensionMismatch(dim_, c.dim());
  std::vector<std::uint32_t> counts(cells_, 0);
  for (std::uint64_t cell = 0; cell < cells_; ++cell) {
    for (const auto& w : c) counts[cell] += covers(w, cell) ? 1u : 0u;
  }
  return counts;
}

std::vector<bool> AtomRealization::occupied(const Code& c) const {
  const auto counts = cover_counts(c);
  std::vector<bool> occ(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) occ[i] = counts[i] > 0;
  return occ;
}

namespace {

// Atom counts scaled by 2^-(k-2) at a position with k pairs: equal letters or
// star/letter share 2, different pairs share 1, complements 0, star/star 4.
std::uint64_t overlap_factor(Letter a, Letter b) {
  if (a.is_star()) return b.is_star() ? 4 : 2;
  if (b.is_star() || a == b) return 2;
  if (b == a.complement()) return 0;
  return 1;
}

std::uint64_t box_overlap(const Word& v, const Word& u) {
  std::uint64_t m = 1;
  for (int i = 0; i < v.dim() && m != 0; ++i) m *= overlap_factor(v[i], u[i]);
  return m;
}

}  // namespace

bool covered_by(const Code& inner, const Code& outer) {
  if (inner.dim() != outer.dim()) throw DimensionMismatch(inner.dim(), outer.dim());
  // Boxes of `outer` are disjoint, so v is covered iff its overlaps sum to its size.
  for (const auto& v : inner) {
    std::uint64_t sum = 0;
    for (const auto& u : outer) sum += box_overlap(v, u);
    if (sum != box_overlap(v, v)) return false;
  }
  return true;
}

bool equivalent(const Code& v, const Code& u) {
  if (v.dim() != u.dim()) throw DimensionMismatch(v.dim(), u.dim());
  return covered_by(v, u) && covered_by(u, v);
}

}  // namespace tilekit
