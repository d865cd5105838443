#include "tilekit/tiling_enum.hpp"

#include <map>
#include <optional>

#include "tilekit/error.hpp"
#include "tilekit/parallel.hpp"

namespace tilekit {

namespace {

// Exact covers of the union of `region` by proper words, over the generic
// atom grid with pairs[i] pairs at position i.
class ExactCover {
 public:
  ExactCover(const std::vector<int>& pairs, const Code& region, const std::function<void(const Code&)>& emit)
      : pairs_(pairs), d_(static_cast<int>(pairs.size())), region_(region), emit_(emit) {
    // pointers into chosen_ are held across recursion
    chosen_.reserve(std::size_t{1} << d_);
    whole_ = region_.size() == 1 && region_[0].star_count() == d_;
  }

  std::uint64_t run(bool fix_root) {
    if (fix_root) {
      std::vector<Letter> root(static_cast<std::size_t>(d_), Letter::paired(1, false));
      chosen_.push_back(Word(std::span<const Letter>(root)));
    }
    search();
    return count_;
  }

 private:
  static bool covers_atom(Letter l, int atom) {
    return l.is_star() || ((atom >> l.pair_slot()) & 1) == static_cast<int>(l.primed());
  }
  static int least_atom(Letter l) { return l.is_star() ? 0 : static_cast<int>(l.primed()) << l.pair_slot(); }

  // First region cell, in lexicographic order, not covered by a chosen word.
  bool find_uncovered(int pos, const std::vector<const Word*>& targets, const std::vector<const Word*>& active,
                      std::vector<int>& cell) const {
    if (targets.empty()) return false;
    if (active.empty()) {
      for (int i = pos; i < d_; ++i) cell[static_cast<std::size_t>(i)] = least_atom((*targets.front())[i]);
      return true;
    }
    if (pos == d_) return false;
    const int atoms = 1 << pairs_[static_cast<std::size_t>(pos)];
    std::vector<const Word*> next_targets;
    std::vector<const Word*> next;
    for (int t = 0; t < atoms; ++t) {
      next_targets.clear();
      for (const Word* w : targets) {
        if (covers_atom((*w)[pos], t)) next_targets.push_back(w);
      }
      if (next_targets.empty()) continue;
      next.clear();
      for (const Word* w : active) {
        if (covers_atom((*w)[pos], t)) next.push_back(w);
      }
      cell[static_cast<std::size_t>(pos)] = t;
      if (find_uncovered(pos + 1, next_targets, next, cell)) return true;
    }
    return false;
  }

  // Region boxes are disjoint, so w lies inside iff its overlaps add up to |w|.
  bool inside_region(const Word& w) const {
    if (whole_) return true;
    std::uint64_t sum = 0;
    for (const auto& u : region_) {
      std::uint64_t overlap = 1;
      for (int i = 0; i < d_ && overlap; ++i) {
        const Letter x = w[i];
        const Letter y = u[i];
        if (y.is_star() || x == y) {
          overlap *= 2;
        } else if (x == y.complement()) {
          overlap = 0;
        }
      }
      sum += overlap;
    }
    return sum == (std::uint64_t{1} << d_);
  }

  void search() {
    std::vector<const Word*> targets;
    for (const auto& w : region_) targets.push_back(&w);
    std::vector<const Word*> active;
    for (const auto& w : chosen_) active.push_back(&w);
    std::vector<int> cell(static_cast<std::size_t>(d_));
    if (!find_uncovered(0, targets, active, cell)) {
      ++count_;
      emit_(Code(d_, chosen_));
      return;
    }
    std::vector<Letter> letters(static_cast<std::size_t>(d_));
    extend(0, cell, letters, active);
  }

  // `open` holds chosen words not yet separated from the candidate prefix.
  void extend(int pos, const std::vector<int>& cell, std::vector<Letter>& letters,
              const std::vector<const Word*>& open) {
    if (pos == d_) {
      if (!open.empty()) return;
      const Word w{std::span<const Letter>(letters)};
      if (!inside_region(w)) return;
      chosen_.push_back(w);
      search();
      chosen_.pop_back();
      return;
    }
    const int t = cell[static_cast<std::size_t>(pos)];
    std::vector<const Word*> rest;
    for (int j = 0; j < pairs_[static_cast<std::size_t>(pos)]; ++j) {
      const Letter l = Letter::paired(j + 1, ((t >> j) & 1) != 0);
      const Letter c = l.complement();
      rest.clear();
      for (const Word* w : open) {
        if ((*w)[pos] != c) rest.push_back(w);
      }
      if (pos == d_ - 1 && !rest.empty()) continue;
      letters[static_cast<std::size_t>(pos)] = l;
      extend(pos + 1, cell, letters, rest);
    }
  }

  std::vector<int> pairs_;
  int d_;
  const Code& region_;
  bool whole_ = false;
  const std::function<void(const Code&)>& emit_;
  std::vector<Word> chosen_;
  std::uint64_t count_ = 0;
};

void check_pairs(const std::vector<int>& pairs) {
  if (pairs.empty() || static_cast<int>(pairs.size()) > Word::kMaxDim) throw Error("unsupported dimension");
  for (int k : pairs) {
    if (k < 1 || k > Letter::kMaxPairs) throw Error("pair count out of range");
  }
}

}  // namespace

std::uint64_t enumerate_equivalent_proper(const Code& region, const std::vector<int>& pairs,
                                          const std::function<void(const Code&)>& emit) {
  check_pairs(pairs);
  if (region.dim() != static_cast<int>(pairs.size())) throw DimensionMismatch(region.dim(), static_cast<int>(pairs.size()));
  for (const auto& w : region) {
    for (int i = 0; i < region.dim(); ++i) {
      if (!w[i].is_star() && w[i].pair_index() > pairs[static_cast<std::size_t>(i)]) {
        throw AlphabetTooSmall(w[i].pair_index(), pairs[static_cast<std::size_t>(i)]);
      }
    }
  }
  if (region.empty()) return 0;
  return ExactCover(pairs, region, emit).run(false);
}

namespace {

void nondecreasing_vectors(int dim, int max_value, int from, std::vector<int>& cur,
                           std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == dim) {
    out.push_back(cur);
    return;
  }
  for (int v = from; v <= max_value; ++v) {
    cur.push_back(v);
    nondecreasing_vectors(dim, max_value, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::uint64_t enumerate_tiling_codes(const std::vector<int>& pairs, bool fix_root,
                                     const std::function<void(const Code&)>& emit) {
  check_pairs(pairs);
  const int d = static_cast<int>(pairs.size());
  const Code whole(d, {Word::stars(d)});
  return ExactCover(pairs, whole, emit).run(fix_root);
}

std::vector<Code> all_tiling_codes(int dim, int pairs) {
  std::vector<Code> out;
  enumerate_tiling_codes(std::vector<int>(static_cast<std::size_t>(dim), pairs), false,
                         [&](const Code& c) { out.push_back(c); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IsoClass> classify_tiling_codes(int dim, int pairs, int workers) {
  std::vector<std::vector<int>> shapes;
  std::vector<int> cur;
  nondecreasing_vectors(dim, pairs, 1, cur, shapes);
  std::map<std::string, IsoClass> classes;
  constexpr std::size_t kBatch = 1 << 14;
  std::vector<Code> batch;
  auto flush = [&] {
    std::vector<std::string> keys(batch.size());
    parallel_for(batch.size(), workers, [&](std::size_t i) { keys[i] = canonical_key(batch[i]); });
    for (std::size_t i = 0; i < batch.size(); ++i) {
      auto [it, inserted] = classes.try_emplace(keys[i]);
      if (inserted) {
        it->second.key = keys[i];
        it->second.representative = canonical_form(batch[i]).code;
      }
      ++it->second.multiplicity;
    }
    batch.clear();
  };
  for (const auto& shape : shapes) {
    enumerate_tiling_codes(shape, true, [&](const Code& c) {
      const auto masks = position_pair_masks(c);
      for (int i = 0; i < dim; ++i) {
        if (masks[static_cast<std::size_t>(i)] != (1u << shape[static_cast<std::size_t>(i)]) - 1u) return;
      }
      batch.push_back(c);
      if (batch.size() == kBatch) flush();
    });
  }
  flush();
  std::vector<IsoClass> out;
  std::size_t index = 0;
  for (auto& [key, cls] : classes) {
    cls.first_index = index++;
    cls.tp = twin_vector(cls.representative);
    cls.profile = matrix_profile(cls.representative);
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace tilekit
