#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "tilekit/letter.hpp"
#include "tilekit/word.hpp"

namespace tilekit {

/// A finite set of distinct words of a common dimension, stored sorted.
class Code {
 public:
  Code() = default;
  /// Throws DimensionMismatch or DuplicateWord.
  Code(int dim, std::vector<Word> words);
  explicit Code(std::vector<Word> words);

  int dim() const { return dim_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  const std::vector<Word>& words() const { return words_; }
  const Word& operator[](std::size_t i) const { return words_[i]; }
  auto begin() const { return words_.begin(); }
  auto end() const { return words_.end(); }

  bool contains(const Word& w) const;
  bool proper() const;
  /// Largest pair index occurring anywhere, 0 if none.
  int max_pair_index() const;

  friend bool operator==(const Code&, const Code&) = default;
  friend auto operator<=>(const Code&, const Code&) = default;

 private:
  int dim_ = 0;
  std::vector<Word> words_;
};

bool is_dichotomous(const Word& v, const Word& u);

/// Position at which `v` and `u` form a twin pair, if they do.
std::optional<int> twin_position(const Word& v, const Word& u);

/// Offending (non-dichotomous) pairs; empty means the code is a polybox code.
std::vector<std::pair<Word, Word>> validate_polybox(const Code& c);
bool is_polybox(const Code& c);

/// 2^(number of stars).
std::uint64_t word_measure(const Word& w);
std::uint64_t measure_sum(const Code& c);

/// Measure criterion; throws NotPolybox.
bool is_partition_code(const Code& c);
/// Proper partition code with 2^dim words.
bool is_cube_tiling_code(const Code& c);

/// Words with `letter` at `position` (0-based).
Code subcode(const Code& c, int position, Letter letter);
/// Code with `position` removed from every word.
Code project(const Code& c, int position);

struct Layer {
  int position;
  int pair_index;
  friend bool operator==(const Layer&, const Layer&) = default;
};
/// First (position, pair) such that every word carries that pair at that position.
std::optional<Layer> is_layered(const Code& c);

/// Pairs occurring at each position as a bit mask over 0-based pair slots.
std::vector<std::uint16_t> position_pair_masks(const Code& c);

}  // namespace tilekit

template <>
struct std::hash<tilekit::Code> {
  std::size_t operator()(const tilekit::Code& c) const noexcept {
    std::size_t h = static_cast<std::size_t>(c.dim());
    for (const auto& w : c) h = h * 1000003u ^ std::hash<tilekit::Word>{}(w);
    return h;
  }
};
