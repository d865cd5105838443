#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "tilekit/letter.hpp"

namespace tilekit {

/// A fixed-length sequence of letters, bit-packed six bits per position.
///
/// Position 0 occupies the most significant field, so comparing packed values
/// of equal dimension is the lexicographic order on letter ranks.
class Word {
 public:
  static constexpr int kMaxDim = 8;
  static constexpr int kBits = 6;

  constexpr Word() = default;
  explicit Word(std::span<const Letter> letters);
  Word(std::initializer_list<Letter> letters)
      : Word(std::span<const Letter>(letters.begin(), letters.size())) {}

  /// All-star word of the given dimension.
  static Word stars(int dim);
  static constexpr Word from_packed(int dim, std::uint64_t packed) { return Word(dim, packed); }

  constexpr int dim() const { return dim_; }
  constexpr std::uint64_t packed() const { return bits_; }

  Letter at(int position) const {
    return Letter::from_rank(static_cast<std::uint8_t>((bits_ >> shift(position)) & 0x3f));
  }
  Letter operator[](int position) const { return at(position); }

  /// Copy with the letter at `position` replaced.
  Word with(int position, Letter letter) const;
  /// Copy with `position` removed; the dimension drops by one.
  Word without(int position) const;
  /// Copy with `letter` appended as a new last position.
  Word append(Letter letter) const;

  int star_count() const;
  bool proper() const { return star_count() == 0; }

  std::string str() const;

  friend constexpr auto operator<=>(const Word&, const Word&) = default;

 private:
  constexpr Word(int dim, std::uint64_t bits) : dim_(static_cast<std::uint8_t>(dim)), bits_(bits) {}
  int shift(int position) const { return kBits * (dim_ - 1 - position); }

  std::uint8_t dim_ = 0;
  std::uint64_t bits_ = 0;
};

}  // namespace tilekit

template <>
struct std::hash<tilekit::Word> {
  std::size_t operator()(const tilekit::Word& w) const noexcept {
    return std::hash<std::uint64_t>{}(w.packed() * 0x9e3779b97f4a7c15ULL ^ w.dim());
  }
};
