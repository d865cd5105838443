#pragma once

#include <compare>
#include <cstdint>
#include <optional>

namespace tilekit {

/// One symbol of the alphabet {a1,a1',...,a16,a16',*}.
///
/// Letters are stored by rank: pair j (1-based) occupies ranks 2(j-1) and
/// 2(j-1)+1 for the unprimed and primed letter, and the star has rank 32.
/// Rank order is the canonical letter order a < A < b < B < ... < P < *.
class Letter {
 public:
  static constexpr int kMaxPairs = 16;
  static constexpr std::uint8_t kStarRank = 32;
  static constexpr int kRankCount = 33;

  constexpr Letter() = default;

  static constexpr Letter star() { return Letter(kStarRank); }
  /// `pair_index` is 1-based.
  static constexpr Letter paired(int pair_index, bool primed) {
    return Letter(static_cast<std::uint8_t>(2 * (pair_index - 1) + (primed ? 1 : 0)));
  }
  static constexpr Letter from_rank(std::uint8_t rank) { return Letter(rank); }
  static std::optional<Letter> from_char(char c);

  constexpr bool is_star() const { return rank_ == kStarRank; }
  constexpr int pair_index() const { return rank_ / 2 + 1; }
  /// 0-based pair slot; only meaningful for non-star letters.
  constexpr int pair_slot() const { return rank_ / 2; }
  constexpr bool primed() const { return (rank_ & 1) != 0; }
  constexpr std::uint8_t rank() const { return rank_; }

  constexpr Letter complement() const {
    return is_star() ? *this : Letter(static_cast<std::uint8_t>(rank_ ^ 1));
  }

  char to_char() const;

  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  constexpr explicit Letter(std::uint8_t rank) : rank_(rank) {}

  std::uint8_t rank_ = kStarRank;
};

}  // namespace tilekit
