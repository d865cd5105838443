#include "tilekit/letter.hpp"

namespace tilekit {

std::optional<Letter> Letter::from_char(char c) {
  if (c == '*') return star();
  if (c >= 'a' && c <= 'p') return paired(c - 'a' + 1, false);
  if (c >= 'A' && c <= 'P') return paired(c - 'A' + 1, true);
  return std::nullopt;
}

char Letter::to_char() const {
  if (is_star()) return '*';
  const char base = primed() ? 'A' : 'a';
  return static_cast<char>(base + pair_slot());
}

}  // namespace tilekit
