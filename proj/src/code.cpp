#include "tilekit/code.hpp"

#include <algorithm>
#include <bit>

#include "tilekit/error.hpp"

namespace tilekit {

Word::Word(std::span<const Letter> letters) : dim_(static_cast<std::uint8_t>(letters.size())) {
  if (letters.size() > static_cast<std::size_t>(kMaxDim)) {
    throw Error("word dimension " + std::to_string(letters.size()) + " exceeds " +
                std::to_string(kMaxDim));
  }
  for (const auto l : letters) bits_ = (bits_ << kBits) | l.rank();
}

Word Word::stars(int dim) {
  std::uint64_t bits = 0;
  for (int i = 0; i < dim; ++i) bits = (bits << kBits) | Letter::kStarRank;
  return Word(dim, bits);
}

Word Word::with(int position, Letter letter) const {
  if (position < 0 || position >= dim_) throw BadPosition(position, dim_);
  const int s = shift(position);
  return Word(dim_, (bits_ & ~(std::uint64_t{0x3f} << s)) | (std::uint64_t{letter.rank()} << s));
}

Word Word::without(int position) const {
  if (position < 0 || position >= dim_) throw BadPosition(position, dim_);
  const int s = shift(position);
  const std::uint64_t low = bits_ & ((std::uint64_t{1} << s) - 1);
  const std::uint64_t high = (bits_ >> (s + kBits)) << s;
  return Word(dim_ - 1, high | low);
}

Word Word::append(Letter letter) const {
  if (dim_ >= kMaxDim) throw Error("word dimension exceeds " + std::to_string(kMaxDim));
  return Word(dim_ + 1, (bits_ << kBits) | letter.rank());
}

int Word::star_count() const {
  int n = 0;
  for (int i = 0; i < dim_; ++i) n += at(i).is_star() ? 1 : 0;
  return n;
}

std::string Word::str() const {
  std::string s(static_cast<std::size_t>(dim_), '?');
  for (int i = 0; i < dim_; ++i) s[static_cast<std::size_t>(i)] = at(i).to_char();
  return s;
}

Code::Code(int dim, std::vector<Word> words) : dim_(dim), words_(std::move(words)) {
  for (const auto& w : words_) {
    if (w.dim() != dim_) throw DimensionMismatch(dim_, w.dim());
  }
  std::sort(words_.begin(), words_.end());
  const auto dup = std::adjacent_find(words_.begin(), words_.end());
  if (dup != words_.end()) throw DuplicateWord(dup->str());
}

Code::Code(std::vector<Word> words)
    : Code(words.empty() ? 0 : words.front().dim(), std::move(words)) {}

bool Code::contains(const Word& w) const {
  return std::binary_search(words_.begin(), words_.end(), w);
}

bool Code::proper() const {
  return std::all_of(words_.begin(), words_.end(), [](const Word& w) { return w.proper(); });
}

int Code::max_pair_index() const {
  int m = 0;
  for (const auto& w : words_) {
    for (int i = 0; i < dim_; ++i) {
      const Letter l = w[i];
      if (!l.is_star()) m = std::max(m, l.pair_index());
    }
  }
  return m;
}

bool is_dichotomous(const Word& v, const Word& u) {
  if (v.dim() != u.dim()) throw DimensionMismatch(v.dim(), u.dim());
  // A field of v^u equal to 1 means complementary non-star letters.
  std::uint64_t x = v.packed() ^ u.packed();
  for (int i = 0; i < v.dim(); ++i, x >>= Word::kBits) {
    if ((x & 0x3f) == 1) return true;
  }
  return false;
}

std::optional<int> twin_position(const Word& v, const Word& u) {
  if (v.dim() != u.dim()) throw DimensionMismatch(v.dim(), u.dim());
  std::optional<int> found;
  for (int i = 0; i < v.dim(); ++i) {
    const Letter a = v[i];
    const Letter b = u[i];
    if (a == b) continue;
    if (found || a.is_star() || b != a.complement()) return std::nullopt;
    found = i;
  }
  return found;
}

std::vector<std::pair<Word, Word>> validate_polybox(const Code& c) {
  std::vector<std::pair<Word, Word>> bad;
  const auto& w = c.words();
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (!is_dichotomous(w[i], w[j])) bad.emplace_back(w[i], w[j]);
    }
  }
  return bad;
}

bool is_polybox(const Code& c) {
  const auto& w = c.words();
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (!is_dichotomous(w[i], w[j])) return false;
    }
  }
  return true;
}

std::uint64_t word_measure(const Word& w) { return std::uint64_t{1} << w.star_count(); }

std::uint64_t measure_sum(const Code& c) {
  std::uint64_t s = 0;
  for (const auto& w : c) s += word_measure(w);
  return s;
}

bool is_partition_code(const Code& c) {
  if (!is_polybox(c)) throw NotPolybox();
  return measure_sum(c) == (std::uint64_t{1} << c.dim());
}

bool is_cube_tiling_code(const Code& c) {
  return c.proper() && c.size() == (std::size_t{1} << c.dim()) && is_polybox(c);
}

Code subcode(const Code& c, int position, Letter letter) {
  if (position < 0 || position >= c.dim()) throw BadPosition(position, c.dim());
  std::vector<Word> out;
  for (const auto& w : c) {
    if (w[position] == letter) out.push_back(w);
  }
  return Code(c.dim(), std::move(out));
}

Code project(const Code& c, int position) {
  if (position < 0 || position >= c.dim()) throw BadPosition(position, c.dim());
  std::vector<Word> out;
  out.reserve(c.size());
  for (const auto& w : c) out.push_back(w.without(position));
  return Code(c.dim() - 1, std::move(out));
}

std::optional<Layer> is_layered(const Code& c) {
  if (c.empty()) return std::nullopt;
  for (int i = 0; i < c.dim(); ++i) {
    const Letter first = c[0][i];
    if (first.is_star()) continue;
    const bool all = std::all_of(c.begin(), c.end(), [&](const Word& w) {
      const Letter l = w[i];
      return !l.is_star() && l.pair_slot() == first.pair_slot();
    });
    if (all) return Layer{i, first.pair_index()};
  }
  return std::nullopt;
}

std::vector<std::uint16_t> position_pair_masks(const Code& c) {
  std::vector<std::uint16_t> masks(static_cast<std::size_t>(c.dim()), 0);
  for (const auto& w : c) {
    for (int i = 0; i < c.dim(); ++i) {
      const Letter l = w[i];
      if (!l.is_star()) masks[static_cast<std::size_t>(i)] |= static_cast<std::uint16_t>(1u << l.pair_slot());
    }
  }
  return masks;
}

}  // namespace tilekit
