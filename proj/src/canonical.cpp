#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <numeric>

#include "tilekit/iso.hpp"
#include "tilekit/text_format.hpp"

namespace tilekit {

namespace {

constexpr std::uint8_t kUnset = 0xff;

struct State {
  std::array<std::uint8_t, Word::kMaxDim> source{};
  std::array<std::array<std::uint8_t, 32>, Word::kMaxDim> label{};
  std::array<std::uint8_t, Word::kMaxDim> next{};
  std::vector<std::uint64_t> used;
};

std::vector<int> position_invariant(const MatrixProfile& p, const Code& c, const std::vector<int>& twins,
                                    int i) {
  std::vector<int> key{p.support(i), 0, twins[static_cast<std::size_t>(i)]};
  for (const auto& w : c) key[1] += w[i].is_star();
  for (const auto& [hi, lo] : p.normalized_row(i)) {
    key.push_back(hi);
    key.push_back(lo);
  }
  return key;
}

// Position orders that sort positions by invariant; within a run of equal
// invariants every arrangement is allowed.
std::vector<std::vector<int>> admissible_orders(const Code& c) {
  const int d = c.dim();
  const MatrixProfile p = matrix_profile(c);
  const std::vector<int> twins = twin_vector(c);
  std::vector<std::vector<int>> keys;
  for (int i = 0; i < d; ++i) keys.push_back(position_invariant(p, c, twins, i));
  std::vector<int> base(static_cast<std::size_t>(d));
  std::iota(base.begin(), base.end(), 0);
  std::stable_sort(base.begin(), base.end(), [&](int x, int y) {
    return keys[static_cast<std::size_t>(x)] < keys[static_cast<std::size_t>(y)];
  });
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  for (std::size_t a = 0; a < base.size();) {
    std::size_t b = a + 1;
    while (b < base.size() && keys[static_cast<std::size_t>(base[b])] == keys[static_cast<std::size_t>(base[a])]) ++b;
    runs.emplace_back(a, b);
    a = b;
  }
  std::vector<std::vector<int>> orders{base};
  for (const auto& [a, b] : runs) {
    if (b - a < 2) continue;
    std::vector<std::vector<int>> grown;
    for (const auto& order : orders) {
      std::vector<int> cur = order;
      std::sort(cur.begin() + static_cast<std::ptrdiff_t>(a), cur.begin() + static_cast<std::ptrdiff_t>(b));
      do {
        grown.push_back(cur);
      } while (std::next_permutation(cur.begin() + static_cast<std::ptrdiff_t>(a),
                                     cur.begin() + static_cast<std::ptrdiff_t>(b)));
    }
    orders = std::move(grown);
  }
  return orders;
}

CandidateMap leaf_map(const State& s, int d) {
  CandidateMap m;
  m.source.resize(static_cast<std::size_t>(d));
  m.letters.resize(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    const auto pos = static_cast<std::size_t>(i);
    m.source[pos] = s.source[pos];
    PositionBijection b;
    b.flip = 0;
    std::array<bool, Letter::kMaxPairs> src_done{};
    std::array<bool, Letter::kMaxPairs> dst_done{};
    for (int slot = 0; slot < Letter::kMaxPairs; ++slot) {
      const std::uint8_t r = s.label[pos][static_cast<std::size_t>(2 * slot)];
      if (r == kUnset) continue;
      b.to[static_cast<std::size_t>(slot)] = static_cast<std::uint8_t>(r / 2);
      if (r & 1u) b.flip = static_cast<std::uint16_t>(b.flip | (1u << slot));
      src_done[static_cast<std::size_t>(slot)] = true;
      dst_done[static_cast<std::size_t>(r / 2)] = true;
    }
    int t = 0;
    for (int slot = 0; slot < Letter::kMaxPairs; ++slot) {
      if (src_done[static_cast<std::size_t>(slot)]) continue;
      while (dst_done[static_cast<std::size_t>(t)]) ++t;
      b.to[static_cast<std::size_t>(slot)] = static_cast<std::uint8_t>(t++);
    }
    m.letters[pos] = b;
  }
  return m;
}

}  // namespace

CanonicalForm canonical_form(const Code& c, bool collect_automorphisms) {
  const int d = c.dim();
  const std::size_t n = c.size();
  const std::size_t mask_words = (n + 63) / 64;
  std::vector<std::array<std::uint8_t, Word::kMaxDim>> ranks(n);
  for (std::size_t w = 0; w < n; ++w) {
    for (int i = 0; i < d; ++i) ranks[w][static_cast<std::size_t>(i)] = c[w][i].rank();
  }

  std::vector<State> beam;
  for (const auto& order : admissible_orders(c)) {
    State s;
    for (int i = 0; i < d; ++i) {
      s.source[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(order[static_cast<std::size_t>(i)]);
      s.label[static_cast<std::size_t>(i)].fill(kUnset);
    }
    s.used.assign(mask_words, 0);
    beam.push_back(std::move(s));
  }

  std::vector<Word> image_words;
  image_words.reserve(n);
  for (std::size_t level = 0; level < n; ++level) {
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::pair<std::size_t, std::size_t>> winners;
    for (std::size_t si = 0; si < beam.size(); ++si) {
      const State& s = beam[si];
      for (std::size_t w = 0; w < n; ++w) {
        if ((s.used[w / 64] >> (w % 64)) & 1u) continue;
        std::uint64_t img = 0;
        for (int i = 0; i < d; ++i) {
          const auto pos = static_cast<std::size_t>(i);
          const std::uint8_t r = ranks[w][s.source[pos]];
          std::uint8_t v = r;
          if (r != Letter::kStarRank) {
            v = s.label[pos][r];
            if (v == kUnset) v = static_cast<std::uint8_t>(2 * s.next[pos]);
          }
          img = (img << Word::kBits) | v;
        }
        if (img < best) {
          best = img;
          winners.clear();
        }
        if (img == best) winners.emplace_back(si, w);
      }
    }
    std::vector<State> grown;
    grown.reserve(winners.size());
    for (const auto& [si, w] : winners) {
      State s = beam[si];
      for (int i = 0; i < d; ++i) {
        const auto pos = static_cast<std::size_t>(i);
        const std::uint8_t r = ranks[w][s.source[pos]];
        if (r == Letter::kStarRank || s.label[pos][r] != kUnset) continue;
        const auto fresh = static_cast<std::uint8_t>(2 * s.next[pos]);
        s.label[pos][r] = fresh;
        s.label[pos][r ^ 1u] = static_cast<std::uint8_t>(fresh + 1);
        ++s.next[pos];
      }
      s.used[w / 64] |= std::uint64_t{1} << (w % 64);
      grown.push_back(std::move(s));
    }
    beam = std::move(grown);
    image_words.push_back(Word::from_packed(d, best));
  }

  CanonicalForm out;
  out.code = Code(d, std::move(image_words));
  if (beam.empty()) {
    out.map = CandidateMap::identity(d);
    out.automorphism_count = 1;
    if (collect_automorphisms) out.automorphisms.push_back(out.map);
    return out;
  }
  out.map = leaf_map(beam.front(), d);
  out.automorphism_count = beam.size();
  if (collect_automorphisms) {
    const CandidateMap inv = out.map.inverse();
    for (const auto& s : beam) out.automorphisms.push_back(compose(inv, leaf_map(s, d)));
  }
  return out;
}

std::string canonical_key(const Code& c) { return join_words(canonical_form(c).code, ','); }

}  // namespace tilekit
