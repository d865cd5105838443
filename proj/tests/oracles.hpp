#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tilekit/code.hpp"
#include "tilekit/iso.hpp"
#include "tilekit/perfect_code.hpp"
#include "tilekit/text_format.hpp"

namespace oracle {

using tilekit::Code;
using tilekit::Letter;
using tilekit::Word;

inline Code code(const std::string& words) {
  std::string text = words;
  std::replace(text.begin(), text.end(), ' ', '\n');
  return tilekit::parse_code(text);
}

// Cells of the grid prod_i 2^{k_i}; letter (pair slot s, primed p) at
// position i holds atom t iff bit (index of s among occurring slots) of t is p.
struct Grid {
  int dim = 0;
  std::vector<std::vector<int>> slots;
  std::uint64_t cells = 1;

  explicit Grid(const std::vector<const Code*>& codes) {
    dim = codes.front()->dim();
    slots.resize(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
      std::set<int> s;
      for (const Code* c : codes) {
        for (const auto& w : *c) {
          if (!w[i].is_star()) s.insert(w[i].pair_slot());
        }
      }
      slots[static_cast<std::size_t>(i)].assign(s.begin(), s.end());
      cells <<= s.size();
    }
  }

  bool holds(const Word& w, std::uint64_t cell) const {
    for (int i = dim - 1; i >= 0; --i) {
      const auto& sl = slots[static_cast<std::size_t>(i)];
      const std::uint64_t atom = cell & ((std::uint64_t{1} << sl.size()) - 1);
      cell >>= sl.size();
      const Letter l = w[i];
      if (l.is_star()) continue;
      const auto bit = static_cast<std::size_t>(std::find(sl.begin(), sl.end(), l.pair_slot()) - sl.begin());
      if (((atom >> bit) & 1u) != static_cast<std::uint64_t>(l.primed())) return false;
    }
    return true;
  }

  std::vector<int> counts(const Code& c) const {
    std::vector<int> n(cells, 0);
    for (std::uint64_t cell = 0; cell < cells; ++cell) {
      for (const auto& w : c) n[cell] += holds(w, cell);
    }
    return n;
  }
};

inline bool exact_cover(const Code& c) {
  if (c.empty()) return false;
  const Grid g({&c});
  const auto n = g.counts(c);
  return std::all_of(n.begin(), n.end(), [](int x) { return x == 1; });
}

inline bool same_union(const Code& v, const Code& u) {
  const Grid g({&v, &u});
  const auto a = g.counts(v);
  const auto b = g.counts(u);
  for (std::uint64_t i = 0; i < g.cells; ++i) {
    if ((a[i] > 0) != (b[i] > 0)) return false;
  }
  return true;
}

// Random dichotomy-preserving realization on {0..m-1}^d: every pair at every
// position gets a random subset and its complement.
inline bool equal_under_random_f(const Code& v, const Code& u, int m, std::mt19937_64& rng) {
  const int d = v.dim();
  std::vector<std::vector<std::vector<bool>>> f(static_cast<std::size_t>(d),
                                                std::vector<std::vector<bool>>(Letter::kMaxPairs));
  for (auto& pos : f) {
    for (auto& set : pos) {
      set.resize(static_cast<std::size_t>(m));
      for (int x = 0; x < m; ++x) set[static_cast<std::size_t>(x)] = rng() & 1u;
    }
  }
  auto inside = [&](const Word& w, const std::vector<int>& point) {
    for (int i = 0; i < d; ++i) {
      const Letter l = w[i];
      if (l.is_star()) continue;
      const bool in_a = f[static_cast<std::size_t>(i)][static_cast<std::size_t>(l.pair_slot())]
                         [static_cast<std::size_t>(point[static_cast<std::size_t>(i)])];
      if (in_a == l.primed()) return false;
    }
    return true;
  };
  std::vector<int> point(static_cast<std::size_t>(d), 0);
  for (;;) {
    const bool a = std::any_of(v.begin(), v.end(), [&](const Word& w) { return inside(w, point); });
    const bool b = std::any_of(u.begin(), u.end(), [&](const Word& w) { return inside(w, point); });
    if (a != b) return false;
    int i = 0;
    while (i < d && ++point[static_cast<std::size_t>(i)] == m) point[static_cast<std::size_t>(i++)] = 0;
    if (i == d) return true;
  }
}

// Every element of the group of maps on S^d with S = k pairs.
inline std::vector<tilekit::CandidateMap> full_group(int d, int k) {
  std::vector<tilekit::PositionBijection> per_position;
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (int flip = 0; flip < (1 << k); ++flip) {
      tilekit::PositionBijection b = tilekit::PositionBijection::identity();
      for (int s = 0; s < k; ++s) b.to[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(perm[static_cast<std::size_t>(s)]);
      b.flip = static_cast<std::uint16_t>(flip);
      per_position.push_back(b);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<tilekit::CandidateMap> out;
  std::vector<int> sigma(static_cast<std::size_t>(d));
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
    for (;;) {
      tilekit::CandidateMap m;
      m.source = sigma;
      for (int i = 0; i < d; ++i) m.letters.push_back(per_position[idx[static_cast<std::size_t>(i)]]);
      out.push_back(std::move(m));
      int i = 0;
      while (i < d && ++idx[static_cast<std::size_t>(i)] == per_position.size()) idx[static_cast<std::size_t>(i++)] = 0;
      if (i == d) break;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

// Orbit of c under the full group, by direct image enumeration.
inline std::set<Code> orbit(const Code& c, const std::vector<tilekit::CandidateMap>& group) {
  std::set<Code> out;
  for (const auto& g : group) out.insert(g(c));
  return out;
}

// Every point of Z^d_m lies within max-metric distance r of exactly one center.
inline bool ball_partition(const tilekit::PerfectCode& p) {
  const int d = p.dim;
  const int m = p.modulus;
  std::vector<int> point(static_cast<std::size_t>(d), 0);
  for (;;) {
    int hits = 0;
    for (const auto& c : p.centers) {
      bool in = true;
      for (int i = 0; i < d && in; ++i) {
        const int diff = std::abs(c[static_cast<std::size_t>(i)] - point[static_cast<std::size_t>(i)]);
        in = std::min(diff, m - diff) <= p.radius;
      }
      hits += in;
    }
    if (hits != 1) return false;
    int i = 0;
    while (i < d && ++point[static_cast<std::size_t>(i)] == m) point[static_cast<std::size_t>(i++)] = 0;
    if (i == d) return true;
  }
}

// A random polybox code: words drawn at random and kept when dichotomous to
// all earlier ones.
inline Code random_polybox(int d, int pairs, int attempts, double star_rate, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> letter(0, 2 * pairs - 1);
  std::bernoulli_distribution star(star_rate);
  std::vector<Word> words;
  for (int t = 0; t < attempts; ++t) {
    std::vector<Letter> ls;
    for (int i = 0; i < d; ++i) {
      ls.push_back(star(rng) ? Letter::star() : Letter::from_rank(static_cast<std::uint8_t>(letter(rng))));
    }
    const Word w{std::span<const Letter>(ls)};
    if (std::all_of(words.begin(), words.end(), [&](const Word& x) { return tilekit::is_dichotomous(w, x); })) {
      words.push_back(w);
    }
  }
  return Code(d, std::move(words));
}

// Random element of the group over `pairs` pairs.
inline tilekit::CandidateMap random_map(int d, int pairs, std::mt19937_64& rng) {
  tilekit::CandidateMap m;
  m.source.resize(static_cast<std::size_t>(d));
  std::iota(m.source.begin(), m.source.end(), 0);
  std::shuffle(m.source.begin(), m.source.end(), rng);
  for (int i = 0; i < d; ++i) {
    tilekit::PositionBijection b = tilekit::PositionBijection::identity();
    std::vector<int> perm(static_cast<std::size_t>(pairs));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int s = 0; s < pairs; ++s) b.to[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(perm[static_cast<std::size_t>(s)]);
    b.flip = static_cast<std::uint16_t>(rng() & ((1u << pairs) - 1));
    m.letters.push_back(b);
  }
  return m;
}

}  // namespace oracle
