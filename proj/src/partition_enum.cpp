#include "tilekit/partition_enum.hpp"

#include <algorithm>
#include <bitset>
#include <map>

#include "tilekit/error.hpp"
#include "tilekit/parallel.hpp"
#include "tilekit/text_format.hpp"

namespace tilekit {

namespace {

constexpr int kDim = 4;
constexpr int kPairs = 2;
constexpr std::size_t kUniverse = 624;  // words over {a,A,b,B,*}^4 with at most 3 stars

void compositions_rec(int i, int d, int remaining_measure, int remaining_words, StarComposition& cur,
                      std::vector<StarComposition>& out) {
  if (i < 0) {
    if (remaining_measure == 0 && remaining_words == 0) out.push_back(cur);
    return;
  }
  const int unit = 1 << i;
  for (int x = std::min(remaining_words, remaining_measure / unit); x >= 0; --x) {
    cur[static_cast<std::size_t>(i)] = x;
    compositions_rec(i - 1, d, remaining_measure - x * unit, remaining_words - x, cur, out);
  }
  cur[static_cast<std::size_t>(i)] = 0;
}

void words_rec(int pos, int d, int stars_left, int pairs, std::vector<Letter>& cur, std::vector<Word>& out) {
  if (pos == d) {
    if (stars_left == 0) out.push_back(Word(std::span<const Letter>(cur)));
    return;
  }
  if (d - pos > stars_left) {
    for (int r = 0; r < 2 * pairs; ++r) {
      cur[static_cast<std::size_t>(pos)] = Letter::from_rank(static_cast<std::uint8_t>(r));
      words_rec(pos + 1, d, stars_left, pairs, cur, out);
    }
  }
  if (stars_left > 0) {
    cur[static_cast<std::size_t>(pos)] = Letter::star();
    words_rec(pos + 1, d, stars_left - 1, pairs, cur, out);
  }
}

bool compatible(const Word& v, const Word& u) { return is_dichotomous(v, u) && !twin_position(v, u); }

using Mask = std::bitset<kUniverse>;

struct Universe {
  std::vector<Word> words;
  std::vector<int> star_class;
  std::vector<Mask> compat;
  std::vector<Mask> class_mask;

  Universe() {
    for (int s = 0; s < kDim; ++s) {
      for (const auto& w : words_with_stars(s, kPairs, kDim)) {
        words.push_back(w);
        star_class.push_back(s);
      }
    }
    if (words.size() != kUniverse) throw Error("unexpected word universe size");
    compat.resize(kUniverse);
    class_mask.resize(kDim);
    for (std::size_t x = 0; x < kUniverse; ++x) {
      class_mask[static_cast<std::size_t>(star_class[x])].set(x);
      for (std::size_t y = 0; y < kUniverse; ++y) {
        if (compatible(words[x], words[y])) compat[x].set(y);
      }
    }
  }

  std::size_t index(const Word& w) const {
    return static_cast<std::size_t>(std::lower_bound(words.begin(), words.end(), w,
                                                     [&](const Word& a, const Word& b) {
                                                       return std::make_pair(a.star_count(), a) <
                                                              std::make_pair(b.star_count(), b);
                                                     }) -
                                    words.begin());
  }
};

const Universe& universe() {
  static const Universe u;
  return u;
}

// Fills the slots listed in `slots` (star classes, nondecreasing) in order;
// within a class the chosen word indices increase.
class SeededSearch {
 public:
  SeededSearch(const Code& seed, std::vector<int> slots) : slots_(std::move(slots)) {
    const auto& u = universe();
    candidates_.set();
    for (const auto& w : seed) {
      const std::size_t i = u.index(w);
      chosen_.push_back(i);
      candidates_ &= u.compat[i];
    }
  }

  std::vector<Code> run() {
    search(0, 0, candidates_);
    return std::move(found_);
  }

 private:
  bool feasible(std::size_t slot, const Mask& cand, std::size_t floor) const {
    const auto& u = universe();
    std::size_t j = slot;
    while (j < slots_.size()) {
      const int cls = slots_[j];
      std::size_t need = 0;
      while (j < slots_.size() && slots_[j] == cls) {
        ++need;
        ++j;
      }
      Mask m = cand & u.class_mask[static_cast<std::size_t>(cls)];
      if (slot < slots_.size() && cls == slots_[slot]) {
        for (std::size_t x = 0; x < floor; ++x) m.reset(x);
      }
      if (m.count() < need) return false;
    }
    return true;
  }

  void search(std::size_t slot, std::size_t floor, const Mask& cand) {
    const auto& u = universe();
    if (slot == slots_.size()) {
      std::vector<Word> words;
      for (std::size_t i : chosen_) words.push_back(u.words[i]);
      found_.emplace_back(kDim, std::move(words));
      return;
    }
    if (!feasible(slot, cand, floor)) return;
    const int cls = slots_[slot];
    const Mask m = cand & u.class_mask[static_cast<std::size_t>(cls)];
    for (std::size_t x = floor; x < kUniverse; ++x) {
      if (!m.test(x)) continue;
      chosen_.push_back(x);
      const bool same_next = slot + 1 < slots_.size() && slots_[slot + 1] == cls;
      search(slot + 1, same_next ? x + 1 : 0, cand & u.compat[x]);
      chosen_.pop_back();
    }
  }

  std::vector<int> slots_;
  Mask candidates_;
  std::vector<std::size_t> chosen_;
  std::vector<Code> found_;
};

}  // namespace

std::vector<StarComposition> compositions(int k, int d) {
  std::vector<StarComposition> out;
  if (k < 1 || d < 1) return out;
  StarComposition cur(static_cast<std::size_t>(d), 0);
  compositions_rec(d - 1, d, 1 << d, k, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> words_with_stars(int star_count, int pairs, int d) {
  std::vector<Word> out;
  if (star_count < 0 || star_count > d) return out;
  std::vector<Letter> cur(static_cast<std::size_t>(d));
  words_rec(0, d, star_count, pairs, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

Code proper_seed() { return parse_code("aaaa\nAAAa\n"); }
Code starred_seed() { return parse_code("aaa*\nAAA*\n"); }

std::vector<Code> enumerate_k(int k, int workers) {
  if (k < 2) return {};
  struct Task {
    Code seed;
    std::vector<int> slots;
  };
  std::vector<Task> tasks;
  for (const auto& x : compositions(k, kDim)) {
    for (int seed_class = 0; seed_class < 2; ++seed_class) {
      if (x[static_cast<std::size_t>(seed_class)] < 2) continue;
      std::vector<int> slots;
      for (int s = 0; s < kDim; ++s) {
        const int count = x[static_cast<std::size_t>(s)] - (s == seed_class ? 2 : 0);
        for (int j = 0; j < count; ++j) slots.push_back(s);
      }
      tasks.push_back({seed_class == 0 ? proper_seed() : starred_seed(), std::move(slots)});
    }
  }
  std::vector<std::vector<Code>> results(tasks.size());
  parallel_for(tasks.size(), workers,
               [&](std::size_t i) { results[i] = SeededSearch(tasks[i].seed, tasks[i].slots).run(); });
  std::vector<Code> out;
  for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<IsoClass> all_twin_pair_free(int workers) {
  std::vector<Code> family;
  for (int k = 2; k <= 16; ++k) {
    auto codes = enumerate_k(k, workers);
    family.insert(family.end(), codes.begin(), codes.end());
  }
  auto classes = classify(family, workers);
  const std::string layered = canonical_key(layered_partition_code());
  std::erase_if(classes, [&](const IsoClass& c) { return c.key == layered; });
  return classes;
}

std::vector<std::pair<std::string, Code>> reference_twin_pair_free_codes() {
  static const char* const kCodes[] = {
      "a*aa a**A A*a* A*AA **Aa",
      "aaAa aa*A AaaA AaA* *aaa *A**",
      "a*aA a**a AaaA Aa*a AAa* AAAa **AA",
      "aaaA a*A* AaAa Aa*A AAA* *AaA **aa",
      "aa*A aAA* a*aa Aaa* AA*a A*AA *aAa *AaA",
      "aaaa aaA* aA*A Aa*a AAaA A*AA *aaA *A*a",
      "aaaa aAAA aA*a a*aA AaaA AAAa AA*A A*aa *aA*",
      "aaaa aA*a AAAa A*aa *aA* bAAA b*aA BaaA BA*A",
      "aaaa aA*a a**A AAAa Abaa Ab*A ABa* ABAA *aAa",
      "aaaa a*Aa Aa*a AAAa ba*A bAa* bAAA BAaa B**A",
      "aaaa aa*A aAAb aA*B Aaab AAAa A*aB A*AA *aAa *Aab",
      "aaaa a*Aa Aa*a AAAa *Aaa *baA b*AA bBaA BbAA BB*A",
      "aaaa a*Aa Aa*a AAAa *Aaa *AAA ba*A bAaA BaAA B*aA",
      "aaaa a*Aa ab*A aBBA Aa*a AAAa A*BA AbbA *Aaa *BbA",
      "aaaa a*Aa Aa*a AAAa *Aaa *bBA b*bA bBBA BbbA BB*A",
      "aaaa aaAb aAA* a*aA AaaB Aa*b AAAa AA*A *aAB *Aaa",
      "aaaa aAaA aA*a a*AA AaAA AAAa AA*A A*aa *aaA *aAa",
      "aaaa a*Aa abaA aB*A Aa*a AAAa A*aA ABAA *Aaa *bAA",
      "aaaa aaBA aAba aAB* abbA AAAa A*aa Ab*A ABBA *aAa *BbA",
      "aaaa aabA aAb* aABa aBBA AAAa Abaa AbbA ABa* ABAA *aAa *bBA",
  };
  std::vector<std::pair<std::string, Code>> out;
  int i = 1;
  for (const char* text : kCodes) {
    std::string lines(text);
    std::replace(lines.begin(), lines.end(), ' ', '\n');
    out.emplace_back("C" + std::to_string(i++), parse_code(lines));
  }
  return out;
}

Code layered_partition_code() { return parse_code("a***\nA***\n"); }

}  // namespace tilekit
