#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "tilekit/glue_cut.hpp"
#include "tilekit/atoms.hpp"
#include "tilekit/partition_enum.hpp"

using namespace tilekit;
using oracle::code;

namespace {

std::uint64_t binom(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// Two words equal at one position and complementary, non-star, at all others.
bool has_parity_pair(const Code& c) {
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t b = a + 1; b < c.size(); ++b) {
      for (int i = 0; i < c.dim(); ++i) {
        bool ok = c[a][i] == c[b][i];
        for (int j = 0; j < c.dim() && ok; ++j) {
          if (j != i) ok = !c[a][j].is_star() && c[a][j] == c[b][j].complement();
        }
        if (ok) return true;
      }
    }
  }
  return false;
}

}  // namespace

TEST_SUITE("partition-enum") {
  TEST_CASE("star compositions") {
    CHECK(compositions(16, 4) == std::vector<StarComposition>{{16, 0, 0, 0}});
    auto five = compositions(5, 4);
    std::sort(five.begin(), five.end());
    std::vector<StarComposition> expected{{2, 1, 1, 1}, {0, 4, 0, 1}, {0, 2, 3, 0}};
    std::sort(expected.begin(), expected.end());
    CHECK(five == expected);
    CHECK(compositions(2, 4) == std::vector<StarComposition>{{0, 0, 0, 2}});
    for (int k = 2; k <= 16; ++k) {
      for (const auto& x : compositions(k, 4)) {
        int sum = 0;
        int measure = 0;
        for (int i = 0; i < 4; ++i) {
          sum += x[static_cast<std::size_t>(i)];
          measure += x[static_cast<std::size_t>(i)] << i;
        }
        CHECK(sum == k);
        CHECK(measure == 16);
      }
    }
  }

  TEST_CASE("words with a given number of stars") {
    CHECK(Code(2, words_with_stars(0, 1, 2)) == code("aa aA Aa AA"));
    CHECK(Code(2, words_with_stars(1, 1, 2)) == code("a* A* *a *A"));
    for (int i = 0; i < 4; ++i) {
      std::uint64_t expected = binom(4, i);
      for (int j = 0; j < 4 - i; ++j) expected *= 4;
      CHECK(words_with_stars(i, 2, 4).size() == expected);
    }
  }

  TEST_CASE("seeds") {
    CHECK(proper_seed() == code("aaaa AAAa"));
    CHECK(starred_seed() == code("aaa* AAA*"));
    CHECK(is_polybox(proper_seed()));
    CHECK(is_polybox(starred_seed()));
  }

  TEST_CASE("enumerated codes are twin-pair-free partition codes") {
    for (int k : {2, 5, 6, 7}) {
      const auto codes = enumerate_k(k);
      CHECK(std::is_sorted(codes.begin(), codes.end()));
      for (const auto& c : codes) {
        CHECK(c.size() == static_cast<std::size_t>(k));
        CHECK(is_polybox(c));
        CHECK(find_twin_pairs(c).empty());
        CHECK(measure_sum(c) == 16);
        CHECK((c.contains(parse_word("aaaa")) && c.contains(parse_word("AAAa"))) !=
              (c.contains(parse_word("aaa*")) && c.contains(parse_word("AAA*"))));
      }
    }
    CHECK(enumerate_k(2).empty());
  }

  TEST_CASE("the five-word level contains the first reference code") {
    const std::string key = canonical_key(reference_twin_pair_free_codes().front().second);
    const auto codes = enumerate_k(5);
    CHECK(std::any_of(codes.begin(), codes.end(), [&](const Code& c) { return canonical_key(c) == key; }));
  }

  TEST_CASE("reference codes") {
    const auto refs = reference_twin_pair_free_codes();
    REQUIRE(refs.size() == 20);
    std::vector<std::string> keys;
    std::size_t layered = 0;
    for (const auto& [name, c] : refs) {
      CAPTURE(name);
      CHECK(c.dim() == 4);
      CHECK(is_partition_code(c));
      CHECK(find_twin_pairs(c).empty());
      CHECK(c.max_pair_index() <= 2);
      CHECK(has_parity_pair(c));
      keys.push_back(canonical_key(c));
      layered += is_layered(c).has_value();
    }
    std::sort(keys.begin(), keys.end());
    CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
    CHECK(layered == 7);
    for (int i : {2, 12, 13, 14, 15, 17, 18}) CHECK(is_layered(refs[static_cast<std::size_t>(i - 1)].second));
  }

  TEST_CASE("cylindrical invariant on every enumerated partition code") {
    for (int k : {5, 6, 7, 8}) {
      for (const auto& c : enumerate_k(k)) {
        for (int i = 0; i < 4; ++i) {
          for (int p = 1; p <= 2; ++p) {
            const Letter l = Letter::paired(p, false);
            CHECK(equivalent(project(subcode(c, i, l), i), project(subcode(c, i, l.complement()), i)));
          }
        }
      }
    }
  }
}
