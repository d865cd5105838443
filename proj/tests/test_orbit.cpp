#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "tilekit/error.hpp"
#include "tilekit/orbit.hpp"
#include "tilekit/tiling_enum.hpp"

using namespace tilekit;
using oracle::code;

namespace {

// Images under the maps that permute positions with equal alphabets and
// permute or flip only the occurring pairs.
std::set<Code> minimal_orbit(const Code& c, const std::vector<CandidateMap>& group) {
  const auto alphabets = position_alphabets(c);
  std::set<Code> out;
  for (const auto& g : group) {
    bool ok = true;
    for (int i = 0; i < c.dim() && ok; ++i) {
      ok = alphabets[static_cast<std::size_t>(g.source[static_cast<std::size_t>(i)])] ==
           alphabets[static_cast<std::size_t>(i)];
      for (const Letter l : alphabets[static_cast<std::size_t>(i)]) {
        const Letter image = g.letters[static_cast<std::size_t>(i)](l);
        ok = ok && std::find(alphabets[static_cast<std::size_t>(i)].begin(),
                             alphabets[static_cast<std::size_t>(i)].end(),
                             image) != alphabets[static_cast<std::size_t>(i)].end();
      }
    }
    if (ok) out.insert(g(c));
  }
  return out;
}

}  // namespace

TEST_SUITE("orbit-count") {
  TEST_CASE("alphabets and pair counts") {
    const Code c = code("aa aA Ab AB");
    const auto a = position_alphabets(c);
    CHECK(a[0] == std::vector<Letter>{Letter::paired(1, false), Letter::paired(1, true)});
    CHECK(a[1].size() == 4);
    CHECK(pair_counts(c) == std::vector<int>{1, 2});
    CHECK(sigma_size(c) == 1);
    CHECK(sigma_size(code("aa aA Aa AA")) == 2);
  }

  TEST_CASE("simple codes") {
    const Code s2 = code("aa aA Aa AA");
    CHECK(orbit_size(s2, 2) == 4);
    CHECK(minimal_orbit_size(s2) == 1);
    std::vector<Word> words;
    for (int m = 0; m < 16; ++m) {
      std::vector<Letter> ls;
      for (int i = 3; i >= 0; --i) ls.push_back(Letter::paired(1, (m >> i) & 1));
      words.emplace_back(std::span<const Letter>(ls));
    }
    const Code s4(4, std::move(words));
    CHECK(orbit_size(s4, 8) == 4096);
    CHECK(minimal_orbit_size(s4) == 1);
    CHECK_THROWS_AS(orbit_size(code("aa aA Ab AB"), 1), AlphabetTooSmall);
  }

  TEST_CASE("brute-force orbits over the full group in dimension two") {
    const auto group = oracle::full_group(2, 2);
    REQUIRE(group.size() == 128);
    const auto classes = classify_tiling_codes(2, 2);
    REQUIRE(classes.size() == 2);
    for (const auto& cls : classes) {
      const Code& c = cls.representative;
      CHECK(orbit_size(c, 2) == oracle::orbit(c, group).size());
      CHECK(minimal_orbit_size(c) == minimal_orbit(c, group).size());
    }
  }

  TEST_CASE("brute-force orbits over the full group in dimension three") {
    const auto group = oracle::full_group(3, 2);
    for (const auto& cls : classify_tiling_codes(3, 2)) {
      const Code& c = cls.representative;
      CHECK(orbit_size(c, 2) == oracle::orbit(c, group).size());
      CHECK(minimal_orbit_size(c) == minimal_orbit(c, group).size());
    }
  }

  TEST_CASE("orbit sizes add up to the direct counts") {
    for (const auto& [d, expected] : {std::pair{2, 12}, std::pair{3, 744}}) {
      std::vector<Code> reps;
      for (const auto& c : classify_tiling_codes(d, 2)) reps.push_back(c.representative);
      const CountReport r = aggregate(reps, 2);
      CHECK(r.m == expected);
      CHECK(r.m == all_tiling_codes(d, 2).size());
      std::size_t histogram = 0;
      for (const auto& [o, n] : r.orbit_histogram) histogram += n;
      CHECK(histogram == r.n);
    }
  }

  TEST_CASE("orbit size grows with the alphabet, minimal orbit does not") {
    for (const auto& cls : classify_tiling_codes(3, 4)) {
      const Code& c = cls.representative;
      const auto k = pair_counts(c);
      const int needed = *std::max_element(k.begin(), k.end());
      BigInt prev = 0;
      for (int a = needed; a <= 6; ++a) {
        const OrbitStats s = orbit_stats(c, a);
        CHECK(s.o_full > prev);
        CHECK(s.o_min == minimal_orbit_size(c));
        prev = s.o_full;
      }
    }
  }

  TEST_CASE("aggregate rejects duplicate representatives") {
    const Code c = code("aa aA Ab AB");
    const std::vector<Code> twice{c, code("aa Aa bA BA")};
    CHECK_THROWS_AS(aggregate(twice, 2), IncompleteInput);
  }

  TEST_CASE("stirling numbers and related identities") {
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(5, 0) == 0);
    CHECK(c_number(4) == 252);
    // S(n, k) counts set partitions; compare with direct enumeration.
    for (int n = 1; n <= 7; ++n) {
      for (int k = 1; k <= n; ++k) {
        std::size_t count = 0;
        std::vector<int> rgs(static_cast<std::size_t>(n), 0);
        for (;;) {
          int blocks = 0;
          bool valid = true;
          for (int i = 0; i < n && valid; ++i) {
            valid = rgs[static_cast<std::size_t>(i)] <= blocks;
            blocks = std::max(blocks, rgs[static_cast<std::size_t>(i)] + 1);
          }
          count += valid && blocks == k;
          int i = n - 1;
          while (i >= 0 && ++rgs[static_cast<std::size_t>(i)] == n) rgs[static_cast<std::size_t>(i--)] = 0;
          if (i < 0) break;
        }
        CHECK(stirling2(n, k) == count);
      }
    }
  }

  TEST_CASE("group order") {
    CHECK(group_order(1, 1) == 2);
    CHECK(group_order(2, 2) == 128);
    CHECK(group_order(4, 8) == factorial(4) * boost::multiprecision::pow(factorial(8) * 256, 4));
  }

  TEST_CASE("layered lower bound in dimension two") {
    std::size_t layered = 0;
    for (const auto& c : all_tiling_codes(2, 2)) layered += is_layered(c).has_value();
    CHECK(layered_lower_bound(2, BigInt(all_tiling_codes(1, 2).size())) == layered);
  }

  TEST_CASE("laminations and balanced distributions") {
    CHECK(is_lamination({1, 3, 3}));
    CHECK(is_lamination({1, 2, 4}));
    CHECK_FALSE(is_lamination({2, 2, 2}));
    CHECK(is_balanced({2, 2, 2}));
    CHECK_FALSE(is_balanced({1, 2, 2}));
    std::vector<Code> reps;
    for (const auto& c : classify_tiling_codes(3, 4)) reps.push_back(c.representative);
    const CountReport r = aggregate(reps, 4);
    CHECK(r.n == 17);
    std::size_t letters = 0;
    for (const auto& [k, n] : r.letters_histogram) letters += n;
    CHECK(letters == 17);
    CHECK(report_csv(r, "letters").rfind("k,count\n", 0) == 0);
    CHECK_THROWS_AS(report_csv(r, "nope"), Error);
  }
}
