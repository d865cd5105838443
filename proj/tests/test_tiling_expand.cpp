#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "oracles.hpp"
#include "tilekit/atoms.hpp"
#include "tilekit/error.hpp"
#include "tilekit/glue_cut.hpp"
#include "tilekit/partition_enum.hpp"
#include "tilekit/tiling_enum.hpp"
#include "tilekit/tiling_expand.hpp"

using namespace tilekit;
using oracle::code;

namespace {

bool contains(const std::vector<Code>& family, const Code& c) {
  return std::find(family.begin(), family.end(), c) != family.end();
}

}  // namespace

TEST_SUITE("tiling-expand") {
  TEST_CASE("tiling code counts in low dimension") {
    CHECK(all_tiling_codes(1, 2).size() == 2);
    CHECK(all_tiling_codes(2, 2).size() == 12);
    CHECK(all_tiling_codes(3, 2).size() == 744);
    for (const auto& c : all_tiling_codes(2, 3)) CHECK(is_cube_tiling_code(c));
  }

  TEST_CASE("single-star expansions") {
    CHECK(star_expansions(parse_word("*aAa"), {3}) == std::vector<Code>{code("caAa CaAa")});
    CHECK(star_expansions(parse_word("a*Aa"), {2}) == std::vector<Code>{code("abAa aBAa")});
    CHECK_THROWS_AS(star_expansions(parse_word("a*"), {}), EmptySupply);
    CHECK(star_expansions(parse_word("aa"), {1}) == std::vector<Code>{code("aa")});
  }

  TEST_CASE("three-star expansions cover both substitution schemas") {
    const auto all = star_expansions(parse_word("a***"), {2, 3});
    CHECK(all.size() == 744);
    for (const auto& pattern : {code("ab** aB**"), code("abbb aBBB a*bB aB*b abB*")}) {
      REQUIRE(equivalent(pattern, code("a***")));
      for (const auto& e : expand_code(pattern, {2, 3})) CHECK(contains(all, e));
    }
  }

  TEST_CASE("expansions are equivalent tiling codes") {
    std::mt19937_64 rng(7);
    for (const auto& [name, c] : reference_twin_pair_free_codes()) {
      std::vector<std::vector<Code>> options;
      for (const auto& w : c) options.push_back(star_expansions(w, {1, 2}));
      for (int t = 0; t < 20; ++t) {
        std::vector<Word> words;
        for (const auto& o : options) {
          const Code& pick = o[rng() % o.size()];
          words.insert(words.end(), pick.begin(), pick.end());
        }
        const Code e(4, std::move(words));
        CAPTURE(name);
        CHECK(is_cube_tiling_code(e));
        CHECK(equivalent(e, c));
      }
    }
    const Code proper = code("aa aA Ab AB");
    CHECK(expand_code(proper, {1}) == std::vector<Code>{proper});
  }

  TEST_CASE("general form on the plane of the tenth reference code") {
    const Code c10 = reference_twin_pair_free_codes().at(9).second;
    const Code v = code("aaaa abAa aBAa Aaaa AaAa AAAa babA baBA bAaa bAaA bAAA BAaa BabA BAbA BaBA BABA");
    REQUIRE(is_cube_tiling_code(v));
    CHECK(contains(expand_code(c10, {1, 2}), v));
  }

  TEST_CASE("a single fresh pair expansion reduces back to its source") {
    for (const auto& [name, c] : reference_twin_pair_free_codes()) {
      const auto e = expand_code(c, {3});
      REQUIRE(e.size() == 1);
      CAPTURE(name);
      CHECK(reduce(e.front()) == c);
    }
  }

  TEST_CASE("cylinder extension") {
    const CodePartition v{{code("a A")}};
    CHECK(cylinder_extend(v, v, {2}) == code("ab Ab aB AB"));

    const Code simple = code("aaa aaA aAa aAA Aaa AaA AAa AAA");
    const CodePartition left{{code("aaa aaA"), code("aAa aAA Aaa AaA AAa AAA")}};
    const CodePartition right{{code("aab aaB"), code("aAa aAA Aaa AaA AAa AAA")}};
    const Code u = cylinder_extend(left, right, {1, 2});
    CHECK(is_cube_tiling_code(u));
    CHECK(equivalent(project(subcode(u, 3, Letter::paired(1, false)), 3), left.blocks[0]));
    CHECK(equivalent(project(subcode(u, 3, Letter::paired(1, true)), 3), right.blocks[0]));
    CHECK(equivalent(project(subcode(u, 3, Letter::paired(2, false)), 3), left.blocks[1]));

    const CodePartition wrong{{code("aAa aAA"), code("aaa aaA Aaa AaA AAa AAA")}};
    try {
      cylinder_extend(left, wrong, {1, 2});
      FAIL("expected BlocksNotEquivalent");
    } catch (const BlocksNotEquivalent& e) {
      CHECK(e.block() == 0);
    }
    CHECK(simple.size() == 8);
  }

  TEST_CASE("eight-block extensions carry eight pairs at the new position") {
    const auto n3 = classify_tiling_codes(3, 4);
    REQUIRE(n3.size() == 17);
    for (const auto& u : build_N48([&] {
           std::vector<Code> reps;
           for (const auto& c : n3) reps.push_back(c.representative);
           return reps;
         }())) {
      CHECK(is_cube_tiling_code(u));
      const auto k = position_pair_masks(u);
      CHECK(std::popcount(static_cast<unsigned>(k[3])) == 8);
    }
  }

  TEST_CASE("seven-block families never share a class") {
    std::vector<Code> reps;
    for (const auto& c : classify_tiling_codes(3, 4)) reps.push_back(c.representative);
    const auto fam = build_N47_families(reps);
    std::set<std::string> a;
    std::set<std::string> b;
    for (const auto& c : fam.a) a.insert(canonical_key(c));
    for (const auto& c : fam.b) b.insert(canonical_key(c));
    CHECK(!a.empty());
    CHECK(!b.empty());
    for (const auto& k : a) CHECK_FALSE(b.contains(k));
  }
}
