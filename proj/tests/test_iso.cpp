#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "tilekit/error.hpp"
#include "tilekit/iso.hpp"
#include "tilekit/partition_enum.hpp"
#include "tilekit/tiling_enum.hpp"

using namespace tilekit;
using oracle::code;

namespace {

const Code& example_v() {
  static const Code c =
      code("acaa acAa adaA aCda aCDa aDaA AaaA Aaca AaCa AAab AAaB AAAa beAA bEAA BdAA BDAA");
  return c;
}

const Code& example_v_bar() {
  static const Code c =
      code("aaab aaAb aAac aabB aaBB aAaC AAaa Aaca AaCa AbaA ABaA AaAA bAAd bAAD BAAc BAAC");
  return c;
}

const std::vector<IsoClass>& n4_two_pairs() {
  static const auto classes = classify_tiling_codes(4, 2);
  return classes;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_SUITE("iso-classify") {
  TEST_CASE("matrix profile and compressed form") {
    REQUIRE(is_cube_tiling_code(example_v()));
    REQUIRE(is_cube_tiling_code(example_v_bar()));
    const MatrixProfile p = matrix_profile(example_v_bar());
    CHECK(has_compressed_form(p));
    using E = MatrixProfile::Entry;
    CHECK(p.normalized_row(0) == std::vector<E>{{6, 6}, {2, 2}});
    CHECK(p.normalized_row(1) == std::vector<E>{{7, 7}, {1, 1}});
    CHECK(p.normalized_row(2) == std::vector<E>{{6, 6}, {1, 1}, {1, 1}});
    CHECK(p.normalized_row(3) == std::vector<E>{{3, 3}, {2, 2}, {2, 2}, {1, 1}});
    CHECK_FALSE(has_compressed_form(matrix_profile(example_v())));
  }

  TEST_CASE("compress") {
    const auto [c, map] = compress(example_v());
    CHECK(map(example_v()) == c);
    const MatrixProfile p = matrix_profile(c);
    CHECK(has_compressed_form(p));
    CHECK(p.normalized_row(0) == std::vector<MatrixProfile::Entry>{{6, 6}, {2, 2}});
    CHECK(profile_equal(p, matrix_profile(example_v_bar())));

    const auto [same, id] = compress(example_v_bar());
    CHECK(same == example_v_bar());
    CHECK(id == CandidateMap::identity(4));
    const Code simple = code("aa aA Aa AA");
    CHECK(compress(simple).first == simple);
    const auto [twice, unused] = compress(c);
    CHECK(twice == c);
  }

  TEST_CASE("profile equality") {
    CHECK(profile_equal(matrix_profile(example_v()), matrix_profile(example_v_bar())));
    CHECK_FALSE(profile_equal(matrix_profile(code("aa aA Aa AA")), matrix_profile(code("aa aA Ab AB"))));
    CHECK_THROWS_AS(profile_equal(matrix_profile(code("aa aA Aa AA")), matrix_profile(code("a A"))), ShapeMismatch);
  }

  TEST_CASE("twin vectors") {
    CHECK(twin_vector(code("aa aA Aa AA")) == std::vector<int>{2, 2});
    CHECK(twin_vector(reference_twin_pair_free_codes().front().second) == std::vector<int>{0, 0, 0, 0});
  }

  TEST_CASE("the worked example is isomorphic with a verified witness") {
    const auto w = isomorphic(example_v(), example_v_bar());
    REQUIRE(w);
    CHECK((*w)(example_v()) == example_v_bar());
  }

  TEST_CASE("random images are recognized") {
    std::mt19937_64 rng(99);
    const auto corpus = all_tiling_codes(3, 2);
    for (int t = 0; t < 300; ++t) {
      const Code& c = corpus[rng() % corpus.size()];
      const Code image = oracle::random_map(3, 4, rng)(c);
      const auto w = isomorphic(c, image);
      REQUIRE(w);
      CHECK((*w)(c) == image);
      CHECK(canonical_key(c) == canonical_key(image));
      CHECK(profile_equal(matrix_profile(c), matrix_profile(image)));
      CHECK(sorted(twin_vector(c)) == sorted(twin_vector(image)));
    }
    const auto& classes = n4_two_pairs();
    for (int t = 0; t < 60; ++t) {
      const Code& c = classes[rng() % classes.size()].representative;
      const Code image = oracle::random_map(4, 8, rng)(c);
      const auto w = isomorphic(image, c);
      REQUIRE(w);
      CHECK((*w)(image) == c);
    }
  }

  TEST_CASE("canonical keys agree with brute-force orbits in dimension three") {
    const auto group = oracle::full_group(3, 2);
    REQUIRE(group.size() == 3072);
    const auto corpus = all_tiling_codes(3, 2);
    std::map<Code, Code> orbit_min;
    for (const auto& c : corpus) {
      if (orbit_min.contains(c)) continue;
      const auto orbit = oracle::orbit(c, group);
      for (const auto& x : orbit) orbit_min[x] = *orbit.begin();
    }
    std::map<std::string, std::set<Code>> by_key;
    std::map<Code, std::set<std::string>> by_orbit;
    for (const auto& c : corpus) {
      const std::string k = canonical_key(c);
      by_key[k].insert(orbit_min.at(c));
      by_orbit[orbit_min.at(c)].insert(k);
    }
    CHECK(by_key.size() == 9);
    CHECK(by_orbit.size() == 9);
    for (const auto& [k, orbits] : by_key) CHECK(orbits.size() == 1);
    for (const auto& [o, keys] : by_orbit) CHECK(keys.size() == 1);
  }

  TEST_CASE("isomorphic agrees with canonical keys on class representatives") {
    const auto n3 = classify_tiling_codes(3, 4);
    REQUIRE(n3.size() == 17);
    for (std::size_t i = 0; i < n3.size(); ++i) {
      for (std::size_t j = 0; j < n3.size(); ++j) {
        const auto w = isomorphic(n3[i].representative, n3[j].representative);
        CHECK(w.has_value() == (i == j));
      }
    }
    std::set<std::string> keys;
    for (const auto& c : n3) keys.insert(c.key);
    CHECK(keys.size() == 17);
  }

  TEST_CASE("profile and twin vector are necessary but not sufficient") {
    std::vector<Code> reps;
    for (const auto& c : n4_two_pairs()) reps.push_back(c.representative);
    std::size_t gated_pairs = 0;
    std::size_t counterexamples = 0;
    for (std::size_t i = 0; i < reps.size() && counterexamples < 3; ++i) {
      for (std::size_t j = i + 1; j < reps.size() && counterexamples < 3; ++j) {
        if (!profile_equal(matrix_profile(reps[i]), matrix_profile(reps[j]))) continue;
        if (sorted(twin_vector(reps[i])) != sorted(twin_vector(reps[j]))) continue;
        ++gated_pairs;
        if (!isomorphic(reps[i], reps[j])) ++counterexamples;
      }
    }
    CHECK(gated_pairs > 0);
    CHECK(counterexamples > 0);
  }

  TEST_CASE("classification of small corpora") {
    const auto corpus = all_tiling_codes(3, 2);
    const auto classes = classify(corpus);
    CHECK(classes.size() == 9);
    std::size_t total = 0;
    for (const auto& c : classes) {
      total += c.multiplicity;
      CHECK(canonical_key(c.representative) == c.key);
      CHECK(canonical_form(c.representative).code == c.representative);
    }
    CHECK(total == corpus.size());
    CHECK(classify(all_tiling_codes(2, 2)).size() == 2);
    CHECK(classify_tiling_codes(1, 1).size() == 1);
    CHECK(classify_tiling_codes(2, 2).size() == 2);
    CHECK(classify_tiling_codes(3, 2).size() == 9);
  }

  TEST_CASE("classification does not depend on worker count") {
    const auto corpus = all_tiling_codes(3, 2);
    const auto one = classify(corpus, 1);
    const auto four = classify(corpus, 4);
    REQUIRE(one.size() == four.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
      CHECK(one[i].key == four[i].key);
      CHECK(one[i].multiplicity == four[i].multiplicity);
    }
  }
}
