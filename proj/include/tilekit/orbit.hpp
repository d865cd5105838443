#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tilekit/code.hpp"

namespace tilekit {

using BigInt = boost::multiprecision::cpp_int;

/// Letters occurring at each position, in rank order.
std::vector<std::vector<Letter>> position_alphabets(const Code& c);
/// k_i = |S_i(V)| / 2.
std::vector<int> pair_counts(const Code& c);

/// Permutations σ with S_i(V) = S_σ(i)(V) whenever σ(i) ≠ i.
BigInt sigma_size(const Code& c);

struct OrbitStats {
  std::vector<int> k;
  BigInt sigma_size;
  BigInt stabilizer;  // maps of the minimal-orbit group fixing the code
  BigInt o_min;
  BigInt o_full;
  int k_alphabet = 0;
};

/// Orbit–stabilizer over {h∘σ̄ : σ ∈ Σ(V), h_i ∈ H_i(V)}.
BigInt minimal_orbit_size(const Code& c);
/// (d!/|Σ(V)|) ∏ C(k, k_i) |o_m(V)|; throws AlphabetTooSmall.
BigInt orbit_size(const Code& c, int k_alphabet);
OrbitStats orbit_stats(const Code& c, int k_alphabet);

BigInt factorial(int n);
BigInt binomial(int n, int k);
BigInt stirling2(int n, int k);
/// C_n = sum_{k=2..n} C(n,k) S(n,k) k!.
BigInt c_number(int n);
/// 2^{d-1} M_{d-1}^2 + M_{d-1} C_{2^{d-1}}.
BigInt layered_lower_bound(int d, const BigInt& m_prev);
/// d! (k! 2^k)^d.
BigInt group_order(int d, int k);

struct CountReport {
  std::size_t n = 0;
  BigInt m;      // sum of full orbits
  BigInt m_min;  // sum of minimal orbits
  std::map<BigInt, std::size_t> orbit_histogram;
  std::map<std::vector<int>, std::size_t> cylinder_histogram;  // sorted pair-count vectors
  std::map<int, std::size_t> letters_histogram;               // by largest pair count
  std::size_t laminations = 0;
  std::size_t balanced = 0;
};

/// Sum of the pair counts equals 2^d - 1.
bool is_lamination(const std::vector<int>& k);
/// All pair counts equal.
bool is_balanced(const std::vector<int>& k);

/// Folds per-representative statistics; throws IncompleteInput when two
/// representatives are isomorphic.
CountReport aggregate(std::span<const Code> representatives, int k_alphabet, int workers = 1);

/// CSV tables: "orbits" (o,N), "cylinders" (c,n,lamination,balanced), "letters" (k,count).
std::string report_csv(const CountReport& r, const std::string& table);

}  // namespace tilekit
