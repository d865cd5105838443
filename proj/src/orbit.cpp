#include "tilekit/orbit.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "tilekit/error.hpp"
#include "tilekit/iso.hpp"
#include "tilekit/parallel.hpp"

namespace tilekit {

std::vector<std::vector<Letter>> position_alphabets(const Code& c) {
  std::vector<std::set<Letter>> sets(static_cast<std::size_t>(c.dim()));
  for (const auto& w : c) {
    for (int i = 0; i < c.dim(); ++i) {
      if (!w[i].is_star()) sets[static_cast<std::size_t>(i)].insert(w[i]);
    }
  }
  std::vector<std::vector<Letter>> out;
  for (const auto& s : sets) out.emplace_back(s.begin(), s.end());
  return out;
}

std::vector<int> pair_counts(const Code& c) {
  std::vector<int> k;
  for (auto mask : position_pair_masks(c)) k.push_back(std::popcount(static_cast<unsigned>(mask)));
  return k;
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt sigma_size(const Code& c) {
  const auto alphabets = position_alphabets(c);
  std::map<std::vector<Letter>, int> groups;
  for (const auto& a : alphabets) ++groups[a];
  BigInt r = 1;
  for (const auto& [a, n] : groups) r *= factorial(n);
  return r;
}

namespace {

BigInt minimal_group_order(const Code& c, const BigInt& sigma) {
  BigInt r = sigma;
  for (int k : pair_counts(c)) r *= factorial(k) * (BigInt(1) << k);
  return r;
}

BigInt stabilizer_size(const Code& c) {
  const auto alphabets = position_alphabets(c);
  const auto form = canonical_form(c, true);
  BigInt n = 0;
  for (const auto& a : form.automorphisms) {
    bool admissible = true;
    for (int i = 0; i < c.dim() && admissible; ++i) {
      admissible = alphabets[static_cast<std::size_t>(a.source[static_cast<std::size_t>(i)])] ==
                   alphabets[static_cast<std::size_t>(i)];
    }
    if (admissible) ++n;
  }
  return n;
}

}  // namespace

OrbitStats orbit_stats(const Code& c, int k_alphabet) {
  OrbitStats s;
  s.k = pair_counts(c);
  s.k_alphabet = k_alphabet;
  const int needed = s.k.empty() ? 0 : *std::max_element(s.k.begin(), s.k.end());
  if (k_alphabet < needed) throw AlphabetTooSmall(needed, k_alphabet);
  s.sigma_size = sigma_size(c);
  s.stabilizer = stabilizer_size(c);
  const BigInt group = minimal_group_order(c, s.sigma_size);
  if (s.stabilizer == 0 || group % s.stabilizer != 0) throw Error("stabilizer does not divide the group order");
  s.o_min = group / s.stabilizer;
  s.o_full = factorial(c.dim()) / s.sigma_size * s.o_min;
  for (int k : s.k) s.o_full *= binomial(k_alphabet, k);
  return s;
}

BigInt minimal_orbit_size(const Code& c) {
  const BigInt sigma = sigma_size(c);
  return minimal_group_order(c, sigma) / stabilizer_size(c);
}

BigInt orbit_size(const Code& c, int k_alphabet) { return orbit_stats(c, k_alphabet).o_full; }

BigInt stirling2(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  std::vector<BigInt> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, k); j >= 1; --j) {
      row[static_cast<std::size_t>(j)] = j * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j) - 1];
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

BigInt c_number(int n) {
  BigInt r = 0;
  for (int k = 2; k <= n; ++k) r += binomial(n, k) * stirling2(n, k) * factorial(k);
  return r;
}

BigInt layered_lower_bound(int d, const BigInt& m_prev) {
  if (d < 2) throw Error("dimension must be at least 2");
  const int half = 1 << (d - 1);
  return half * m_prev * m_prev + m_prev * c_number(half);
}

BigInt group_order(int d, int k) {
  BigInt per_position = factorial(k) * (BigInt(1) << k);
  BigInt r = factorial(d);
  for (int i = 0; i < d; ++i) r *= per_position;
  return r;
}

bool is_lamination(const std::vector<int>& k) {
  int sum = 0;
  for (int x : k) sum += x;
  return !k.empty() && sum == (1 << k.size()) - 1;
}

bool is_balanced(const std::vector<int>& k) {
  return !k.empty() && std::all_of(k.begin(), k.end(), [&](int x) { return x == k.front(); });
}

CountReport aggregate(std::span<const Code> representatives, int k_alphabet, int workers) {
  std::vector<OrbitStats> stats(representatives.size());
  std::vector<std::string> keys(representatives.size());
  parallel_for(representatives.size(), workers, [&](std::size_t i) {
    keys[i] = canonical_key(representatives[i]);
    stats[i] = orbit_stats(representatives[i], k_alphabet);
  });
  std::set<std::string> seen;
  for (const auto& k : keys) {
    if (!seen.insert(k).second) throw IncompleteInput("duplicate representative: " + k);
  }
  CountReport r;
  r.n = representatives.size();
  for (const auto& s : stats) {
    r.m += s.o_full;
    r.m_min += s.o_min;
    ++r.orbit_histogram[s.o_full];
    std::vector<int> c = s.k;
    std::sort(c.begin(), c.end());
    ++r.cylinder_histogram[c];
    ++r.letters_histogram[c.empty() ? 0 : c.back()];
    r.laminations += is_lamination(c);
    r.balanced += is_balanced(c);
  }
  return r;
}

std::string report_csv(const CountReport& r, const std::string& table) {
  std::ostringstream out;
  if (table == "orbits") {
    out << "o,N\n";
    for (const auto& [o, n] : r.orbit_histogram) out << o << ',' << n << '\n';
  } else if (table == "cylinders") {
    out << "c,n,lamination,balanced\n";
    for (const auto& [c, n] : r.cylinder_histogram) {
      out << "\"(";
      for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
      out << ")\"," << n << ',' << (is_lamination(c) ? 1 : 0) << ',' << (is_balanced(c) ? 1 : 0) << '\n';
    }
  } else if (table == "letters") {
    out << "k,count\n";
    for (const auto& [k, n] : r.letters_histogram) out << k << ',' << n << '\n';
  } else {
    throw Error("unknown report table: " + table);
  }
  return out.str();
}

}  // namespace tilekit
