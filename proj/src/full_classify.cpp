#include "tilekit/full_classify.hpp"

#include <algorithm>
#include <bit>
#include <mutex>

#include "tilekit/error.hpp"
#include "tilekit/parallel.hpp"
#include "tilekit/text_format.hpp"
#include "tilekit/tiling_enum.hpp"

namespace tilekit {

namespace {

void growth_strings(int n, int k, std::vector<int>& cur, int used, std::vector<std::vector<int>>& out) {
  const int pos = static_cast<int>(cur.size());
  if (pos == n) {
    if (used == k) out.push_back(cur);
    return;
  }
  if (k - used > n - pos) return;
  for (int b = 0; b <= std::min(used, k - 1); ++b) {
    cur.push_back(b);
    growth_strings(n, k, cur, std::max(used, b + 1), out);
    cur.pop_back();
  }
}

int max_pairs(const Code& c) {
  int m = 0;
  for (auto mask : position_pair_masks(c)) m = std::max(m, std::popcount(static_cast<unsigned>(mask)));
  return m;
}

}  // namespace

std::vector<std::vector<int>> set_partitions(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (k >= 1 && k <= n) growth_strings(n, k, cur, 0, out);
  return out;
}

std::vector<LevelResult> classify_by_cylinders(const CylinderClassifyOptions& options) {
  const int d = options.dim;
  if (d < 2 || d > 5) throw Error("cylinder classification supports dimensions 2..5");
  const int lower_pairs = 1 << (d - 2);
  std::vector<Code> lower;
  for (auto& c : classify_tiling_codes(d - 1, lower_pairs, options.workers)) lower.push_back(c.representative);
  const int n = 1 << (d - 1);

  std::vector<LevelResult> results;
  for (int k = 1; k <= std::min(options.max_k, n); ++k) {
    if (options.skip_levels.count(k)) continue;
    struct Task {
      const Code* v;
      std::vector<int> blocks;
    };
    std::vector<Task> tasks;
    const auto partitions = set_partitions(n, k);
    for (const auto& v : lower) {
      if (max_pairs(v) > k) continue;
      for (const auto& p : partitions) tasks.push_back({&v, p});
    }

    std::mutex mutex;
    std::map<std::string, IsoClass> classes;
    std::uint64_t generated = 0;
    std::size_t done = 0;
    const std::vector<int> alphabet(static_cast<std::size_t>(d - 1), k);
    parallel_for(tasks.size(), options.workers, [&](std::size_t t) {
      const Task& task = tasks[t];
      std::vector<std::vector<Word>> parts(static_cast<std::size_t>(k));
      for (std::size_t w = 0; w < task.v->size(); ++w) {
        parts[static_cast<std::size_t>(task.blocks[w])].push_back((*task.v)[w]);
      }
      std::vector<Code> blocks;
      std::vector<std::vector<Code>> choices;
      for (auto& words : parts) {
        blocks.emplace_back(d - 1, words);
        std::vector<Code> eq;
        enumerate_equivalent_proper(blocks.back(), alphabet, [&](const Code& c) { eq.push_back(c); });
        choices.push_back(std::move(eq));
      }
      std::map<std::string, Code> local;
      std::uint64_t local_generated = 0;
      std::vector<Word> words;
      std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
      for (;;) {
        words.clear();
        for (int j = 0; j < k; ++j) {
          const auto js = static_cast<std::size_t>(j);
          for (const auto& x : blocks[js]) words.push_back(x.append(Letter::paired(j + 1, false)));
          for (const auto& x : choices[js][pick[js]]) words.push_back(x.append(Letter::paired(j + 1, true)));
        }
        Code u(d, words);
        ++local_generated;
        auto form = canonical_form(u);
        local.try_emplace(join_words(form.code, ','), std::move(form.code));
        int j = k - 1;
        while (j >= 0 && ++pick[static_cast<std::size_t>(j)] == choices[static_cast<std::size_t>(j)].size()) {
          pick[static_cast<std::size_t>(j)] = 0;
          --j;
        }
        if (j < 0) break;
      }
      std::lock_guard lock(mutex);
      generated += local_generated;
      for (auto& [key, code] : local) {
        auto [it, inserted] = classes.try_emplace(key);
        if (inserted) {
          it->second.key = key;
          it->second.representative = std::move(code);
        }
        ++it->second.multiplicity;
      }
      ++done;
      if (options.on_progress) options.on_progress(k, done, tasks.size());
    });

    LevelResult level;
    level.k = k;
    level.generated = generated;
    std::size_t index = 0;
    for (auto& [key, cls] : classes) {
      cls.first_index = index++;
      cls.tp = twin_vector(cls.representative);
      cls.profile = matrix_profile(cls.representative);
      level.classes.push_back(std::move(cls));
    }
    if (options.on_level) options.on_level(level);
    results.push_back(std::move(level));
  }
  return results;
}

}  // namespace tilekit
