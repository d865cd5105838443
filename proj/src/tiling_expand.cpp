#include "tilekit/tiling_expand.hpp"

#include <algorithm>

#include "tilekit/atoms.hpp"
#include "tilekit/error.hpp"
#include "tilekit/tiling_enum.hpp"

namespace tilekit {

namespace {

Word relabel(const Word& w, const std::vector<int>& supply) {
  std::vector<Letter> out;
  for (int i = 0; i < w.dim(); ++i) {
    const Letter l = w[i];
    out.push_back(Letter::paired(supply[static_cast<std::size_t>(l.pair_slot())], l.primed()));
  }
  return Word(std::span<const Letter>(out));
}

Word with_last(const Word& w, Letter l) { return w.append(l); }

}  // namespace

std::vector<Code> star_expansions(const Word& w, const std::vector<int>& supply) {
  if (supply.empty()) throw EmptySupply();
  std::vector<int> star_positions;
  for (int i = 0; i < w.dim(); ++i) {
    if (w[i].is_star()) star_positions.push_back(i);
  }
  if (star_positions.empty()) return {Code(w.dim(), {w})};
  const int m = static_cast<int>(star_positions.size());
  std::vector<Code> out;
  enumerate_tiling_codes(std::vector<int>(static_cast<std::size_t>(m), static_cast<int>(supply.size())), false,
                         [&](const Code& t) {
                           std::vector<Word> words;
                           for (const auto& tw : t) {
                             const Word lw = relabel(tw, supply);
                             Word x = w;
                             for (int j = 0; j < m; ++j) x = x.with(star_positions[static_cast<std::size_t>(j)], lw[j]);
                             words.push_back(x);
                           }
                           out.emplace_back(w.dim(), std::move(words));
                         });
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t expand_code(const Code& c, const std::vector<int>& supply,
                          const std::function<void(const Code&)>& emit) {
  std::vector<Word> fixed;
  std::vector<std::vector<Code>> choices;
  for (const auto& w : c) {
    if (w.proper()) {
      fixed.push_back(w);
    } else {
      choices.push_back(star_expansions(w, supply));
    }
  }
  std::uint64_t count = 0;
  std::vector<Word> words = fixed;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == choices.size()) {
      ++count;
      emit(Code(c.dim(), words));
      return;
    }
    for (const auto& part : choices[i]) {
      const std::size_t mark = words.size();
      words.insert(words.end(), part.begin(), part.end());
      rec(i + 1);
      words.resize(mark);
    }
  };
  rec(0);
  return count;
}

std::vector<Code> expand_code(const Code& c, const std::vector<int>& supply) {
  std::vector<Code> out;
  expand_code(c, supply, [&](const Code& x) { out.push_back(x); });
  std::sort(out.begin(), out.end());
  return out;
}

Code cylinder_extend(const CodePartition& v, const CodePartition& w, const std::vector<int>& letters) {
  if (v.blocks.size() != w.blocks.size() || v.blocks.size() != letters.size()) throw Error("partitions and letters differ in length");
  std::vector<Word> words;
  int dim = -1;
  for (std::size_t i = 0; i < v.blocks.size(); ++i) {
    const Code& vb = v.blocks[i];
    const Code& wb = w.blocks[i];
    if (vb.empty() || wb.empty() || vb.dim() != wb.dim()) throw BlocksNotEquivalent(i);
    if (dim < 0) dim = vb.dim();
    if (vb.dim() != dim) throw DimensionMismatch(dim, vb.dim());
    if (!equivalent(vb, wb)) throw BlocksNotEquivalent(i);
    for (const auto& x : vb) words.push_back(with_last(x, Letter::paired(letters[i], false)));
    for (const auto& x : wb) words.push_back(with_last(x, Letter::paired(letters[i], true)));
  }
  return Code(dim + 1, std::move(words));
}

std::vector<Code> build_N48(const std::vector<Code>& n3) {
  std::vector<Code> out;
  for (const auto& v : n3) {
    CodePartition p;
    std::vector<int> letters;
    int j = 1;
    for (const auto& x : v) {
      p.blocks.push_back(Code(v.dim(), {x}));
      letters.push_back(j++);
    }
    out.push_back(cylinder_extend(p, p, letters));
  }
  return out;
}

SevenBlockFamilies build_N47_families(const std::vector<Code>& n3) {
  SevenBlockFamilies f;
  constexpr int kSupply = 8;
  for (const auto& v : n3) {
    for (std::size_t x = 0; x < v.size(); ++x) {
      for (std::size_t y = x + 1; y < v.size(); ++y) {
        CodePartition p;
        p.blocks.push_back(Code(v.dim(), {v[x], v[y]}));
        for (std::size_t z = 0; z < v.size(); ++z) {
          if (z != x && z != y) p.blocks.push_back(Code(v.dim(), {v[z]}));
        }
        std::vector<int> letters(p.blocks.size());
        for (std::size_t i = 0; i < letters.size(); ++i) letters[i] = static_cast<int>(i) + 1;
        const auto twin = twin_position(v[x], v[y]);
        if (!twin) {
          f.a.push_back(cylinder_extend(p, p, letters));
          continue;
        }
        for (int s = 1; s <= kSupply; ++s) {
          CodePartition q = p;
          q.blocks[0] = Code(v.dim(), {v[x].with(*twin, Letter::paired(s, false)),
                                       v[x].with(*twin, Letter::paired(s, true))});
          f.b.push_back(cylinder_extend(p, q, letters));
        }
      }
    }
  }
  return f;
}

std::vector<IsoClass> build_N47(const std::vector<Code>& n3, int workers) {
  auto f = build_N47_families(n3);
  std::vector<Code> all = std::move(f.a);
  all.insert(all.end(), f.b.begin(), f.b.end());
  return classify(all, workers);
}

}  // namespace tilekit
