#include "tilekit/iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "tilekit/error.hpp"
#include "tilekit/parallel.hpp"

namespace tilekit {

PositionBijection PositionBijection::identity() {
  PositionBijection b;
  std::iota(b.to.begin(), b.to.end(), std::uint8_t{0});
  return b;
}

Letter PositionBijection::operator()(Letter l) const {
  if (l.is_star()) return l;
  const int s = l.pair_slot();
  const bool primed = l.primed() != (((flip >> s) & 1u) != 0);
  return Letter::paired(to[static_cast<std::size_t>(s)] + 1, primed);
}

PositionBijection PositionBijection::inverse() const {
  PositionBijection inv;
  for (int j = 0; j < Letter::kMaxPairs; ++j) {
    const int t = to[static_cast<std::size_t>(j)];
    inv.to[static_cast<std::size_t>(t)] = static_cast<std::uint8_t>(j);
    if ((flip >> j) & 1u) inv.flip = static_cast<std::uint16_t>(inv.flip | (1u << t));
  }
  return inv;
}

PositionBijection PositionBijection::then(const PositionBijection& next) const {
  PositionBijection r;
  r.flip = 0;
  for (int j = 0; j < Letter::kMaxPairs; ++j) {
    const int t = to[static_cast<std::size_t>(j)];
    r.to[static_cast<std::size_t>(j)] = next.to[static_cast<std::size_t>(t)];
    const unsigned f = ((flip >> j) & 1u) ^ ((next.flip >> t) & 1u);
    if (f) r.flip = static_cast<std::uint16_t>(r.flip | (1u << j));
  }
  return r;
}

CandidateMap CandidateMap::identity(int dim) {
  CandidateMap m;
  m.source.resize(static_cast<std::size_t>(dim));
  std::iota(m.source.begin(), m.source.end(), 0);
  m.letters.assign(static_cast<std::size_t>(dim), PositionBijection::identity());
  return m;
}

Word CandidateMap::operator()(const Word& w) const {
  if (w.dim() != dim()) throw DimensionMismatch(w.dim(), dim());
  std::array<Letter, Word::kMaxDim> out{};
  for (int i = 0; i < dim(); ++i) {
    out[static_cast<std::size_t>(i)] =
        letters[static_cast<std::size_t>(i)](w[source[static_cast<std::size_t>(i)]]);
  }
  return Word(std::span<const Letter>(out.data(), static_cast<std::size_t>(dim())));
}

Code CandidateMap::operator()(const Code& c) const {
  std::vector<Word> words;
  words.reserve(c.size());
  for (const auto& w : c) words.push_back((*this)(w));
  return Code(c.dim(), std::move(words));
}

CandidateMap CandidateMap::inverse() const {
  CandidateMap inv;
  inv.source.resize(source.size());
  inv.letters.resize(letters.size());
  for (std::size_t i = 0; i < source.size(); ++i) {
    const auto s = static_cast<std::size_t>(source[i]);
    inv.source[s] = static_cast<int>(i);
    inv.letters[s] = letters[i].inverse();
  }
  return inv;
}

CandidateMap compose(const CandidateMap& outer, const CandidateMap& inner) {
  if (outer.dim() != inner.dim()) throw DimensionMismatch(outer.dim(), inner.dim());
  CandidateMap r;
  r.source.resize(outer.source.size());
  r.letters.resize(outer.source.size());
  for (std::size_t i = 0; i < outer.source.size(); ++i) {
    const auto os = static_cast<std::size_t>(outer.source[i]);
    r.source[i] = inner.source[os];
    r.letters[i] = inner.letters[os].then(outer.letters[i]);
  }
  return r;
}

int MatrixProfile::support(int row) const {
  int n = 0;
  for (const auto& [u, p] : rows[static_cast<std::size_t>(row)]) n += (u + p) > 0;
  return n;
}

std::vector<MatrixProfile::Entry> MatrixProfile::normalized_row(int row) const {
  std::vector<Entry> out;
  for (const auto& [u, p] : rows[static_cast<std::size_t>(row)]) {
    if (u + p > 0) out.emplace_back(std::max(u, p), std::min(u, p));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

MatrixProfile matrix_profile(const Code& c) {
  MatrixProfile p;
  p.rows.resize(static_cast<std::size_t>(c.dim()));
  for (const auto& w : c) {
    for (int i = 0; i < c.dim(); ++i) {
      const Letter l = w[i];
      if (l.is_star()) continue;
      auto& e = p.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(l.pair_slot())];
      (l.primed() ? e.second : e.first) += 1;
    }
  }
  return p;
}

bool has_compressed_form(const MatrixProfile& p) {
  int previous_support = 0;
  for (int i = 0; i < p.dim(); ++i) {
    bool seen_zero = false;
    for (const auto& [u, q] : p.rows[static_cast<std::size_t>(i)]) {
      if (u + q == 0) {
        seen_zero = true;
      } else if (seen_zero) {
        return false;
      }
    }
    const int s = p.support(i);
    if (s < previous_support) return false;
    previous_support = s;
  }
  return true;
}

std::pair<Code, CandidateMap> compress(const Code& c) {
  const MatrixProfile p = matrix_profile(c);
  if (has_compressed_form(p)) return {c, CandidateMap::identity(c.dim())};

  const int d = c.dim();
  std::vector<int> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<MatrixProfile::Entry>> normalized;
  for (int i = 0; i < d; ++i) normalized.push_back(p.normalized_row(i));
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return std::forward_as_tuple(p.support(x), normalized[static_cast<std::size_t>(x)], x) <
           std::forward_as_tuple(p.support(y), normalized[static_cast<std::size_t>(y)], y);
  });

  CandidateMap m;
  m.source = order;
  m.letters.resize(static_cast<std::size_t>(d));
  for (int out = 0; out < d; ++out) {
    const int in = order[static_cast<std::size_t>(out)];
    const auto& row = p.rows[static_cast<std::size_t>(in)];
    std::array<int, Letter::kMaxPairs> first_word;
    std::array<bool, Letter::kMaxPairs> first_primed{};
    first_word.fill(-1);
    for (std::size_t wi = 0; wi < c.size(); ++wi) {
      const Letter l = c[wi][in];
      if (l.is_star()) continue;
      const auto s = static_cast<std::size_t>(l.pair_slot());
      if (first_word[s] < 0) {
        first_word[s] = static_cast<int>(wi);
        first_primed[s] = l.primed();
      }
    }
    std::vector<int> slots;
    for (int s = 0; s < Letter::kMaxPairs; ++s) {
      if (first_word[static_cast<std::size_t>(s)] >= 0) slots.push_back(s);
    }
    std::sort(slots.begin(), slots.end(), [&](int x, int y) {
      const auto& ex = row[static_cast<std::size_t>(x)];
      const auto& ey = row[static_cast<std::size_t>(y)];
      const int tx = ex.first + ex.second;
      const int ty = ey.first + ey.second;
      if (tx != ty) return tx > ty;
      return first_word[static_cast<std::size_t>(x)] < first_word[static_cast<std::size_t>(y)];
    });
    PositionBijection b;
    std::array<bool, Letter::kMaxPairs> taken{};
    int next = 0;
    for (int s : slots) {
      b.to[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(next);
      taken[static_cast<std::size_t>(s)] = true;
      if (first_primed[static_cast<std::size_t>(s)]) b.flip = static_cast<std::uint16_t>(b.flip | (1u << s));
      ++next;
    }
    for (int s = 0; s < Letter::kMaxPairs; ++s) {
      if (!taken[static_cast<std::size_t>(s)]) b.to[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(next++);
    }
    m.letters[static_cast<std::size_t>(out)] = b;
  }
  return {m(c), m};
}

bool profile_equal(const MatrixProfile& p, const MatrixProfile& q) {
  if (p.dim() != q.dim()) throw ShapeMismatch();
  std::vector<std::vector<MatrixProfile::Entry>> rp;
  std::vector<std::vector<MatrixProfile::Entry>> rq;
  for (int i = 0; i < p.dim(); ++i) {
    rp.push_back(p.normalized_row(i));
    rq.push_back(q.normalized_row(i));
  }
  std::sort(rp.begin(), rp.end());
  std::sort(rq.begin(), rq.end());
  return rp == rq;
}

std::vector<int> twin_vector(const Code& c) {
  std::vector<int> t(static_cast<std::size_t>(c.dim()), 0);
  for (std::size_t x = 0; x < c.size(); ++x) {
    for (std::size_t y = x + 1; y < c.size(); ++y) {
      if (auto pos = twin_position(c[x], c[y])) ++t[static_cast<std::size_t>(*pos)];
    }
  }
  return t;
}

namespace {

struct WorkCapExceeded {};

// Searches for g with g(v) == u between two codes of equal profile class.
class ElementarySearch {
 public:
  static constexpr std::size_t kNodeCap = 1'000'000;

  ElementarySearch(const Code& v, const Code& u)
      : v_(v), u_(u), d_(v.dim()), pv_(matrix_profile(v)), pu_(matrix_profile(u)) {
    for (int i = 0; i < d_; ++i) {
      nv_.push_back(pv_.normalized_row(i));
      nu_.push_back(pu_.normalized_row(i));
    }
    pivot_ = 0;
    for (int i = 1; i < d_; ++i) {
      if (pu_.support(i) >= pu_.support(pivot_)) pivot_ = i;
    }
    for (int i = 0; i < d_; ++i) {
      if (i != pivot_) free_positions_.push_back(i);
    }
    map_ = CandidateMap::identity(d_);
    used_source_.assign(static_cast<std::size_t>(d_), false);
  }

  std::optional<CandidateMap> run() {
    if (search_sigma(0)) return map_;
    return std::nullopt;
  }

 private:
  void tick() {
    if (++nodes_ > kNodeCap) throw WorkCapExceeded{};
  }

  bool search_sigma(int out) {
    tick();
    if (out == d_) return search_position(0);
    for (int s = 0; s < d_; ++s) {
      if (used_source_[static_cast<std::size_t>(s)]) continue;
      if (nv_[static_cast<std::size_t>(s)] != nu_[static_cast<std::size_t>(out)]) continue;
      used_source_[static_cast<std::size_t>(s)] = true;
      map_.source[static_cast<std::size_t>(out)] = s;
      if (search_sigma(out + 1)) return true;
      used_source_[static_cast<std::size_t>(s)] = false;
    }
    return false;
  }

  bool search_position(std::size_t idx) {
    tick();
    if (idx == free_positions_.size()) return resolve_pivot();
    const int out = free_positions_[idx];
    const int in = map_.source[static_cast<std::size_t>(out)];
    std::vector<int> src_slots;
    std::vector<int> dst_slots;
    for (int s = 0; s < Letter::kMaxPairs; ++s) {
      const auto& e = pv_.rows[static_cast<std::size_t>(in)][static_cast<std::size_t>(s)];
      if (e.first + e.second > 0) src_slots.push_back(s);
      const auto& f = pu_.rows[static_cast<std::size_t>(out)][static_cast<std::size_t>(s)];
      if (f.first + f.second > 0) dst_slots.push_back(s);
    }
    PositionBijection b;
    b.flip = 0;
    std::array<bool, Letter::kMaxPairs> dst_used{};
    return assign_pair(idx, out, in, src_slots, dst_slots, 0, b, dst_used);
  }

  bool assign_pair(std::size_t idx, int out, int in, const std::vector<int>& src_slots,
                   const std::vector<int>& dst_slots, std::size_t k, PositionBijection& b,
                   std::array<bool, Letter::kMaxPairs>& dst_used) {
    tick();
    if (k == src_slots.size()) {
      fill_unused(b, src_slots, dst_used);
      map_.letters[static_cast<std::size_t>(out)] = b;
      if (!partial_images_match(idx + 1)) return false;
      return search_position(idx + 1);
    }
    const int s = src_slots[k];
    const auto e = pv_.rows[static_cast<std::size_t>(in)][static_cast<std::size_t>(s)];
    for (int t : dst_slots) {
      if (dst_used[static_cast<std::size_t>(t)]) continue;
      const auto f = pu_.rows[static_cast<std::size_t>(out)][static_cast<std::size_t>(t)];
      for (int flip = 0; flip < 2; ++flip) {
        const auto image = flip ? MatrixProfile::Entry{e.second, e.first} : e;
        if (image != f) continue;
        dst_used[static_cast<std::size_t>(t)] = true;
        const auto saved = b;
        b.to[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(t);
        if (flip) b.flip = static_cast<std::uint16_t>(b.flip | (1u << s));
        if (assign_pair(idx, out, in, src_slots, dst_slots, k + 1, b, dst_used)) return true;
        b = saved;
        dst_used[static_cast<std::size_t>(t)] = false;
      }
    }
    return false;
  }

  static void fill_unused(PositionBijection& b, const std::vector<int>& src_slots,
                          const std::array<bool, Letter::kMaxPairs>& dst_used) {
    std::array<bool, Letter::kMaxPairs> src_used{};
    for (int s : src_slots) src_used[static_cast<std::size_t>(s)] = true;
    int t = 0;
    for (int s = 0; s < Letter::kMaxPairs; ++s) {
      if (src_used[static_cast<std::size_t>(s)]) continue;
      while (dst_used[static_cast<std::size_t>(t)]) ++t;
      b.to[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(t++);
      b.flip = static_cast<std::uint16_t>(b.flip & ~(1u << s));
    }
  }

  // Images of v and u restricted to the first `count` free positions.
  std::uint64_t partial_v(const Word& w, std::size_t count) const {
    std::uint64_t key = 0;
    for (std::size_t j = 0; j < count; ++j) {
      const auto out = static_cast<std::size_t>(free_positions_[j]);
      key = (key << Word::kBits) | map_.letters[out](w[map_.source[out]]).rank();
    }
    return key;
  }
  std::uint64_t partial_u(const Word& w, std::size_t count) const {
    std::uint64_t key = 0;
    for (std::size_t j = 0; j < count; ++j) key = (key << Word::kBits) | w[free_positions_[j]].rank();
    return key;
  }

  bool partial_images_match(std::size_t count) {
    std::vector<std::uint64_t> a;
    std::vector<std::uint64_t> b;
    a.reserve(v_.size());
    b.reserve(u_.size());
    for (const auto& w : v_) a.push_back(partial_v(w, count));
    for (const auto& w : u_) b.push_back(partial_u(w, count));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  struct Split {
    std::vector<std::uint64_t> unprimed;
    std::vector<std::uint64_t> primed;
  };

  // Pivot letters are matched through their projected subcodes instead of
  // enumerating sign flips.
  bool resolve_pivot() {
    tick();
    const int in = map_.source[static_cast<std::size_t>(pivot_)];
    const std::size_t count = free_positions_.size();
    std::map<int, Split> sv;
    std::map<int, Split> su;
    std::vector<std::uint64_t> stars_v;
    std::vector<std::uint64_t> stars_u;
    for (const auto& w : v_) {
      const Letter l = w[in];
      const auto key = partial_v(w, count);
      if (l.is_star()) {
        stars_v.push_back(key);
      } else {
        auto& s = sv[l.pair_slot()];
        (l.primed() ? s.primed : s.unprimed).push_back(key);
      }
    }
    for (const auto& w : u_) {
      const Letter l = w[pivot_];
      const auto key = partial_u(w, count);
      if (l.is_star()) {
        stars_u.push_back(key);
      } else {
        auto& s = su[l.pair_slot()];
        (l.primed() ? s.primed : s.unprimed).push_back(key);
      }
    }
    std::sort(stars_v.begin(), stars_v.end());
    std::sort(stars_u.begin(), stars_u.end());
    if (stars_v != stars_u || sv.size() != su.size()) return false;

    using Halves = std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>;
    auto normalize = [](Split& s) {
      std::sort(s.unprimed.begin(), s.unprimed.end());
      std::sort(s.primed.begin(), s.primed.end());
      return s.unprimed <= s.primed ? Halves{s.unprimed, s.primed} : Halves{s.primed, s.unprimed};
    };
    std::vector<std::pair<Halves, int>> lv;
    std::vector<std::pair<Halves, int>> lu;
    for (auto& [slot, s] : sv) lv.emplace_back(normalize(s), slot);
    for (auto& [slot, s] : su) lu.emplace_back(normalize(s), slot);
    std::sort(lv.begin(), lv.end());
    std::sort(lu.begin(), lu.end());
    for (std::size_t j = 0; j < lv.size(); ++j) {
      if (lv[j].first != lu[j].first) return false;
    }

    PositionBijection b;
    b.flip = 0;
    std::array<bool, Letter::kMaxPairs> dst_used{};
    std::vector<int> src_slots;
    for (std::size_t j = 0; j < lv.size(); ++j) {
      const int s = lv[j].second;
      const int t = lu[j].second;
      src_slots.push_back(s);
      b.to[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(t);
      dst_used[static_cast<std::size_t>(t)] = true;
      auto& a = sv[s].unprimed;
      auto& c = su[t].unprimed;
      if (a != c) b.flip = static_cast<std::uint16_t>(b.flip | (1u << s));
    }
    fill_unused(b, src_slots, dst_used);
    map_.letters[static_cast<std::size_t>(pivot_)] = b;
    return map_(v_) == u_;
  }

  const Code& v_;
  const Code& u_;
  int d_;
  MatrixProfile pv_;
  MatrixProfile pu_;
  std::vector<std::vector<MatrixProfile::Entry>> nv_;
  std::vector<std::vector<MatrixProfile::Entry>> nu_;
  int pivot_ = 0;
  std::vector<int> free_positions_;
  std::vector<bool> used_source_;
  CandidateMap map_;
  std::size_t nodes_ = 0;
};

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::optional<CandidateMap> isomorphic(const Code& v, const Code& u) {
  if (v.dim() != u.dim()) throw DimensionMismatch(v.dim(), u.dim());
  if (v.size() != u.size()) return std::nullopt;
  auto [cv, mv] = compress(v);
  auto [cu, mu] = compress(u);
  if (!profile_equal(matrix_profile(cv), matrix_profile(cu))) return std::nullopt;
  if (sorted(twin_vector(cv)) != sorted(twin_vector(cu))) return std::nullopt;

  std::optional<CandidateMap> g;
  try {
    g = ElementarySearch(cv, cu).run();
  } catch (const WorkCapExceeded&) {
    const auto fv = canonical_form(cv);
    const auto fu = canonical_form(cu);
    if (fv.code == fu.code) g = compose(fu.map.inverse(), fv.map);
  }
  if (!g) return std::nullopt;
  CandidateMap witness = compose(mu.inverse(), compose(*g, mv));
  if (witness(v) != u) throw Error("isomorphism witness failed verification");
  return witness;
}

std::vector<IsoClass> classify(std::span<const Code> family, int workers) {
  std::vector<std::string> keys(family.size());
  parallel_for(family.size(), workers, [&](std::size_t i) { keys[i] = canonical_key(family[i]); });
  std::map<std::string, IsoClass> classes;
  for (std::size_t i = 0; i < family.size(); ++i) {
    auto [it, inserted] = classes.try_emplace(keys[i]);
    if (inserted) {
      it->second.key = keys[i];
      it->second.first_index = i;
    }
    ++it->second.multiplicity;
  }
  std::vector<IsoClass> out;
  out.reserve(classes.size());
  for (auto& [key, cls] : classes) {
    cls.representative = canonical_form(family[cls.first_index]).code;
    cls.tp = twin_vector(cls.representative);
    cls.profile = matrix_profile(cls.representative);
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace tilekit
