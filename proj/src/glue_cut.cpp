#include "tilekit/glue_cut.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "tilekit/error.hpp"
#include "tilekit/iso.hpp"
#include "tilekit/parallel.hpp"
#include "tilekit/text_format.hpp"

namespace tilekit {

std::vector<TwinPair> find_twin_pairs(const Code& c) {
  std::vector<TwinPair> out;
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t b = a + 1; b < c.size(); ++b) {
      if (auto p = twin_position(c[a], c[b])) out.push_back({c[a], c[b], *p});
    }
  }
  return out;
}

Code glue(const Code& c, const Word& v, const Word& u) {
  const auto p = twin_position(v, u);
  if (!p || !c.contains(v) || !c.contains(u)) throw NotTwinPair();
  std::vector<Word> words;
  words.reserve(c.size() - 1);
  for (const auto& w : c) {
    if (w != v && w != u) words.push_back(w);
  }
  words.push_back(v.with(*p, Letter::star()));
  return Code(c.dim(), std::move(words));
}

Code cut(const Code& c, const Word& w, int position, int pair) {
  if (position < 0 || position >= c.dim()) throw BadPosition(position, c.dim());
  if (pair < 1 || pair > Letter::kMaxPairs) throw Error("pair index out of range: " + std::to_string(pair));
  if (!c.contains(w)) throw Error("word not in code: " + w.str());
  if (!w[position].is_star()) throw NoStarAtPosition(position);
  std::vector<Word> words;
  words.reserve(c.size() + 1);
  for (const auto& x : c) {
    if (x != w) words.push_back(x);
  }
  words.push_back(w.with(position, Letter::paired(pair, false)));
  words.push_back(w.with(position, Letter::paired(pair, true)));
  return Code(c.dim(), std::move(words));
}

Code reduce(const Code& c) {
  Code cur = c;
  for (;;) {
    const auto pairs = find_twin_pairs(cur);
    if (pairs.empty()) return cur;
    cur = glue(cur, pairs.front().v, pairs.front().u);
  }
}

std::vector<Code> all_reducts(const Code& c) {
  std::set<Code> seen{c};
  std::vector<Code> stack{c};
  std::set<Code> out;
  while (!stack.empty()) {
    const Code cur = std::move(stack.back());
    stack.pop_back();
    const auto pairs = find_twin_pairs(cur);
    if (pairs.empty()) out.insert(cur);
    for (const auto& tp : pairs) {
      Code next = glue(cur, tp.v, tp.u);
      if (seen.insert(next).second) stack.push_back(std::move(next));
    }
  }
  return {out.begin(), out.end()};
}

Code apply(const Code& c, const Move& m) {
  switch (m.kind) {
    case MoveKind::Glue:
      if (m.words.size() != 2) throw Error("glue move needs two words");
      return glue(c, m.words[0], m.words[1]);
    case MoveKind::Cut:
      if (m.words.size() != 1) throw Error("cut move needs one word");
      return cut(c, m.words[0], m.position, m.pair);
    case MoveKind::Switch: {
      if (m.words.size() != 2) throw Error("switch move needs two words");
      const Code glued = glue(c, m.words[0], m.words[1]);
      return cut(glued, m.words[0].with(m.position, Letter::star()), m.target, m.pair);
    }
  }
  throw Error("unknown move kind");
}

namespace {

std::string pair_text(int pair) {
  return {Letter::paired(pair, false).to_char(), ' ', Letter::paired(pair, true).to_char()};
}

}  // namespace

std::string format_move(const Move& m) {
  std::ostringstream out;
  switch (m.kind) {
    case MoveKind::Glue:
      out << "GLUE " << m.position + 1 << ' ' << m.words.at(0).str() << ' ' << m.words.at(1).str();
      break;
    case MoveKind::Cut:
      out << "CUT " << m.position + 1 << ' ' << m.words.at(0).str() << ' ' << pair_text(m.pair);
      break;
    case MoveKind::Switch:
      out << "SWITCH " << m.position + 1 << "->" << m.target + 1 << ' ' << m.words.at(0).str() << ' '
          << m.words.at(1).str() << ' ' << pair_text(m.pair);
      break;
  }
  return out.str();
}

namespace {

int parse_position(const std::string& token, std::size_t column) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    throw ParseError(1, column, "bad position '" + token + "'");
  }
  if (used != token.size() || value < 1) throw ParseError(1, column, "bad position '" + token + "'");
  return value - 1;
}

int parse_pair(const std::string& x, const std::string& xc, std::size_t column) {
  const auto a = x.size() == 1 ? Letter::from_char(x[0]) : std::nullopt;
  const auto b = xc.size() == 1 ? Letter::from_char(xc[0]) : std::nullopt;
  if (!a || !b || a->is_star() || a->primed() || *b != a->complement()) {
    throw ParseError(1, column, "bad letter pair '" + x + " " + xc + "'");
  }
  return a->pair_index();
}

}  // namespace

Move parse_move(std::string_view line) {
  std::vector<std::string> tokens;
  std::vector<std::size_t> columns;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    tokens.emplace_back(line.substr(start, i - start));
    columns.push_back(start + 1);
  }
  if (tokens.empty()) throw ParseError(1, 1, "empty move");
  auto word = [&](std::size_t t) {
    try {
      return parse_word(tokens[t]);
    } catch (const ParseError& e) {
      throw ParseError(1, columns[t] + e.column() - 1, "bad word '" + tokens[t] + "'");
    }
  };
  Move m;
  if (tokens[0] == "GLUE" && tokens.size() == 4) {
    m.kind = MoveKind::Glue;
    m.position = parse_position(tokens[1], columns[1]);
    m.words = {word(2), word(3)};
  } else if (tokens[0] == "CUT" && tokens.size() == 5) {
    m.kind = MoveKind::Cut;
    m.position = parse_position(tokens[1], columns[1]);
    m.words = {word(2)};
    m.pair = parse_pair(tokens[3], tokens[4], columns[3]);
  } else if (tokens[0] == "SWITCH" && tokens.size() == 6) {
    m.kind = MoveKind::Switch;
    const auto arrow = tokens[1].find("->");
    if (arrow == std::string::npos) throw ParseError(1, columns[1], "expected i->j");
    m.position = parse_position(tokens[1].substr(0, arrow), columns[1]);
    m.target = parse_position(tokens[1].substr(arrow + 2), columns[1] + arrow + 2);
    m.words = {word(2), word(3)};
    m.pair = parse_pair(tokens[4], tokens[5], columns[4]);
  } else {
    throw ParseError(1, 1, "unrecognized move '" + std::string(line) + "'");
  }
  return m;
}

std::vector<Neighbor> switch_moves(const Code& c, int pairs) {
  std::vector<Neighbor> out;
  for (const auto& tp : find_twin_pairs(c)) {
    const Word glued = tp.v.with(tp.position, Letter::star());
    const Code g = glue(c, tp.v, tp.u);
    const int original = tp.v[tp.position].pair_index();
    for (int target = 0; target < c.dim(); ++target) {
      if (!glued[target].is_star()) continue;
      for (int p = 1; p <= pairs; ++p) {
        if (target == tp.position && p == original) continue;
        Move m{MoveKind::Switch, {tp.v, tp.u}, tp.position, target, p};
        out.push_back({std::move(m), cut(g, glued, target, p)});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Neighbor& a, const Neighbor& b) { return a.code < b.code; });
  out.erase(std::unique(out.begin(), out.end(), [](const Neighbor& a, const Neighbor& b) { return a.code == b.code; }),
            out.end());
  return out;
}

std::vector<Code> switch_neighbors(const Code& c, int pairs) {
  std::vector<Code> out;
  for (auto& n : switch_moves(c, pairs)) out.push_back(std::move(n.code));
  return out;
}

std::optional<std::vector<Move>> find_path(const Code& v, const Code& u, const PathOptions& options) {
  if (v.dim() != u.dim()) throw DimensionMismatch(v.dim(), u.dim());
  const int pairs = options.pairs > 0 ? options.pairs : std::max(v.max_pair_index(), u.max_pair_index());
  const std::string target_key = options.by_class ? canonical_key(u) : std::string();
  auto reached = [&](const Code& c) { return options.by_class ? canonical_key(c) == target_key : c == u; };
  if (reached(v)) return std::vector<Move>{};

  struct Parent {
    Code from;
    Move move;
  };
  std::unordered_map<Code, Parent> parent;
  std::unordered_set<Code> visited{v};
  std::vector<Code> frontier{v};
  while (!frontier.empty()) {
    std::vector<std::vector<Neighbor>> expanded(frontier.size());
    parallel_for(frontier.size(), options.workers,
                 [&](std::size_t i) { expanded[i] = switch_moves(frontier[i], pairs); });
    std::vector<Code> next;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (auto& n : expanded[i]) {
        if (!visited.insert(n.code).second) continue;
        parent.emplace(n.code, Parent{frontier[i], n.move});
        if (reached(n.code)) {
          std::vector<Move> path;
          for (Code cur = n.code; cur != v;) {
            const Parent& p = parent.at(cur);
            path.push_back(p.move);
            cur = p.from;
          }
          std::reverse(path.begin(), path.end());
          return path;
        }
        if (visited.size() >= options.budget) return std::nullopt;
        next.push_back(std::move(n.code));
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

std::vector<std::vector<Code>> connectivity(const std::vector<Code>& family, int pairs, std::size_t budget,
                                            int workers) {
  std::unordered_set<Code> visited;
  std::vector<std::vector<Code>> components;
  for (const auto& start : family) {
    if (visited.contains(start)) continue;
    visited.insert(start);
    std::vector<Code> component{start};
    std::vector<Code> frontier{start};
    while (!frontier.empty()) {
      std::vector<std::vector<Code>> expanded(frontier.size());
      parallel_for(frontier.size(), workers,
                   [&](std::size_t i) { expanded[i] = switch_neighbors(frontier[i], pairs); });
      std::vector<Code> next;
      for (auto& list : expanded) {
        for (auto& c : list) {
          if (!visited.insert(c).second) continue;
          if (visited.size() > budget) throw BudgetExceeded(budget);
          component.push_back(c);
          next.push_back(std::move(c));
        }
      }
      frontier = std::move(next);
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

}  // namespace tilekit
