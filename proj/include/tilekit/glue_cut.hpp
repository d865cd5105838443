#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tilekit/code.hpp"

namespace tilekit {

struct TwinPair {
  Word v;  // v < u
  Word u;
  int position;
  friend bool operator==(const TwinPair&, const TwinPair&) = default;
};

/// Every twin pair of the code, sorted by (v, u).
std::vector<TwinPair> find_twin_pairs(const Code& c);

/// Replaces the twin pair v, u by their common starred word. Throws NotTwinPair.
Code glue(const Code& c, const Word& v, const Word& u);
/// Replaces w by the twin pair over the 1-based pair index at `position`.
/// Throws NoStarAtPosition or DuplicateWord.
Code cut(const Code& c, const Word& w, int position, int pair);

/// Glues the smallest twin pair until none is left.
Code reduce(const Code& c);
/// Every twin-pair-free code reachable by some sequence of gluings, sorted.
std::vector<Code> all_reducts(const Code& c);

enum class MoveKind { Glue, Cut, Switch };

/// GLUE: words {v, u} at `position`. CUT: words {w} at `position` with `pair`.
/// SWITCH: glue {v, u} at `position`, then cut the glued word at `target` with `pair`.
struct Move {
  MoveKind kind = MoveKind::Glue;
  std::vector<Word> words;
  int position = 0;
  int target = 0;
  int pair = 0;
  friend bool operator==(const Move&, const Move&) = default;
};

Code apply(const Code& c, const Move& m);
/// "GLUE i v u", "CUT i w x X", "SWITCH i->j v u x X" with 1-based positions.
std::string format_move(const Move& m);
/// Throws ParseError.
Move parse_move(std::string_view line);

struct Neighbor {
  Move move;
  Code code;
};

/// Switches of a proper cube tiling code with cut pairs drawn from 1..pairs,
/// identity moves excluded, sorted by resulting code.
std::vector<Neighbor> switch_moves(const Code& c, int pairs);
std::vector<Code> switch_neighbors(const Code& c, int pairs);

struct PathOptions {
  int pairs = 0;             // 0: largest pair index used by either endpoint
  std::size_t budget = 1000000;  // maximum number of visited codes
  bool by_class = false;     // target reached by any code isomorphic to u
  int workers = 1;
};

/// Shortest switch sequence from v to u by breadth-first search, or nullopt
/// when the budget is exhausted first. Throws DimensionMismatch.
std::optional<std::vector<Move>> find_path(const Code& v, const Code& u, const PathOptions& options = {});

/// Connected components of the switching graph restricted to the closure of
/// the family. Throws BudgetExceeded when the closure exceeds the budget.
std::vector<std::vector<Code>> connectivity(const std::vector<Code>& family, int pairs,
                                            std::size_t budget = 1000000, int workers = 1);

}  // namespace tilekit
