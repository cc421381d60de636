// reduce.hpp -- type I and type II moves as word rewrites with exact width
// deltas, the greedy reducer, and a bounded breadth-first move-graph explorer.
//
// A type I move at block i deletes one minimum and one maximum from that
// block (width drops by 2 a_i - 2, a_i the thick level there). A type II
// up-move transposes an adjacent (m, M) pair (width drops by exactly 4);
// the down-move is its inverse. Stabilization is the formal inverse of a
// type I move. Every accepted move keeps the word admissible.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "knotwidth/errors.hpp"
#include "knotwidth/word.hpp"

namespace knotwidth {

enum class MoveKind { kTypeI, kTypeIIUp, kTypeIIDown, kStabilize };

/// A move identified by its kind and an index: a block index (0-based) for
/// type I and stabilization, a letter position for type II.
struct Move {
  MoveKind kind = MoveKind::kTypeI;
  std::size_t index = 0;

  bool operator==(const Move&) const = default;
};

inline std::string format_move(const Move& m) {
  switch (m.kind) {
    case MoveKind::kTypeI:
      return "I:" + std::to_string(m.index);
    case MoveKind::kTypeIIUp:
      return "II:" + std::to_string(m.index) + ":up";
    case MoveKind::kTypeIIDown:
      return "II:" + std::to_string(m.index) + ":down";
    case MoveKind::kStabilize:
      return "S:" + std::to_string(m.index);
  }
  return "?";
}

struct TraceStep {
  Move move;
  MorseWord word;       // word after the move
  std::int64_t delta;   // width(word) - width(previous word)
};

/// An ordered record of applied moves. Each recorded delta equals the
/// recomputed width difference of the adjacent words.
struct ReductionTrace {
  MorseWord start;
  std::vector<TraceStep> steps;

  const MorseWord& result() const noexcept {
    return steps.empty() ? start : steps.back().word;
  }
};

/// Line-oriented serialization: a `start <word> <width>` header, then one
/// `<move> <resulting word> <delta>` record per step.
inline std::string format_trace(const ReductionTrace& trace) {
  std::string out = "start " + trace.start.str() + " " +
                    std::to_string(width_from_word(trace.start)) + "\n";
  for (const TraceStep& s : trace.steps) {
    out += format_move(s.move) + " " + s.word.str() + " " + std::to_string(s.delta) + "\n";
  }
  return out;
}

/// Type I at block i, or nullopt when the move does not apply: index out of
/// range, or the word is the minimal "mM" (removal would destroy it).
inline std::optional<MorseWord> try_type_i(const MorseWord& word, std::size_t block) {
  BlockForm f = block_form(word);
  if (block >= f.block_count()) return std::nullopt;
  if (word.size() <= 2) return std::nullopt;
  f.alphas[block] -= 1;
  f.betas[block] -= 1;
  // zero exponents vanish in the reconstruction; neighbors merge
  return f.to_word();
}

/// Type II at letter positions (j, j+1). Up expects (m, M) there, down
/// expects (M, m); either way the result must stay admissible (a swap whose
/// level count hits zero corresponds to no embedding and is rejected).
inline std::optional<MorseWord> try_type_ii(const MorseWord& word, std::size_t position,
                                            bool up) {
  detail::require_member(word);
  if (position + 1 >= word.size()) return std::nullopt;
  const char lo = word[position];
  const char hi = word[position + 1];
  if (up && !(lo == 'm' && hi == 'M')) return std::nullopt;
  if (!up && !(lo == 'M' && hi == 'm')) return std::nullopt;
  std::string s = word.str();
  std::swap(s[position], s[position + 1]);
  MorseWord swapped(s);
  if (!validate_zhat(swapped)) return std::nullopt;
  return swapped;
}

/// Stabilization at block i: insert one m and one M, the formal inverse of
/// the type I move there. Always admissible when the index is in range.
inline std::optional<MorseWord> try_stabilize(const MorseWord& word, std::size_t block) {
  BlockForm f = block_form(word);
  if (block >= f.block_count()) return std::nullopt;
  f.alphas[block] += 1;
  f.betas[block] += 1;
  return f.to_word();
}

inline std::optional<MorseWord> try_move(const MorseWord& word, const Move& move) {
  switch (move.kind) {
    case MoveKind::kTypeI:
      return try_type_i(word, move.index);
    case MoveKind::kTypeIIUp:
      return try_type_ii(word, move.index, true);
    case MoveKind::kTypeIIDown:
      return try_type_ii(word, move.index, false);
    case MoveKind::kStabilize:
      return try_stabilize(word, move.index);
  }
  return std::nullopt;
}

/// Throwing counterpart of try_move.
inline MorseWord apply_move(const MorseWord& word, const Move& move) {
  auto next = try_move(word, move);
  if (!next) {
    throw MoveError("move " + format_move(move) + " does not apply to '" + word.str() + "'");
  }
  return *next;
}

inline MorseWord apply_type_i(const MorseWord& word, std::size_t block) {
  return apply_move(word, {MoveKind::kTypeI, block});
}

inline MorseWord apply_type_ii(const MorseWord& word, std::size_t position, bool up) {
  return apply_move(word, {up ? MoveKind::kTypeIIUp : MoveKind::kTypeIIDown, position});
}

inline MorseWord stabilize(const MorseWord& word, std::size_t block) {
  return apply_move(word, {MoveKind::kStabilize, block});
}

/// Greedy reduction: repeatedly apply a width-decreasing type I or type II
/// up-move until none applies. Deterministic tie-break: type I at the highest
/// thick level (leftmost on ties) first, then the leftmost type II up-move.
/// Width is strictly decreasing along the trace; the fixed point is "mM".
///
/// This is a word-level rewrite, not a knot invariant: word moves
/// overapproximate isotopies, so every admissible word reduces to "mM".
inline ReductionTrace reduce(const MorseWord& start) {
  detail::require_member(start);
  ReductionTrace trace{start, {}};
  MorseWord current = start;
  std::int64_t current_width = width_from_word(current);
  for (;;) {
    std::optional<Move> pick;
    std::optional<MorseWord> next;
    if (current.size() > 2) {
      const ThickThinTuple t = thick_thin(current);
      std::size_t best = 0;
      for (std::size_t i = 2; i < t.entries.size(); i += 2) {
        if (t.entries[i] > t.entries[2 * best]) best = i / 2;
      }
      pick = Move{MoveKind::kTypeI, best};
      next = try_move(current, *pick);
    } else {
      for (std::size_t j = 0; j + 1 < current.size(); ++j) {
        if (auto w = try_type_ii(current, j, true)) {
          pick = Move{MoveKind::kTypeIIUp, j};
          next = w;
          break;
        }
      }
    }
    if (!pick || !next) break;
    const std::int64_t w = width_from_word(*next);
    if (w >= current_width) break;  // only width-decreasing moves are taken
    trace.steps.push_back({*pick, *next, w - current_width});
    current = *next;
    current_width = w;
  }
  return trace;
}

/// Node budget for searches; override with KNOTWIDTH_NODE_BUDGET.
inline std::size_t default_node_bound() {
  if (const char* s = std::getenv("KNOTWIDTH_NODE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end == s || *end != '\0' || v == 0) {
      throw Error("KNOTWIDTH_NODE_BUDGET must be a positive integer, got '" + std::string(s) +
                  "'");
    }
    return static_cast<std::size_t>(v);
  }
  return 1'000'000;
}

struct ExploreResult {
  std::int64_t min_width = 0;
  ReductionTrace witness;   // a shortest move sequence reaching min_width
  std::size_t visited = 0;  // distinct words seen
};

/// Breadth-first search over the move graph (all four move kinds), visiting
/// words with at most `stabilization_budget` net stabilizations (equivalently
/// bridge number at most that of the start plus the budget) and width at most
/// `width_cap`. Deterministic: FIFO frontier, moves probed in a fixed order
/// (type I by block, type II up then down by position, stabilize by block);
/// the witness leads to the first word attaining the minimum width.
/// Throws ResourceLimitError when more than `node_bound` words are visited.
inline ExploreResult explore(const MorseWord& start, std::int64_t stabilization_budget,
                             std::int64_t width_cap,
                             std::size_t node_bound = default_node_bound()) {
  detail::require_member(start);
  if (stabilization_budget < 0) throw Error("stabilization budget must be >= 0");

  const std::int64_t max_bridge = detail::checked_add(bridge_number(start), stabilization_budget);

  struct Parent {
    std::string word;
    Move move;
  };
  std::unordered_map<std::string, Parent> parents;  // visited words -> discovery edge
  std::deque<MorseWord> frontier;

  parents.emplace(start.str(), Parent{});
  frontier.push_back(start);

  std::int64_t best_width = width_from_word(start);
  MorseWord best = start;

  auto moves_of = [](const MorseWord& w) {
    std::vector<Move> out;
    const std::size_t blocks = block_form(w).block_count();
    for (std::size_t i = 0; i < blocks; ++i) out.push_back({MoveKind::kTypeI, i});
    for (std::size_t j = 0; j + 1 < w.size(); ++j) out.push_back({MoveKind::kTypeIIUp, j});
    for (std::size_t j = 0; j + 1 < w.size(); ++j) out.push_back({MoveKind::kTypeIIDown, j});
    for (std::size_t i = 0; i < blocks; ++i) out.push_back({MoveKind::kStabilize, i});
    return out;
  };

  while (!frontier.empty()) {
    const MorseWord current = frontier.front();
    frontier.pop_front();
    for (const Move& move : moves_of(current)) {
      auto next = try_move(current, move);
      if (!next) continue;
      if (parents.count(next->str())) continue;
      if (bridge_number(*next) > max_bridge) continue;
      const std::int64_t w = width_from_word(*next);
      if (w > width_cap) continue;
      parents.emplace(next->str(), Parent{current.str(), move});
      if (parents.size() > node_bound) {
        throw ResourceLimitError("explore exceeded the node budget of " +
                                 std::to_string(node_bound) + " words");
      }
      if (w < best_width) {
        best_width = w;
        best = *next;
      }
      frontier.push_back(*next);
    }
  }

  // Rebuild the discovery path to the best word.
  std::vector<std::pair<Move, MorseWord>> path;
  std::string at = best.str();
  while (at != start.str()) {
    const Parent& p = parents.at(at);
    path.emplace_back(p.move, MorseWord(at));
    at = p.word;
  }
  ReductionTrace witness{start, {}};
  std::int64_t prev_width = width_from_word(start);
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    const std::int64_t w = width_from_word(it->second);
    witness.steps.push_back({it->first, it->second, w - prev_width});
    prev_width = w;
  }
  return {best_width, std::move(witness), parents.size()};
}

}  // namespace knotwidth
