#pragma once

#include "zeck/game.hpp"
#include "zeck/solver.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace zeck {

// Who is to move, for policies that care (the solver-backed one).
struct Turn {
  std::uint32_t seat = 1;
  std::uint32_t players = 2;
};

// A named move policy. choose() is only called on non-terminal states and
// always returns one of legal_moves(state).
struct Strategy {
  std::string name;
  std::function<Move(const GameState&, const Turn&)> choose;
};

// A complete combine-only game on n, built the constructive way: the largest
// term of the decomposition first, each a_j from (j-1) copies of a_j-1 and one
// a_j-2 followed by C_{j-1}. Its length is mc(n).
std::vector<Move> combine_only_playout(std::uint64_t n);

// First legal move among C_3, C_2, C_4, C_5, ..., C_K, C_1 (K = top index).
// nullopt when no combine is legal.
std::optional<Move> protagonist_move(const GameState& s);

// Outcome of walking every antagonist reply while the protagonist plays
// protagonist_move. Once no 1's remain the protagonist takes the first legal
// move in canonical order; splits it is forced into there are tallied apart.
struct NoSplitReport {
  std::uint64_t states = 0;
  std::uint64_t antagonist_split_offers = 0;  // antagonist turns with a legal split
  std::uint64_t protagonist_stuck = 0;        // 1's remain but no combine is legal
  std::uint64_t fallback_turns = 0;           // protagonist turns with no 1's left
  std::uint64_t fallback_splits = 0;          // splits forced outside the hypothesis
  // No split is ever playable by the antagonist, and the protagonist always
  // has a combine while 1's remain.
  bool holds() const { return antagonist_split_offers == 0 && protagonist_stuck == 0; }
  // Every complete game is split-free, including after the 1's run out.
  bool fully_split_free() const { return holds() && fallback_splits == 0; }
};

// protagonist_seat is 1 (moves first) or 2.
NoSplitReport no_split_report(std::uint64_t n, std::uint32_t protagonist_seat);
bool verify_no_split_reachable(std::uint64_t n, std::uint32_t protagonist_seat);

// True iff no complete game at all from n contains a split.
bool every_game_split_free(std::uint64_t n);

struct BotOptions {
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultBudget;
};

// Stable identifiers: uniform, combine-only, protagonist, max-split, optimal.
const std::vector<std::string>& bot_names();

// Throws std::out_of_range for an unknown name.
Strategy make_bot(const std::string& name, const BotOptions& options = {});

}  // namespace zeck
