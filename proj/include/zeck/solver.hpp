#pragma once

#include "zeck/game.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace zeck {

// Seats are 1..players and move cyclically starting at first_mover.
struct TeamSpec {
  std::uint32_t players = 2;
  std::vector<std::uint32_t> team{1};
  std::uint32_t first_mover = 1;

  bool contains(std::uint32_t seat) const;
  std::uint32_t next_seat(std::uint32_t seat) const { return seat % players + 1; }
  // Throws std::invalid_argument unless players >= 2, the team is a nonempty
  // proper subset of the seats, and first_mover is a seat.
  void validate() const;
};

// Parses "1,2,3".
std::vector<std::uint32_t> parse_team(const std::string& text);
std::string format_team(const std::vector<std::uint32_t>& team);

struct SolveResult {
  bool verdict = false;  // unreliable when budget_exhausted
  std::vector<Move> principal_variation;  // only when verdict holds
  std::uint64_t nodes_expanded = 0;
  bool budget_exhausted = false;
};

inline constexpr std::uint64_t kDefaultBudget = 5'000'000;

// Normal-play team solver: can the team force one of its members to make the
// final move, against every coalition play of the other seats? Memoized on
// (counts, seat to move); the search is iterative so deep games do not recurse.
class TeamSolver {
 public:
  explicit TeamSolver(TeamSpec spec, std::uint64_t budget = kDefaultBudget);

  // nullopt when the node budget runs out. `s` must not be terminal.
  std::optional<bool> team_wins(const GameState& s, std::uint32_t seat_to_move);

  // A move keeping the team winning from a team seat, if one is known.
  std::optional<Move> winning_move(const GameState& s, std::uint32_t seat_to_move);

  std::uint64_t nodes_expanded() const { return nodes_; }
  bool budget_exhausted() const { return exhausted_; }
  const TeamSpec& spec() const { return spec_; }

 private:
  struct Key {
    std::vector<std::uint32_t> counts;
    std::uint32_t seat;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };
  struct Entry {
    bool win;
    std::int32_t best;  // index into legal_moves of a winning team move, -1 if none
  };

  std::optional<Entry> lookup(const GameState& s, std::uint32_t seat) const;

  TeamSpec spec_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::unordered_map<Key, Entry, KeyHash> memo_;
};

// Requires n >= 2. Throws std::domain_error for n < 2.
SolveResult solve_team(std::uint64_t n, const TeamSpec& spec, std::uint64_t budget = kDefaultBudget);

// Player 1 vs player 2; verdict false means player 2 forces the last move.
SolveResult solve_two_player(std::uint64_t n, std::uint64_t budget = kDefaultBudget);

// Every complete game from the initial state, summarized by its
// (combine moves, split moves) tally.
struct GameSpectrum {
  std::set<std::pair<std::uint64_t, std::uint64_t>> combine_split;
  std::uint64_t states = 0;

  std::set<std::uint64_t> lengths() const;
  std::set<std::uint64_t> combine_counts() const;
};

GameSpectrum game_spectrum(std::uint64_t n);

std::set<std::uint64_t> enumerate_game_lengths(std::uint64_t n);

// The common number of combining moves, or nullopt if two games differ.
std::optional<std::uint64_t> invariant_combine_count(std::uint64_t n);
bool verify_combine_invariance(std::uint64_t n);

std::string winners_csv_header();
std::string winners_csv_row(std::uint64_t n, const TeamSpec& spec, const SolveResult& r);
std::string format_length_set(const std::set<std::uint64_t>& lengths);  // "{3, 4}"

}  // namespace zeck
