#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace zeck {

enum class MoveKind : std::uint8_t { combine, split };

// Combine(1): {1^2 -> 2}. Combine(i): {a_i^i ^ a_{i-1} -> a_{i+1}}.
// Split(2): {2^3 -> 1 ^ 5}. Split(i): {a_i^(i+1) -> a_{i+1} ^ a_{i-1}^(i-2) ^ a_{i-2}}.
struct Move {
  MoveKind kind = MoveKind::combine;
  std::uint32_t index = 1;

  static Move combine(std::uint32_t i) { return {MoveKind::combine, i}; }
  static Move split(std::uint32_t i) { return {MoveKind::split, i}; }

  friend auto operator<=>(const Move&, const Move&) = default;
};

std::string to_string(const Move& m);  // "C3", "S2"

// Multiset of sequence terms as counts c_1..c_K, with K = index_of_floor(n)
// fixed for the whole game. Value-conserving: sum c_i * a_i == n.
class GameState {
 public:
  // Validates length K and conservation; throws std::invalid_argument otherwise.
  GameState(std::uint64_t n, std::vector<std::uint32_t> counts);

  std::uint64_t n() const { return n_; }
  std::size_t top_index() const { return counts_.size(); }
  std::span<const std::uint32_t> counts() const { return counts_; }
  // c_i for 1 <= i <= K; 0 outside.
  std::uint32_t count(std::size_t i) const {
    return i >= 1 && i <= counts_.size() ? counts_[i - 1] : 0;
  }
  std::uint64_t total_terms() const;

  friend bool operator==(const GameState&, const GameState&) = default;

 private:
  friend GameState apply_move(const GameState&, const Move&);
  GameState() = default;

  std::uint64_t n_ = 0;
  std::vector<std::uint32_t> counts_;
};

struct GameStateHash {
  std::size_t operator()(const GameState& s) const noexcept;
};

std::size_t hash_counts(std::span<const std::uint32_t> counts) noexcept;

class IllegalMove : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws std::domain_error for n == 0.
GameState initial_state(std::uint64_t n);

// Canonical order: Combine(1..K-1), then Split(2..K-1).
std::vector<Move> legal_moves(const GameState& s);

// nullopt if legal, otherwise the failed precondition in words.
std::optional<std::string> check_move(const GameState& s, const Move& m);

// Throws IllegalMove (and leaves `s` untouched) if m is not legal.
GameState apply_move(const GameState& s, const Move& m);

bool is_terminal(const GameState& s);

// Picks a move among the legal ones; receives a non-empty list.
using MovePolicy = std::function<Move(const GameState&, std::span<const Move>)>;

// Plays until terminal; returns the move history.
std::vector<Move> playout(GameState s, const MovePolicy& policy);

// Uniform policy seeded from `seed`; identical seeds give identical histories.
std::vector<Move> random_playout(const GameState& s, std::uint64_t seed);

// Replays `history` from initial_state(n); throws IllegalMove on the first bad move.
GameState replay(std::uint64_t n, std::span<const Move> history);

}  // namespace zeck
