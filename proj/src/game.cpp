#include "zeck/game.hpp"

#include "zeck/decomposition.hpp"
#include "zeck/sequence.hpp"

namespace zeck {

std::string to_string(const Move& m) {
  return (m.kind == MoveKind::combine ? "C" : "S") + std::to_string(m.index);
}

GameState::GameState(std::uint64_t n, std::vector<std::uint32_t> counts)
    : n_(n), counts_(std::move(counts)) {
  if (n_ == 0) throw std::invalid_argument("game value must be >= 1");
  if (counts_.size() != index_of_floor(n_))
    throw std::invalid_argument("counts must have length index_of_floor(n)");
  std::uint64_t value = 0;
  for (std::size_t i = 1; i <= counts_.size(); ++i) {
    const std::uint64_t part = counts_[i - 1] * machine_term(i);
    if (part > n_ || value > n_ - part) throw std::invalid_argument("counts do not sum to n");
    value += part;
  }
  if (value != n_) throw std::invalid_argument("counts do not sum to n");
}

std::uint64_t GameState::total_terms() const {
  std::uint64_t total = 0;
  for (auto c : counts_) total += c;
  return total;
}

std::size_t hash_counts(std::span<const std::uint32_t> counts) noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (auto c : counts) {
    h ^= c + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

std::size_t GameStateHash::operator()(const GameState& s) const noexcept {
  return hash_counts(s.counts());
}

GameState initial_state(std::uint64_t n) {
  if (n == 0) throw std::domain_error("game value must be >= 1");
  std::vector<std::uint32_t> counts(index_of_floor(n), 0);
  if (n > UINT32_MAX) throw std::domain_error("game value too large for count storage");
  counts[0] = static_cast<std::uint32_t>(n);
  return GameState(n, std::move(counts));
}

std::optional<std::string> check_move(const GameState& s, const Move& m) {
  const std::size_t k = s.top_index();
  const std::uint32_t i = m.index;
  const std::string ci = "c_" + std::to_string(i);
  if (m.kind == MoveKind::combine) {
    if (i < 1 || i + 1 > k) return "combine index " + std::to_string(i) + " out of range";
    if (i == 1) {
      if (s.count(1) < 2) return std::string("precondition c_1 ≥ 2 fails");
      return std::nullopt;
    }
    if (s.count(i) < i) return "precondition " + ci + " ≥ " + std::to_string(i) + " fails";
    if (s.count(i - 1) < 1) return "precondition c_" + std::to_string(i - 1) + " ≥ 1 fails";
    return std::nullopt;
  }
  if (i < 2 || i + 1 > k) return "split index " + std::to_string(i) + " out of range";
  const std::uint32_t need = i == 2 ? 3 : i + 1;
  if (s.count(i) < need) return "precondition " + ci + " ≥ " + std::to_string(need) + " fails";
  return std::nullopt;
}

std::vector<Move> legal_moves(const GameState& s) {
  std::vector<Move> moves;
  const auto k = static_cast<std::uint32_t>(s.top_index());
  for (std::uint32_t i = 1; i + 1 <= k; ++i)
    if (!check_move(s, Move::combine(i))) moves.push_back(Move::combine(i));
  for (std::uint32_t i = 2; i + 1 <= k; ++i)
    if (!check_move(s, Move::split(i))) moves.push_back(Move::split(i));
  return moves;
}

GameState apply_move(const GameState& s, const Move& m) {
  if (auto reason = check_move(s, m)) throw IllegalMove(to_string(m) + ": " + *reason);
  GameState next;
  next.n_ = s.n_;
  next.counts_ = s.counts_;
  auto& c = next.counts_;
  const std::uint32_t i = m.index;
  // c[j - 1] is c_j
  if (m.kind == MoveKind::combine) {
    if (i == 1) {
      c[0] -= 2;
      c[1] += 1;
    } else {
      c[i - 1] -= i;
      c[i - 2] -= 1;
      c[i] += 1;
    }
  } else if (i == 2) {
    c[1] -= 3;
    c[0] += 1;
    c[2] += 1;
  } else {
    c[i - 1] -= i + 1;
    c[i] += 1;
    c[i - 2] += i - 2;
    c[i - 3] += 1;
  }
  return next;
}

bool is_terminal(const GameState& s) { return legal_moves(s).empty(); }

std::vector<Move> playout(GameState s, const MovePolicy& policy) {
  std::vector<Move> history;
  for (auto moves = legal_moves(s); !moves.empty(); moves = legal_moves(s)) {
    const Move m = policy(s, moves);
    s = apply_move(s, m);
    history.push_back(m);
  }
  return history;
}

std::vector<Move> random_playout(const GameState& s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return playout(s, [&](const GameState&, std::span<const Move> moves) {
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    return moves[pick(rng)];
  });
}

GameState replay(std::uint64_t n, std::span<const Move> history) {
  GameState s = initial_state(n);
  for (const Move& m : history) s = apply_move(s, m);
  return s;
}

}  // namespace zeck
