#include "zeck/strategies.hpp"

#include "zeck/decomposition.hpp"
#include "zeck/sequence.hpp"

#include <algorithm>
#include <memory>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace zeck {

namespace {

// Appends the combines that build one a_j out of 1's.
void build_term(std::size_t j, std::vector<Move>& out) {
  if (j <= 1) return;
  if (j == 2) {
    out.push_back(Move::combine(1));
    return;
  }
  for (std::size_t c = 0; c < j - 1; ++c) build_term(j - 1, out);
  build_term(j - 2, out);
  out.push_back(Move::combine(static_cast<std::uint32_t>(j - 1)));
}

}  // namespace

std::vector<Move> combine_only_playout(std::uint64_t n) {
  if (n < 1) throw std::domain_error("game value must be >= 1");
  std::vector<std::uint32_t> delta;
  greedy_coefficients(n, delta);
  std::vector<Move> history;
  for (std::size_t i = delta.size(); i >= 1; --i)
    for (std::uint32_t c = 0; c < delta[i - 1]; ++c) build_term(i, history);
  return history;
}

std::optional<Move> protagonist_move(const GameState& s) {
  const auto k = static_cast<std::uint32_t>(s.top_index());
  std::vector<std::uint32_t> order{3, 2};
  for (std::uint32_t i = 4; i <= k; ++i) order.push_back(i);
  order.push_back(1);
  for (std::uint32_t i : order)
    if (!check_move(s, Move::combine(i))) return Move::combine(i);
  return std::nullopt;
}

NoSplitReport no_split_report(std::uint64_t n, std::uint32_t protagonist_seat) {
  if (n < 2) throw std::domain_error("verification requires n >= 2");
  if (protagonist_seat != 1 && protagonist_seat != 2) throw std::invalid_argument("seat must be 1 or 2");
  NoSplitReport report;
  std::unordered_map<GameState, std::uint8_t, GameStateHash> seen;  // bit per seat

  std::vector<std::pair<GameState, std::uint32_t>> pending{{initial_state(n), 1}};
  while (!pending.empty()) {
    auto [s, seat] = std::move(pending.back());
    pending.pop_back();
    auto& mask = seen[s];
    if (mask & seat) continue;
    mask |= static_cast<std::uint8_t>(seat);
    ++report.states;

    const auto moves = legal_moves(s);
    if (moves.empty()) continue;
    const bool ones_remain = s.count(1) >= 1;
    const std::uint32_t other = 3 - seat;

    if (seat == protagonist_seat) {
      Move m = moves.front();
      if (ones_remain) {
        auto p = protagonist_move(s);
        if (!p) {
          ++report.protagonist_stuck;
          continue;
        }
        m = *p;
      } else {
        ++report.fallback_turns;
        if (m.kind == MoveKind::split) ++report.fallback_splits;
      }
      pending.emplace_back(apply_move(s, m), other);
      continue;
    }

    const bool offered = std::any_of(moves.begin(), moves.end(),
                                     [](const Move& m) { return m.kind == MoveKind::split; });
    if (offered) ++report.antagonist_split_offers;
    for (const Move& m : moves) pending.emplace_back(apply_move(s, m), other);
  }
  return report;
}

bool verify_no_split_reachable(std::uint64_t n, std::uint32_t protagonist_seat) {
  return no_split_report(n, protagonist_seat).holds();
}

bool every_game_split_free(std::uint64_t n) {
  for (const auto& [c, s] : game_spectrum(n).combine_split)
    if (s != 0) return false;
  return true;
}

const std::vector<std::string>& bot_names() {
  static const std::vector<std::string> names{"uniform", "combine-only", "protagonist", "max-split", "optimal"};
  return names;
}

Strategy make_bot(const std::string& name, const BotOptions& options) {
  if (name == "uniform") {
    auto rng = std::make_shared<std::mt19937_64>(options.seed);
    return {name, [rng](const GameState& s, const Turn&) {
              const auto moves = legal_moves(s);
              std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
              return moves[pick(*rng)];
            }};
  }
  if (name == "combine-only") {
    // largest legal combine, as in the constructive combine-only game
    return {name, [](const GameState& s, const Turn&) {
              const auto moves = legal_moves(s);
              std::optional<Move> best;
              for (const Move& m : moves)
                if (m.kind == MoveKind::combine) best = m;
              return best.value_or(moves.front());
            }};
  }
  if (name == "protagonist") {
    return {name, [](const GameState& s, const Turn&) {
              if (s.count(1) >= 1)
                if (auto m = protagonist_move(s)) return *m;
              return legal_moves(s).front();
            }};
  }
  if (name == "max-split") {
    return {name, [](const GameState& s, const Turn&) {
              const auto moves = legal_moves(s);
              return moves.back();  // splits sort after combines, highest index last
            }};
  }
  if (name == "optimal") {
    const std::uint64_t budget = options.budget;
    return {name, [budget](const GameState& s, const Turn& turn) {
              const auto moves = legal_moves(s);
              TeamSolver solver(TeamSpec{turn.players, {turn.seat}, turn.seat}, budget);
              if (auto m = solver.winning_move(s, turn.seat)) return *m;
              return moves.front();
            }};
  }
  throw std::out_of_range("unknown strategy '" + name + "'");
}

}  // namespace zeck
