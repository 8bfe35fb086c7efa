#include "zeck/solver.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace zeck {

bool TeamSpec::contains(std::uint32_t seat) const {
  return std::find(team.begin(), team.end(), seat) != team.end();
}

void TeamSpec::validate() const {
  if (players < 2) throw std::invalid_argument("need at least 2 players");
  if (team.empty()) throw std::invalid_argument("team must be nonempty");
  for (auto seat : team)
    if (seat < 1 || seat > players) throw std::invalid_argument("team seat out of range");
  std::vector<std::uint32_t> sorted = team;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() >= players) throw std::invalid_argument("team must be a proper subset of the seats");
  if (first_mover < 1 || first_mover > players) throw std::invalid_argument("first mover out of range");
}

std::vector<std::uint32_t> parse_team(const std::string& text) {
  std::vector<std::uint32_t> team;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(' ');
    item = first == std::string::npos ? "" : item.substr(first, item.find_last_not_of(' ') - first + 1);
    if (item.empty() || item.size() > 9 || item.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad team list '" + text + "'");
    team.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  }
  if (team.empty()) throw std::invalid_argument("empty team list");
  return team;
}

std::string format_team(const std::vector<std::uint32_t>& team) {
  std::string out;
  for (auto seat : team) {
    if (!out.empty()) out += ';';
    out += std::to_string(seat);
  }
  return out;
}

std::size_t TeamSolver::KeyHash::operator()(const Key& k) const noexcept {
  return hash_counts(k.counts) ^ (static_cast<std::size_t>(k.seat) * 0x9e3779b97f4a7c15ull);
}

TeamSolver::TeamSolver(TeamSpec spec, std::uint64_t budget) : spec_(std::move(spec)), budget_(budget) {
  spec_.validate();
}

std::optional<TeamSolver::Entry> TeamSolver::lookup(const GameState& s, std::uint32_t seat) const {
  Key key{std::vector<std::uint32_t>(s.counts().begin(), s.counts().end()), seat};
  auto it = memo_.find(key);
  if (it == memo_.end()) return std::nullopt;
  return it->second;
}

std::optional<bool> TeamSolver::team_wins(const GameState& root, std::uint32_t root_seat) {
  if (auto hit = lookup(root, root_seat)) return hit->win;
  if (exhausted_) return std::nullopt;

  struct Frame {
    GameState state;
    std::uint32_t seat;
    std::vector<Move> moves;
    std::size_t next = 0;
    bool team_seat;
    bool decided = false;  // OR found a win / AND found a loss
    std::int32_t best = -1;
  };
  auto make_frame = [&](GameState s, std::uint32_t seat) {
    auto moves = legal_moves(s);
    const bool team_seat = spec_.contains(seat);
    return Frame{std::move(s), seat, std::move(moves), 0, team_seat};
  };

  std::vector<Frame> stack;
  stack.push_back(make_frame(root, root_seat));
  ++nodes_;
  if (stack.back().moves.empty()) throw std::invalid_argument("team_wins: state is terminal");

  // Value of a child once known: true iff the team wins from it.
  std::optional<bool> child_value;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (child_value) {
      const bool v = *child_value;
      child_value.reset();
      if (f.team_seat && v) {
        f.decided = true;
        f.best = static_cast<std::int32_t>(f.next);
      } else if (!f.team_seat && !v) {
        f.decided = true;
      }
      ++f.next;
    }
    if (f.decided || f.next == f.moves.size()) {
      // OR over moves at team seats, AND at the others
      const bool win = f.team_seat ? f.decided : !f.decided;
      memo_.emplace(Key{std::vector<std::uint32_t>(f.state.counts().begin(), f.state.counts().end()), f.seat},
                    Entry{win, f.best});
      stack.pop_back();
      child_value = win;
      continue;
    }
    GameState child = apply_move(f.state, f.moves[f.next]);
    const std::uint32_t child_seat = spec_.next_seat(f.seat);
    if (is_terminal(child)) {
      // this seat moved last
      child_value = f.team_seat;
      continue;
    }
    if (auto hit = lookup(child, child_seat)) {
      child_value = hit->win;
      continue;
    }
    if (nodes_ >= budget_) {
      exhausted_ = true;
      return std::nullopt;
    }
    ++nodes_;
    stack.push_back(make_frame(std::move(child), child_seat));
  }
  return *child_value;
}

std::optional<Move> TeamSolver::winning_move(const GameState& s, std::uint32_t seat) {
  if (!spec_.contains(seat) || is_terminal(s)) return std::nullopt;
  auto win = team_wins(s, seat);
  if (!win || !*win) return std::nullopt;
  auto entry = lookup(s, seat);
  if (!entry || entry->best < 0) return std::nullopt;
  return legal_moves(s)[static_cast<std::size_t>(entry->best)];
}

SolveResult solve_team(std::uint64_t n, const TeamSpec& spec, std::uint64_t budget) {
  if (n < 2) throw std::domain_error("solving requires n >= 2");
  TeamSolver solver(spec, budget);
  const GameState start = initial_state(n);
  SolveResult result;
  auto verdict = solver.team_wins(start, spec.first_mover);
  result.nodes_expanded = solver.nodes_expanded();
  result.budget_exhausted = !verdict.has_value();
  result.verdict = verdict.value_or(false);
  if (!result.verdict) return result;

  // Team seats follow recorded winning moves; other seats take their first
  // legal move (every reply loses for them).
  GameState s = start;
  std::uint32_t seat = spec.first_mover;
  while (!is_terminal(s)) {
    Move m = legal_moves(s).front();
    if (spec.contains(seat)) {
      auto best = solver.winning_move(s, seat);
      if (!best) break;
      m = *best;
    }
    result.principal_variation.push_back(m);
    s = apply_move(s, m);
    seat = spec.next_seat(seat);
  }
  return result;
}

SolveResult solve_two_player(std::uint64_t n, std::uint64_t budget) {
  return solve_team(n, TeamSpec{2, {1}, 1}, budget);
}

std::set<std::uint64_t> GameSpectrum::lengths() const {
  std::set<std::uint64_t> out;
  for (const auto& [c, s] : combine_split) out.insert(c + s);
  return out;
}

std::set<std::uint64_t> GameSpectrum::combine_counts() const {
  std::set<std::uint64_t> out;
  for (const auto& [c, s] : combine_split) out.insert(c);
  return out;
}

GameSpectrum game_spectrum(std::uint64_t n) {
  if (n < 1) throw std::domain_error("game value must be >= 1");
  using Tally = std::set<std::pair<std::uint64_t, std::uint64_t>>;
  std::unordered_map<GameState, Tally, GameStateHash> memo;

  // Game lengths at desk scale stay far below the default stack limit.
  std::function<const Tally&(const GameState&)> visit = [&](const GameState& s) -> const Tally& {
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    Tally out;
    const auto moves = legal_moves(s);
    if (moves.empty()) out.insert({0, 0});
    for (const Move& m : moves) {
      const Tally& rest = visit(apply_move(s, m));
      for (const auto& [c, sp] : rest)
        out.insert(m.kind == MoveKind::combine ? std::pair{c + 1, sp} : std::pair{c, sp + 1});
    }
    return memo.emplace(s, std::move(out)).first->second;
  };

  GameSpectrum spectrum;
  spectrum.combine_split = visit(initial_state(n));
  spectrum.states = memo.size();
  return spectrum;
}

std::set<std::uint64_t> enumerate_game_lengths(std::uint64_t n) { return game_spectrum(n).lengths(); }

std::optional<std::uint64_t> invariant_combine_count(std::uint64_t n) {
  const auto counts = game_spectrum(n).combine_counts();
  if (counts.size() != 1) return std::nullopt;
  return *counts.begin();
}

bool verify_combine_invariance(std::uint64_t n) { return invariant_combine_count(n).has_value(); }

std::string winners_csv_header() { return "n,p,team,verdict,nodes,budget_exhausted"; }

std::string winners_csv_row(std::uint64_t n, const TeamSpec& spec, const SolveResult& r) {
  std::ostringstream out;
  out << n << ',' << spec.players << ',' << format_team(spec.team) << ','
      << (r.budget_exhausted ? "unknown" : (r.verdict ? "true" : "false")) << ',' << r.nodes_expanded << ','
      << (r.budget_exhausted ? "true" : "false");
  return out.str();
}

std::string format_length_set(const std::set<std::uint64_t>& lengths) {
  std::string out = "{";
  for (auto it = lengths.begin(); it != lengths.end(); ++it) {
    if (it != lengths.begin()) out += ", ";
    out += std::to_string(*it);
  }
  return out + "}";
}

}  // namespace zeck
