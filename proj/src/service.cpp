#include "zeck/service.hpp"

#include "zeck/decomposition.hpp"
#include "zeck/move_counts.hpp"
#include "zeck/sequence.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

namespace zeck {

namespace {

std::string iso_time(std::chrono::system_clock::time_point t) {
  const std::time_t tt = std::chrono::system_clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

ServiceError bad_request(const std::string& message) { return {400, "bad_request", message}; }

std::uint64_t get_uint(const json& body, const char* key, const std::string& code) {
  if (!body.contains(key) || !body.at(key).is_number_integer() || body.at(key).get<std::int64_t>() < 0)
    throw ServiceError(400, code, std::string("\"") + key + "\" must be a non-negative integer");
  return body.at(key).get<std::uint64_t>();
}

}  // namespace

GameService::GameService(ServiceConfig config) : config_(std::move(config)) {
  if (config_.log_dir) std::filesystem::create_directories(*config_.log_dir);
}

std::string GameService::fresh_id() {
  thread_local std::mt19937_64 rng(std::random_device{}());
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << rng() << '-' << ++id_counter_;
  return out.str();
}

std::shared_ptr<GameService::Session> GameService::make_session(std::uint64_t n, std::uint32_t p,
                                                                std::vector<std::string> seats, std::uint64_t seed,
                                                                std::string id) const {
  if (n == 1) throw ServiceError(400, "degenerate_game", "n = 1 has no moves and no winner");
  if (n < 2 || n > config_.max_n)
    throw ServiceError(400, "invalid_n", "n must be between 2 and " + std::to_string(config_.max_n));
  if (p < 2) throw ServiceError(400, "invalid_players", "p must be >= 2");
  if (seats.size() != p) throw ServiceError(400, "invalid_seats", "need exactly one controller per seat");

  auto s = std::make_shared<Session>();
  s->id = std::move(id);
  s->n = n;
  s->p = p;
  s->seed = seed;
  s->state = initial_state(n);
  for (std::uint32_t seat = 1; seat <= p; ++seat) {
    const std::string& c = seats[seat - 1];
    if (c == "human") {
      s->bots.emplace_back(std::nullopt);
      continue;
    }
    try {
      s->bots.emplace_back(make_bot(c, BotOptions{seed + seat, config_.bot_budget}));
    } catch (const std::out_of_range&) {
      throw ServiceError(400, "unknown_strategy", "unknown seat controller '" + c + "'");
    }
  }
  s->seats = std::move(seats);
  s->created = s->updated = std::chrono::system_clock::now();
  return s;
}

std::shared_ptr<GameService::Session> GameService::find(const std::string& id) const {
  std::lock_guard lock(sessions_mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw ServiceError(404, "not_found", "no game with id '" + id + "'");
  return it->second;
}

void GameService::log_line(const Session& s, const json& line) const {
  if (!config_.log_dir) return;
  std::ofstream out(*config_.log_dir / (s.id + ".jsonl"), std::ios::app);
  out << line.dump() << '\n';
}

void GameService::check_replay(const Session& s) const {
  std::vector<Move> moves;
  for (const auto& h : s.history) moves.push_back(h.move);
  if (!(replay(s.n, moves) == s.state)) throw ServiceError(500, "replay_mismatch", "history does not reproduce state");
}

void GameService::apply(Session& s, const Move& m) {
  const std::uint32_t seat = s.seat_to_move();
  s.state = apply_move(s.state, m);
  s.history.push_back({seat, m});
  s.updated = std::chrono::system_clock::now();
  log_line(s, json{{"type", "move"}, {"seat", seat}, {"move", move_to_json(m)}});
  check_replay(s);
}

void GameService::advance_bots(Session& s) {
  const auto start = std::chrono::steady_clock::now();
  s.bot_pending = false;
  while (!is_terminal(s.state)) {
    const std::uint32_t seat = s.seat_to_move();
    const auto& bot = s.bots[seat - 1];
    if (!bot) return;
    if (std::chrono::steady_clock::now() - start > config_.bot_time_cap) {
      s.bot_pending = true;
      return;
    }
    apply(s, bot->choose(s.state, Turn{seat, s.p}));
  }
}

json GameService::view(const Session& s) const {
  const bool terminal = is_terminal(s.state);
  json history = json::array();
  for (const auto& h : s.history) history.push_back(json{{"seat", h.seat}, {"move", move_to_json(h.move)}});
  const json last_mover = s.history.empty() ? json(nullptr) : json(s.history.back().seat);
  return json{{"id", s.id},
              {"n", s.n},
              {"p", s.p},
              {"seats", s.seats},
              {"state", state_to_json(s.state)},
              {"legal_moves", moves_to_json(legal_moves(s.state))},
              {"history", history},
              {"ply", s.history.size()},
              {"to_move", terminal ? json(nullptr) : json(s.seat_to_move())},
              {"terminal", terminal},
              {"last_mover", last_mover},
              {"winner", terminal ? last_mover : json(nullptr)},
              {"bot_pending", s.bot_pending},
              {"created", iso_time(s.created)},
              {"updated", iso_time(s.updated)}};
}

json GameService::create_game(const json& body) {
  if (!body.is_object()) throw bad_request("body must be a JSON object");
  const std::uint64_t n = get_uint(body, "n", "invalid_n");
  const std::uint64_t p = body.contains("p") ? get_uint(body, "p", "invalid_players") : 2;
  if (p > 64) throw ServiceError(400, "invalid_players", "p must be at most 64");
  std::vector<std::string> seats;
  if (body.contains("seats")) {
    if (!body.at("seats").is_array()) throw ServiceError(400, "invalid_seats", "\"seats\" must be an array");
    for (const auto& c : body.at("seats")) {
      if (!c.is_string()) throw ServiceError(400, "invalid_seats", "seat controllers must be strings");
      seats.push_back(c.get<std::string>());
    }
  } else {
    seats.assign(p, "human");
  }
  const std::uint64_t seed = body.contains("seed") ? get_uint(body, "seed", "bad_request") : 1;

  auto s = make_session(n, static_cast<std::uint32_t>(p), std::move(seats), seed, fresh_id());
  std::lock_guard lock(s->mu);
  log_line(*s, json{{"type", "create"}, {"id", s->id}, {"n", n}, {"p", p}, {"seats", s->seats}, {"seed", seed}});
  {
    std::lock_guard all(sessions_mu_);
    sessions_.emplace(s->id, s);
  }
  advance_bots(*s);
  return view(*s);
}

json GameService::get_game(const std::string& id) {
  auto s = find(id);
  std::lock_guard lock(s->mu);
  if (s->bot_pending) advance_bots(*s);
  return view(*s);
}

json GameService::post_move(const std::string& id, const json& body) {
  auto s = find(id);
  Move m;
  try {
    m = move_from_json(body);
  } catch (const std::invalid_argument& e) {
    throw bad_request(e.what());
  }
  std::lock_guard lock(s->mu);
  if (body.contains("ply")) {
    if (!body.at("ply").is_number_integer() || body.at("ply").get<std::int64_t>() != static_cast<std::int64_t>(s->history.size()))
      throw ServiceError(409, "stale_ply", "game is at ply " + std::to_string(s->history.size()));
  }
  if (is_terminal(s->state)) throw ServiceError(409, "game_over", "the game has ended");
  const std::uint32_t seat = s->seat_to_move();
  if (s->bots[seat - 1]) throw ServiceError(409, "not_your_turn", "seat " + std::to_string(seat) + " is a bot");
  if (auto reason = check_move(s->state, m)) throw ServiceError(422, "illegal_move", *reason);
  apply(*s, m);
  advance_bots(*s);
  return view(*s);
}

json GameService::analysis(const std::string& id, std::optional<std::uint64_t> budget) {
  auto s = find(id);
  GameState state = initial_state(2);
  std::uint32_t p = 2, mover = 1;
  std::uint64_t n = 0, combines_so_far = 0;
  std::optional<std::uint32_t> last_mover;
  {
    std::lock_guard lock(s->mu);
    state = s->state;
    p = s->p;
    n = s->n;
    mover = s->seat_to_move();
    for (const auto& h : s->history) combines_so_far += h.move.kind == MoveKind::combine ? 1 : 0;
    if (!s->history.empty()) last_mover = s->history.back().seat;
  }
  const std::uint64_t node_budget = budget.value_or(config_.default_analysis_budget);
  const std::uint64_t total_combines = mc(n);
  const std::uint64_t final_terms = summand_count(greedy_decompose(BigInt(n)));

  json moves = json::array();
  for (const Move& m : legal_moves(state)) {
    const GameState next = apply_move(state, m);
    json verdict = nullptr;
    bool exhausted = false;
    if (is_terminal(next)) {
      verdict = true;
    } else {
      TeamSolver solver(TeamSpec{p, {mover}, mover}, node_budget);
      const std::uint32_t next_seat = mover % p + 1;
      if (auto v = solver.team_wins(next, next_seat)) verdict = *v;
      else exhausted = true;
    }
    const std::uint64_t combines_left = total_combines - combines_so_far - (m.kind == MoveKind::combine ? 1 : 0);
    moves.push_back(json{{"move", move_to_json(m)},
                         {"state", state_to_json(next)},
                         {"mover", mover},
                         {"mover_can_force_last", verdict},
                         {"budget_exhausted", exhausted},
                         {"remaining_moves", {{"min", combines_left}, {"max", next.total_terms() - final_terms}}}});
  }
  const bool terminal = is_terminal(state);
  return json{{"id", id},
              {"state", state_to_json(state)},
              {"to_move", terminal ? json(nullptr) : json(mover)},
              {"terminal", terminal},
              {"winner", terminal && last_mover ? json(*last_mover) : json(nullptr)},
              {"budget", node_budget},
              {"moves", moves}};
}

json GameService::decompose(const std::string& x) const {
  BigInt value;
  try {
    value = parse_decimal(x);
  } catch (const std::invalid_argument& e) {
    throw bad_request(e.what());
  }
  if (value < 1) throw ServiceError(400, "domain_error", "x must be >= 1");
  return decomposition_to_json(greedy_decompose(value));
}

json GameService::sequence(std::size_t up_to) const {
  if (up_to < 1 || up_to > 2000) throw ServiceError(400, "domain_error", "upTo must be between 1 and 2000");
  SequenceTable& seq = thread_sequence();
  json terms = json::array();
  for (std::size_t i = 1; i <= up_to; ++i) terms.push_back(seq.term(i).str());
  return json{{"terms", terms}};
}

std::size_t GameService::load_logs() {
  if (!config_.log_dir) return 0;
  std::size_t restored = 0;
  for (const auto& entry : std::filesystem::directory_iterator(*config_.log_dir)) {
    if (entry.path().extension() != ".jsonl") continue;
    std::ifstream in(entry.path());
    std::string line;
    std::shared_ptr<Session> s;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const json j = json::parse(line);
      if (j.at("type") == "create") {
        s = make_session(j.at("n").get<std::uint64_t>(), j.at("p").get<std::uint32_t>(),
                         j.at("seats").get<std::vector<std::string>>(), j.at("seed").get<std::uint64_t>(),
                         j.at("id").get<std::string>());
      } else if (s && j.at("type") == "move") {
        const Move m = move_from_json(j.at("move"));
        s->history.push_back({s->seat_to_move(), m});
        s->state = apply_move(s->state, m);
      }
    }
    if (!s) continue;
    check_replay(*s);
    std::lock_guard lock(sessions_mu_);
    sessions_[s->id] = s;
    ++restored;
  }
  return restored;
}

}  // namespace zeck
