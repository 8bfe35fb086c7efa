#pragma once

#include "zeck/game.hpp"
#include "zeck/json_io.hpp"
#include "zeck/solver.hpp"
#include "zeck/strategies.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace zeck {

// Error surfaced to HTTP clients as {"code": ..., "message": ...}.
class ServiceError : public std::runtime_error {
 public:
  ServiceError(int status, std::string code, const std::string& message)
      : std::runtime_error(message), status_(status), code_(std::move(code)) {}
  int status() const { return status_; }
  const std::string& code() const { return code_; }
  json to_json() const { return json{{"code", code_}, {"message", what()}}; }

 private:
  int status_;
  std::string code_;
};

struct ServiceConfig {
  std::chrono::milliseconds bot_time_cap{2000};  // per request; beyond it the bot is "pending"
  std::optional<std::filesystem::path> log_dir;  // append-only JSON lines per session
  std::uint64_t max_n = 1'000'000;
  std::uint64_t bot_budget = kDefaultBudget;
  std::uint64_t default_analysis_budget = kDefaultBudget;
};

// In-memory game sessions. Each session is mutated under its own lock; the
// history is the source of truth and is replayed after every mutation.
class GameService {
 public:
  explicit GameService(ServiceConfig config = {});

  // body: {"n": int, "p": int, "seats": ["human" | strategy name, ...], "seed"?: int}
  json create_game(const json& body);
  // Also resumes bots left pending by an earlier request.
  json get_game(const std::string& id);
  // body: {"kind": ..., "index": ..., "ply"?: int}. A stale "ply" is a conflict.
  json post_move(const std::string& id, const json& body);
  json analysis(const std::string& id, std::optional<std::uint64_t> budget);

  json decompose(const std::string& x) const;
  json sequence(std::size_t up_to) const;

  // Rebuilds sessions from log_dir; returns how many were restored.
  std::size_t load_logs();

 private:
  struct SeatedMove {
    std::uint32_t seat;
    Move move;
  };
  struct Session {
    std::string id;
    std::uint64_t n = 0;
    std::uint32_t p = 2;
    std::uint64_t seed = 1;
    std::vector<std::string> seats;
    std::vector<std::optional<Strategy>> bots;
    GameState state = initial_state(2);
    std::vector<SeatedMove> history;
    std::chrono::system_clock::time_point created;
    std::chrono::system_clock::time_point updated;
    bool bot_pending = false;
    std::mutex mu;

    std::uint32_t seat_to_move() const { return static_cast<std::uint32_t>(history.size() % p) + 1; }
  };

  std::shared_ptr<Session> find(const std::string& id) const;
  std::shared_ptr<Session> make_session(std::uint64_t n, std::uint32_t p, std::vector<std::string> seats,
                                        std::uint64_t seed, std::string id) const;
  void apply(Session& s, const Move& m);
  void advance_bots(Session& s);
  void check_replay(const Session& s) const;
  void log_line(const Session& s, const json& line) const;
  json view(const Session& s) const;
  std::string fresh_id();

  ServiceConfig config_;
  mutable std::mutex sessions_mu_;
  std::unordered_map<std::string, std::shared_ptr<Session>> sessions_;
  std::atomic<std::uint64_t> id_counter_{0};
};

}  // namespace zeck
