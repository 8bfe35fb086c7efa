#include "zeck/cli.hpp"

#include "zeck/decomposition.hpp"
#include "zeck/gaps_stats.hpp"
#include "zeck/http_server.hpp"
#include "zeck/json_io.hpp"
#include "zeck/move_counts.hpp"
#include "zeck/sequence.hpp"
#include "zeck/solver.hpp"
#include "zeck/strategies.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

namespace zeck {

namespace {

struct RunConfig {
  std::string format = "text";
  std::string output;
  std::optional<std::uint64_t> seed;
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;
  bool ci = false;

  std::uint64_t seed_or_default() const { return seed.value_or(1); }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Status of a command; exceptions carry domain errors.
struct Outcome {
  int code = kExitOk;
};

void require_seed(const RunConfig& cfg, const char* command) {
  if (cfg.ci && !cfg.seed) throw UsageError(std::string(command) + " is randomized; --seed is required with --ci");
}

std::string coeff_csv(const Decomposition& d) {
  std::string row = d.value.str();
  for (auto s : d.coeffs) row += "," + std::to_string(s);
  return row;
}

Outcome cmd_seq(const RunConfig& cfg, std::size_t k, std::ostream& out) {
  if (k < 1) throw std::domain_error("k must be >= 1");
  SequenceTable& seq = thread_sequence();
  seq.extend_to_index(k);
  if (cfg.format == "json") {
    json terms = json::array();
    for (std::size_t i = 1; i <= k; ++i) terms.push_back(seq.at(i).str());
    out << json{{"terms", terms}}.dump() << '\n';
  } else if (cfg.format == "csv") {
    out << "i,a_i\n";
    for (std::size_t i = 1; i <= k; ++i) out << i << ',' << seq.at(i) << '\n';
  } else {
    for (std::size_t i = 1; i <= k; ++i) out << (i > 1 ? ", " : "") << seq.at(i);
    out << '\n';
  }
  return {};
}

Outcome cmd_decompose(const RunConfig& cfg, const std::string& x, std::ostream& out) {
  const BigInt value = parse_decimal(x);
  const Decomposition d = greedy_decompose(value);
  if (cfg.format == "json") out << decomposition_to_json(d).dump() << '\n';
  else if (cfg.format == "csv") out << "x,s_1..s_k\n" << coeff_csv(d) << '\n';
  else out << format_decomposition(d) << '\n';
  return {};
}

Outcome cmd_oracle_check(const RunConfig& cfg, std::uint64_t lo, std::uint64_t hi, std::ostream& out) {
  if (lo < 1 || hi < lo) throw std::domain_error("need 1 <= lo <= hi");
  const std::size_t top = index_of_floor(hi);
  if (top > 9) throw std::domain_error("oracle enumeration is limited to hi < a_10");
  std::map<std::uint64_t, std::vector<std::vector<std::uint32_t>>> found;
  for_each_legal(top, [&](std::span<const std::uint32_t> coeffs) {
    const auto v = value_of(coeffs).convert_to<std::uint64_t>();
    if (v < lo || v > hi) return;
    std::vector<std::uint32_t> c(coeffs.begin(), coeffs.end());
    while (!c.empty() && c.back() == 0) c.pop_back();
    found[v].push_back(std::move(c));
  });
  std::uint64_t mismatches = 0;
  std::optional<std::uint64_t> first_bad;
  for (std::uint64_t x = lo; x <= hi; ++x) {
    auto it = found.find(x);
    const bool ok = it != found.end() && it->second.size() == 1 && it->second.front() == greedy_decompose(BigInt(x)).coeffs;
    if (!ok) {
      ++mismatches;
      if (!first_bad) first_bad = x;
    }
  }
  if (cfg.format == "json") {
    out << json{{"lo", lo}, {"hi", hi}, {"checked", hi - lo + 1}, {"mismatches", mismatches}, {"ok", mismatches == 0}}.dump()
        << '\n';
  } else if (cfg.format == "csv") {
    out << "lo,hi,checked,mismatches\n" << lo << ',' << hi << ',' << hi - lo + 1 << ',' << mismatches << '\n';
  } else if (mismatches == 0) {
    out << "oracle-check [" << lo << ", " << hi << "]: " << hi - lo + 1
        << " values, each with exactly one legal decomposition, equal to the greedy one\n";
  } else {
    out << "oracle-check [" << lo << ", " << hi << "]: " << mismatches << " mismatches, first at " << *first_bad << '\n';
  }
  return {mismatches == 0 ? kExitOk : kExitDomainError};
}

Outcome cmd_gaps(const RunConfig& cfg, std::size_t n, std::size_t to, std::optional<std::uint64_t> sample,
                 std::ostream& out) {
  if (to < n) to = n;
  ScanMode mode = ExactScan{};
  if (sample) {
    require_seed(cfg, "gaps --sample");
    mode = SampledScan{*sample, cfg.seed_or_default()};
  }
  std::vector<IntervalStats> rows;
  for (std::size_t k = n; k <= to; ++k) rows.push_back(interval_gap_stats(k, mode, cfg.threads));
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(interval_stats_to_json(r));
    out << arr.dump() << '\n';
  } else {
    out << interval_stats_csv_header() << '\n';
    for (const auto& r : rows) out << interval_stats_csv_row(r) << '\n';
  }
  return {};
}

Outcome cmd_histogram(const RunConfig& cfg, std::size_t n, bool dp, std::ostream& out) {
  const auto hist = summand_count_distribution(n, dp ? HistogramMode::dp : HistogramMode::enumerate);
  const Moments m = moments_of(hist);
  if (cfg.format == "json") {
    out << json{{"n", n},
                {"mode", dp ? "dp" : "enumerate"},
                {"histogram", histogram_to_json(hist)},
                {"moments",
                 {{"mean", m.mean}, {"variance", m.variance}, {"skewness", m.skewness}, {"kurtosis", m.excess_kurtosis}}}}
               .dump()
        << '\n';
    return {};
  }
  out << "summands,frequency\n";
  for (const auto& [k, f] : hist) out << k << ',' << f << '\n';
  if (cfg.format == "text") {
    out << std::setprecision(10) << "# mean " << m.mean << " variance " << m.variance << " skewness " << m.skewness
        << " kurtosis " << m.excess_kurtosis << '\n';
  }
  return {};
}

Outcome cmd_mc(const RunConfig& cfg, const std::string& x, std::ostream& out) {
  const BigInt n = parse_decimal(x);
  if (n < 1) throw std::domain_error("n must be >= 1");
  const BigInt moves = mc(n);
  if (cfg.format == "json") out << json{{"n", n.str()}, {"mc", moves.str()}}.dump() << '\n';
  else if (cfg.format == "csv") out << "n,mc\n" << n << ',' << moves << '\n';
  else out << "mc(" << n << ") = " << moves << '\n';
  return {};
}

Outcome cmd_mc_scan(const RunConfig& cfg, std::uint64_t limit, std::size_t terms, std::ostream& out) {
  if (limit < 2) throw std::domain_error("N must be >= 2");
  const RatioScan scan = mc_ratio_scan(limit, terms, cfg.threads);
  const std::string max_ratio = decimal_ratio(scan.max_moves, scan.argmax, 10);
  if (cfg.format == "json") {
    json series = json::array();
    for (const auto& t : scan.series)
      series.push_back({{"i", t.index}, {"a_i", t.term.str()}, {"mc", t.moves.str()}, {"ratio", t.ratio}});
    out << json{{"limit", limit},
                {"argmax", scan.argmax},
                {"max_mc", scan.max_moves},
                {"max_ratio", max_ratio},
                {"bound", "0.7757"},
                {"bound_holds", scan.bound_holds},
                {"series", series}}
               .dump()
        << '\n';
  } else if (cfg.format == "csv") {
    out << "n,mc,ratio\n" << scan.argmax << ',' << scan.max_moves << ',' << max_ratio << '\n';
    for (const auto& t : scan.series) out << t.term << ',' << t.moves << ',' << t.ratio << '\n';
  } else {
    out << "max MC(n)/n over n <= " << limit << ": " << scan.max_moves << "/" << scan.argmax << " = " << max_ratio
        << '\n';
    out << (scan.bound_holds ? "bound 0.7757 holds" : "bound 0.7757 VIOLATED") << '\n';
    out << "i,a_i,MC(a_i),ratio\n";
    for (const auto& t : scan.series) out << t.index << ',' << t.term << ',' << t.moves << ',' << t.ratio << '\n';
  }
  return {scan.bound_holds ? kExitOk : kExitDomainError};
}

Outcome cmd_matrix_verify(const RunConfig& cfg, std::size_t k, std::size_t from, std::ostream& out) {
  if (from == 0 || from > k) from = k;
  bool all = true;
  json rows = json::array();
  if (cfg.format == "csv") out << "k,product_is_identity,column_sums_match\n";
  for (std::size_t size = from; size <= k; ++size) {
    const InverseCheck c = check_inverse_identity(size);
    all = all && c.ok();
    if (cfg.format == "json") {
      rows.push_back({{"k", size}, {"product_is_identity", c.product_is_identity}, {"column_sums_match", c.column_sums_match}});
    } else if (cfg.format == "csv") {
      out << size << ',' << c.product_is_identity << ',' << c.column_sums_match << '\n';
    } else {
      out << "k=" << size << ": A*B = I " << (c.product_is_identity ? "yes" : "no") << "; column sums = MC(a_j) "
          << (c.column_sums_match ? "yes" : "no") << '\n';
    }
  }
  if (cfg.format == "json") out << rows.dump() << '\n';
  return {all ? kExitOk : kExitDomainError};
}

Outcome cmd_lengths(const RunConfig& cfg, std::uint64_t n, std::uint64_t to, std::ostream& out) {
  if (n < 2) throw std::domain_error("n must be >= 2");
  if (to < n) to = n;
  json rows = json::array();
  for (std::uint64_t k = n; k <= to; ++k) {
    const GameSpectrum spectrum = game_spectrum(k);
    const auto lengths = spectrum.lengths();
    const auto combines = spectrum.combine_counts();
    if (cfg.format == "json") {
      rows.push_back({{"n", k},
                      {"lengths", lengths},
                      {"combine_counts", combines},
                      {"combine_invariant", combines.size() == 1},
                      {"mc", mc(k)},
                      {"states", spectrum.states}});
    } else if (cfg.format == "csv") {
      out << k;
      for (auto l : lengths) out << ',' << l;
      out << '\n';
    } else {
      if (to != n) out << k << ": ";
      out << format_length_set(lengths) << '\n';
    }
  }
  if (cfg.format == "json") out << rows.dump() << '\n';
  return {};
}

Outcome cmd_solve(const RunConfig& cfg, std::uint64_t n, std::uint64_t to, const TeamSpec& spec, std::ostream& out) {
  if (to < n) to = n;
  spec.validate();
  bool exhausted = false;
  json rows = json::array();
  if (cfg.format != "json") out << winners_csv_header() << '\n';
  for (std::uint64_t k = n; k <= to; ++k) {
    const SolveResult r = solve_team(k, spec, cfg.budget);
    exhausted = exhausted || r.budget_exhausted;
    if (cfg.format == "json") {
      rows.push_back({{"n", k},
                      {"p", spec.players},
                      {"team", spec.team},
                      {"first_mover", spec.first_mover},
                      {"verdict", r.budget_exhausted ? json(nullptr) : json(r.verdict)},
                      {"nodes", r.nodes_expanded},
                      {"budget_exhausted", r.budget_exhausted},
                      {"principal_variation", moves_to_json(r.principal_variation)}});
    } else {
      out << winners_csv_row(k, spec, r) << '\n';
    }
  }
  if (cfg.format == "json") out << rows.dump() << '\n';
  return {exhausted ? kExitBudgetExhausted : kExitOk};
}

Outcome cmd_verify_t9(const RunConfig& cfg, std::uint64_t n, std::uint64_t to, std::ostream& out) {
  if (to < n) to = n;
  bool all = true;
  json rows = json::array();
  if (cfg.format == "csv") out << "n,seat,holds,states,antagonist_split_offers,fallback_turns,fallback_splits\n";
  for (std::uint64_t k = n; k <= to; ++k) {
    for (std::uint32_t seat : {1u, 2u}) {
      const NoSplitReport r = no_split_report(k, seat);
      all = all && r.holds();
      if (cfg.format == "json") {
        rows.push_back({{"n", k},
                        {"seat", seat},
                        {"holds", r.holds()},
                        {"states", r.states},
                        {"antagonist_split_offers", r.antagonist_split_offers},
                        {"protagonist_stuck", r.protagonist_stuck},
                        {"fallback_turns", r.fallback_turns},
                        {"fallback_splits", r.fallback_splits}});
      } else if (cfg.format == "csv") {
        out << k << ',' << seat << ',' << r.holds() << ',' << r.states << ',' << r.antagonist_split_offers << ','
            << r.fallback_turns << ',' << r.fallback_splits << '\n';
      } else {
        out << "n=" << k << " protagonist seat " << seat << ": " << (r.holds() ? "no split reachable" : "FAILS") << " ("
            << r.states << " states";
        if (r.fallback_splits) out << "; " << r.fallback_splits << " forced splits after the 1's ran out";
        out << ")\n";
      }
    }
  }
  if (cfg.format == "json") out << rows.dump() << '\n';
  return {all ? kExitOk : kExitDomainError};
}

Outcome cmd_split_probe(const RunConfig& cfg, std::size_t max_index, std::ostream& out) {
  json rows = json::array();
  if (cfg.format != "json") out << "i,a_i,protagonist_first_split_free,protagonist_second_split_free,every_game_split_free\n";
  for (std::size_t i = 2; i <= max_index; ++i) {
    const std::uint64_t n = machine_term(i);
    const bool first = no_split_report(n, 1).fully_split_free();
    const bool second = no_split_report(n, 2).fully_split_free();
    const bool every = every_game_split_free(n);
    if (cfg.format == "json") {
      rows.push_back({{"i", i}, {"a_i", n}, {"protagonist_first", first}, {"protagonist_second", second}, {"every_game", every}});
    } else {
      out << i << ',' << n << ',' << first << ',' << second << ',' << every << '\n';
    }
  }
  if (cfg.format == "json") out << rows.dump() << '\n';
  return {};
}

Outcome cmd_simulate(const RunConfig& cfg, std::uint64_t n, const std::string& p1, const std::string& p2,
                     std::ostream& out) {
  if (n < 2) throw std::domain_error("n must be >= 2");
  if (p1 == "uniform" || p2 == "uniform") require_seed(cfg, "simulate with a uniform bot");
  const std::uint64_t seed = cfg.seed_or_default();
  Strategy bots[2];
  try {
    bots[0] = make_bot(p1, BotOptions{seed, cfg.budget});
    bots[1] = make_bot(p2, BotOptions{seed + 1, cfg.budget});
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  GameState s = initial_state(n);
  std::vector<std::pair<std::uint32_t, Move>> history;
  std::uint32_t seat = 1;
  while (!is_terminal(s)) {
    const Move m = bots[seat - 1].choose(s, Turn{seat, 2});
    s = apply_move(s, m);
    history.emplace_back(seat, m);
    seat = 3 - seat;
  }
  const std::uint32_t winner = history.back().first;
  if (cfg.format == "json") {
    json moves = json::array();
    for (const auto& [who, m] : history) moves.push_back({{"seat", who}, {"move", move_to_json(m)}});
    out << json{{"n", n}, {"p1", p1}, {"p2", p2}, {"seed", seed}, {"history", moves}, {"final", state_to_json(s)}, {"winner", winner}}
               .dump()
        << '\n';
    return {};
  }
  if (cfg.format == "csv") {
    out << "ply,seat,move\n";
    for (std::size_t k = 0; k < history.size(); ++k) out << k + 1 << ',' << history[k].first << ',' << to_string(history[k].second) << '\n';
    return {};
  }
  for (std::size_t k = 0; k < history.size(); ++k)
    out << k + 1 << ". seat " << history[k].first << ": " << to_string(history[k].second) << '\n';
  out << "final counts:";
  for (auto c : s.counts()) out << ' ' << c;
  out << "\nwinner: seat " << winner << " (" << (winner == 1 ? p1 : p2) << ") after " << history.size() << " moves\n";
  return {};
}

int cmd_serve(const std::string& host, int port, const std::string& log_dir, std::uint64_t bot_cap_ms,
              const RunConfig& cfg, std::ostream& err) {
  ServiceConfig config;
  config.bot_time_cap = std::chrono::milliseconds(bot_cap_ms);
  config.bot_budget = cfg.budget;
  config.default_analysis_budget = cfg.budget;
  if (!log_dir.empty()) config.log_dir = log_dir;
  GameService service(config);
  const std::size_t restored = service.load_logs();
  HttpServer server(service);
  const int bound = server.bind(host, port);
  if (bound < 0) {
    err << "cannot bind " << host << ':' << port << '\n';
    return kExitDomainError;
  }
  err << "serving on http://" << host << ':' << bound << " (" << restored << " sessions restored)\n";
  server.listen_after_bind();
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decompositions and the Zeckendorf-type game for a_{i+1} = i*a_i + a_{i-1}", "zeck"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::uint64_t seed = 0;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("-o,--output", cfg.output, "Write results to this file");
  auto* seed_opt = app.add_option("--seed", seed, "Seed for randomized paths");
  app.add_option("--budget", cfg.budget, "Solver node budget");
  app.add_option("--threads", cfg.threads, "Worker threads for scans")->check(CLI::Range(1u, 256u));
  app.add_flag("--ci", cfg.ci, "Require explicit seeds on randomized paths");

  std::size_t k = 0, n_index = 0, to_index = 0, from = 0, terms = 50, max_index = 6;
  std::uint64_t n = 0, to = 0, lo = 0, hi = 0, limit = 0, sample = 0, bot_cap_ms = 2000;
  std::string x, team = "1", p1, p2, host = "127.0.0.1", log_dir;
  std::uint32_t players = 2, first_mover = 1;
  int port = 8080;
  bool dp = false;

  auto* seq = app.add_subcommand("seq", "Print a_1..a_k");
  seq->add_option("k", k)->required();

  auto* decompose = app.add_subcommand("decompose", "Legal decomposition of x (any length decimal)");
  decompose->add_option("x", x)->required();

  auto* oracle = app.add_subcommand("oracle-check", "Brute-force uniqueness and greedy check on [lo, hi]");
  oracle->add_option("lo", lo)->required();
  oracle->add_option("hi", hi)->required();

  auto* gaps = app.add_subcommand("gaps", "Gap statistics over I(n) = [a_n, a_{n+1})");
  gaps->add_option("n", n_index)->required();
  gaps->add_option("--to", to_index, "Last interval index of a range");
  auto* sample_opt = gaps->add_option("--sample", sample, "Uniform sample size instead of the exact scan");

  auto* histogram = app.add_subcommand("histogram", "Summand-count histogram over I(n)");
  histogram->add_option("n", n_index)->required();
  histogram->add_flag("--dp", dp, "Count by dynamic programming instead of enumeration");

  auto* mc_cmd = app.add_subcommand("mc", "Number of combining moves in any game on n");
  mc_cmd->add_option("n", x)->required();

  auto* scan = app.add_subcommand("mc-scan", "Max MC(n)/n over n <= N and the MC(a_i)/a_i series");
  scan->add_option("N", limit)->required();
  scan->add_option("--terms", terms, "Length of the MC(a_i)/a_i series");

  auto* matrix = app.add_subcommand("matrix-verify", "Exact check of A*B = I and the MC column sums");
  matrix->add_option("k", k)->required()->check(CLI::Range(std::size_t{3}, std::size_t{400}));
  matrix->add_option("--from", from, "Check every size from this one up to k")->check(CLI::Range(std::size_t{3}, std::size_t{400}));

  auto* lengths = app.add_subcommand("lengths", "Set of achievable complete-game lengths");
  lengths->add_option("n", n)->required();
  lengths->add_option("--to", to, "Last n of a range");

  auto* solve = app.add_subcommand("solve", "Can the team force the last move?");
  solve->add_option("n", n)->required();
  solve->add_option("--to", to, "Last n of a range");
  solve->add_option("--players", players, "Number of players");
  solve->add_option("--team", team, "Comma-separated team seats");
  solve->add_option("--first-mover", first_mover, "Seat that moves first");

  auto* t9 = app.add_subcommand("verify-t9", "Exhaustive no-split check of the protagonist policy, both seats");
  t9->add_option("n", n)->required();
  t9->add_option("--to", to, "Last n of a range");

  auto* conj = app.add_subcommand("split-probe", "Report split-freeness of games on n = a_i");
  conj->add_option("--max-index", max_index, "Largest i probed")->check(CLI::Range(std::size_t{2}, std::size_t{6}));

  auto* simulate = app.add_subcommand("simulate", "Bot vs bot game");
  simulate->add_option("n", n)->required();
  simulate->add_option("--p1", p1, "Strategy of seat 1")->required();
  simulate->add_option("--p2", p2, "Strategy of seat 2")->required();

  auto* serve = app.add_subcommand("serve", "Run the JSON-over-HTTP game service");
  serve->add_option("--port", port, "TCP port")->check(CLI::Range(0, 65535));
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--log-dir", log_dir, "Append-only session logs");
  serve->add_option("--bot-cap-ms", bot_cap_ms, "Per-request bot time cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitDomainError;
  }
  if (*seed_opt) cfg.seed = seed;

  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      err << "error: cannot open " << cfg.output << '\n';
      return kExitDomainError;
    }
  }
  std::ostream& sink = cfg.output.empty() ? out : file;

  try {
    Outcome r;
    if (*seq) r = cmd_seq(cfg, k, sink);
    else if (*decompose) r = cmd_decompose(cfg, x, sink);
    else if (*oracle) r = cmd_oracle_check(cfg, lo, hi, sink);
    else if (*gaps) r = cmd_gaps(cfg, n_index, to_index, *sample_opt ? std::optional(sample) : std::nullopt, sink);
    else if (*histogram) r = cmd_histogram(cfg, n_index, dp, sink);
    else if (*mc_cmd) r = cmd_mc(cfg, x, sink);
    else if (*scan) r = cmd_mc_scan(cfg, limit, terms, sink);
    else if (*matrix) r = cmd_matrix_verify(cfg, k, from, sink);
    else if (*lengths) r = cmd_lengths(cfg, n, to, sink);
    else if (*solve) r = cmd_solve(cfg, n, to, TeamSpec{players, parse_team(team), first_mover}, sink);
    else if (*t9) r = cmd_verify_t9(cfg, n, to, sink);
    else if (*conj) r = cmd_split_probe(cfg, max_index, sink);
    else if (*simulate) r = cmd_simulate(cfg, n, p1, p2, sink);
    else if (*serve) return cmd_serve(host, port, log_dir, bot_cap_ms, cfg, err);
    if (r.code == kExitBudgetExhausted) err << "error: solver budget exhausted; verdict unknown\n";
    return r.code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
}

}  // namespace zeck
