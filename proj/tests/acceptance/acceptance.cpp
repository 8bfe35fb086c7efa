// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failures (capped at 1).

#include "oracles.hpp"
#include "zeck/decomposition.hpp"
#include "zeck/game.hpp"
#include "zeck/gaps_stats.hpp"
#include "zeck/move_counts.hpp"
#include "zeck/sequence.hpp"
#include "zeck/solver.hpp"
#include "zeck/strategies.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

using namespace zeck;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void criterion(const char* name, double time_limit_s, const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto start = Clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (time_limit_s > 0) {
    std::ostringstream limit;
    limit << "runtime " << secs << " s exceeds " << time_limit_s << " s";
    v.require(secs < time_limit_s, limit.str());
  }
  if (!v.pass) ++failures;
  std::string detail = v.detail.str();
  while (!detail.empty() && (detail.back() == ' ' || detail.back() == ';' || detail.back() == ',')) detail.pop_back();
  std::printf("%s  %-28s %s [%.2f s]\n", v.pass ? "PASS" : "FAIL", name, detail.c_str(), secs);
  std::fflush(stdout);
}

unsigned worker_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

std::vector<int> to_int(std::span<const std::uint32_t> v) { return {v.begin(), v.end()}; }

}  // namespace

int main() {
  std::cout.setf(std::ios::fixed);

  criterion("uniqueness-and-greedy", 60, [](Verdict& v) {
    constexpr std::uint64_t kHi = 20000;
    std::vector<int> hits(kHi + 1, 0);
    std::vector<std::vector<std::uint32_t>> found(kHi + 1);
    const auto all = enumerate_legal(8);  // every legal vector below a_9 = 137861
    for (const auto& d : all) {
      const auto x = d.value.convert_to<std::uint64_t>();
      if (x >= 1 && x <= kHi) {
        ++hits[x];
        found[x] = d.coeffs;
      }
    }
    // independent brute force over the full coefficient box
    const auto box = oracle::legal_by_value(8);
    std::uint64_t checked = 0;
    for (std::uint64_t x = 1; x <= kHi; ++x) {
      const auto g = greedy_decompose(BigInt(x));
      v.require(hits[x] == 1, "x=" + std::to_string(x) + " has " + std::to_string(hits[x]) + " legal decompositions");
      v.require(found[x] == g.coeffs, "x=" + std::to_string(x) + " differs from greedy");
      const auto it = box.find(x);
      v.require(it != box.end() && it->second.size() == 1, "brute force count at x=" + std::to_string(x));
      if (it != box.end()) {
        auto padded = to_int(g.coeffs);
        padded.resize(8, 0);
        v.require(it->second.front() == padded, "brute force vector at x=" + std::to_string(x));
      }
      ++checked;
    }
    v.detail << "x in [1, 20000]: " << checked << " values, one legal decomposition each, equal to greedy; ";
  });

  criterion("max-legal-value", 0, [](Verdict& v) {
    for (std::size_t n = 1; n <= 8; ++n) {
      BigInt best = 0;
      for (const auto& d : enumerate_legal(n)) best = std::max(best, d.value);
      v.require(best == BigInt(machine_term(n + 1) - 1), "n=" + std::to_string(n));
    }
    v.detail << "max over legal vectors of length n is a_{n+1} - 1 for n = 1..8; ";
  });

  criterion("worked-example-33", 0, [](Verdict& v) {
    const auto d = greedy_decompose(BigInt(33));
    v.require(d.coeffs == std::vector<std::uint32_t>{1, 0, 3, 1}, "coefficients");
    v.detail << format_decomposition(d) << "; ";
  });

  criterion("gap-trend", 300, [](Verdict& v) {
    double prev = 2.0;
    for (std::size_t n = 4; n <= 9; ++n) {
      const IntervalStats s = interval_gap_stats(n, ExactScan{}, worker_threads());
      v.require(s.processed == s.interval_size, "exact scan incomplete at n=" + std::to_string(n));
      const double p = s.proportion_nonzero();
      v.require(p < prev, "not strictly decreasing at n=" + std::to_string(n));
      char buf[64];
      std::snprintf(buf, sizeof buf, "n=%zu %.4f, ", n, p);
      v.detail << buf;
      prev = p;
    }
    v.detail << "strictly decreasing; ";
  });

  criterion("summand-histogram", 0, [](Verdict& v) {
    for (std::size_t n = 2; n <= 8; ++n)
      v.require(summand_count_distribution(n, HistogramMode::enumerate) ==
                    summand_count_distribution(n, HistogramMode::dp),
                "DP and enumeration differ at n=" + std::to_string(n));
    const Moments m5 = moments_of(summand_count_distribution(5, HistogramMode::dp));
    const Moments m9 = moments_of(summand_count_distribution(9, HistogramMode::dp));
    // cross-check n=9 against the exact interval scan
    const Moments s9 = interval_gap_stats(9, ExactScan{}, worker_threads()).moments();
    v.require(std::abs(s9.skewness - m9.skewness) < 1e-9, "scan and DP skewness disagree at n=9");
    v.require(std::abs(m9.skewness) < std::abs(m5.skewness), "|skew(9)| >= |skew(5)|");
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "DP == enumeration for n=2..8; n=5 mean %.4f var %.4f skew %.4f kurt %.4f; "
                  "n=9 mean %.4f var %.4f skew %.4f kurt %.4f; ",
                  m5.mean, m5.variance, m5.skewness, m5.excess_kurtosis, m9.mean, m9.variance, m9.skewness,
                  m9.excess_kurtosis);
    v.detail << buf;
  });

  criterion("playouts-terminate-at-greedy", 0, [](Verdict& v) {
    std::uint64_t games = 0, max_moves_seen = 0;
    for (std::uint64_t n = 2; n <= 60; ++n) {
      auto greedy = greedy_decompose(BigInt(n)).coeffs;
      const std::uint64_t lz = summand_count(greedy_decompose(BigInt(n)));
      for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
        const auto history = random_playout(initial_state(n), seed);
        GameState s = initial_state(n);
        for (const Move& m : history) {
          s = apply_move(s, m);
          if (oracle::weight(oracle::Counts(s.counts().begin(), s.counts().end())) != n) {
            v.require(false, "conservation at n=" + std::to_string(n) + " seed=" + std::to_string(seed));
          }
        }
        greedy.resize(s.top_index(), 0);
        v.require(is_terminal(s), "not terminal");
        v.require(std::vector<std::uint32_t>(s.counts().begin(), s.counts().end()) == greedy,
                  "end state differs from greedy at n=" + std::to_string(n));
        v.require(history.size() <= n - lz, "too many moves at n=" + std::to_string(n));
        max_moves_seen = std::max<std::uint64_t>(max_moves_seen, history.size());
        ++games;
      }
    }
    v.detail << games << " seeded games for n=2..60 end at greedy within n - LZ(n) moves, value conserved every move; ";
  });

  criterion("length-parity", 0, [](Verdict& v) {
    const auto six = enumerate_game_lengths(6);
    v.require(six == std::set<std::uint64_t>{3, 4}, "lengths(6)");
    v.detail << "lengths(6) = " << format_length_set(six) << "; ";
    for (std::uint64_t n = 6; n <= 20; ++n) {
      const auto l = enumerate_game_lengths(n);
      const bool odd = std::any_of(l.begin(), l.end(), [](auto x) { return x % 2 == 1; });
      const bool even = std::any_of(l.begin(), l.end(), [](auto x) { return x % 2 == 0; });
      v.require(odd && even, "n=" + std::to_string(n) + " lacks a parity");
      if (n <= 14) {
        const auto o = oracle::game_lengths(n);
        v.require(std::set<std::uint64_t>(o.begin(), o.end()) == l, "oracle disagrees at n=" + std::to_string(n));
      }
    }
    v.detail << "n=6..20 each admit odd and even lengths; ";
  });

  criterion("mc-table", 0, [](Verdict& v) {
    const std::vector<std::uint64_t> expected{0, 1, 3, 11, 48, 252, 1561, 11180};
    for (std::size_t i = 1; i <= 8; ++i) {
      v.require(mc_of_term(i) == expected[i - 1], "i=" + std::to_string(i));
      v.require(static_cast<std::uint64_t>(oracle::combines_along_one_game(machine_term(i))) == expected[i - 1],
                "played game disagrees at i=" + std::to_string(i));
    }
    v.detail << "MC(a_1..a_8) = 0,1,3,11,48,252,1561,11180; ";
  });

  criterion("combine-invariance", 600, [](Verdict& v) {
    for (std::uint64_t n = 2; n <= 14; ++n) {
      const GameSpectrum s = game_spectrum(n);
      const auto combines = s.combine_counts();
      const auto lengths = s.lengths();
      v.require(combines.size() == 1, "combine count varies at n=" + std::to_string(n));
      if (combines.size() != 1) continue;
      v.require(*combines.begin() == mc(n), "count != mc(n) at n=" + std::to_string(n));
      v.require(*lengths.begin() == mc(n), "shortest game != mc(n) at n=" + std::to_string(n));
      std::set<std::pair<int, int>> o;
      oracle::all_games(oracle::start(n), 0, 0, o);
      std::set<int> oc;
      for (auto [c, sp] : o) oc.insert(c);
      v.require(oc == std::set<int>{static_cast<int>(mc(n))}, "oracle combine counts at n=" + std::to_string(n));
    }
    v.detail << "n=2..14: one combine count per n, equal to mc(n) and to the shortest length; ";
  });

  criterion("ratio-bound", 0, [](Verdict& v) {
    const RatioScan scan = mc_ratio_scan(100'000, 50, worker_threads());
    v.require(scan.bound_holds, "MC(n)/n >= 0.7757 somewhere");
    // independent re-check of the bound on every n
    for (std::uint64_t n = 1; n <= 100'000; ++n)
      if (mc(n) * kBoundDenominator >= kBoundNumerator * n) v.require(false, "n=" + std::to_string(n));
    SequenceTable& seq = thread_sequence();
    const BigInt a50 = seq.term(50);
    const BigInt m50 = mc_of_term(50);
    v.require(m50 * 10000 > a50 * 6571 && m50 * 10000 < a50 * 6631, "MC(a_50)/a_50 outside (0.6571, 0.6631)");
    v.detail << "max MC(n)/n for n <= 1e5 is " << scan.max_moves << "/" << scan.argmax << " = "
             << decimal_ratio(BigInt(scan.max_moves), BigInt(scan.argmax), 6) << " < 0.7757; MC(a_50)/a_50 = "
             << decimal_ratio(m50, a50, 8) << "; ";
  });

  criterion("matrix-inverse", 0, [](Verdict& v) {
    for (std::size_t k = 3; k <= 12; ++k) {
      const InverseCheck c = check_inverse_identity(k);
      v.require(c.product_is_identity, "A*B != I at k=" + std::to_string(k));
      v.require(c.column_sums_match, "column sums at k=" + std::to_string(k));
      const auto inv = oracle::unit_upper_inverse(oracle::matrix_A(static_cast<int>(k)));
      const ExactMatrix B = build_matrix_B(k);
      for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t j = 1; j <= k; ++j)
          v.require(B(i, j) == inv[i - 1][j - 1], "B differs from back substitution at k=" + std::to_string(k));
    }
    v.detail << "k=3..12: A*B = I and column sums of rows 2..j equal MC(a_j); ";
  });

  criterion("three-player-second-seat", 0, [](Verdict& v) {
    for (std::uint64_t n = 5; n <= 12; ++n) {
      const SolveResult r = solve_team(n, TeamSpec{3, {2}, 1});
      v.require(!r.budget_exhausted, "budget exhausted at n=" + std::to_string(n));
      v.require(!r.verdict, "seat 2 wins at n=" + std::to_string(n));
      if (n <= 10)
        v.require(!oracle::team_wins(oracle::start(n), 1, 3, {2}), "oracle disagrees at n=" + std::to_string(n));
    }
    const SolveResult five = solve_team(5, TeamSpec{3, {3}, 1});
    v.require(!five.budget_exhausted && five.verdict, "seat 3 does not win n=5");
    v.detail << "p=3 team {2}: false for n=5..12; p=3 team {3}, n=5: true; ";
  });

  criterion("four-player-probe", 0, [](Verdict& v) {
    for (std::uint32_t m = 1; m <= 4; ++m) {
      const SolveResult r = solve_team(16, TeamSpec{4, {m}, 1});
      if (r.budget_exhausted) {
        v.detail << "m=" << m << " budget exhausted after " << r.nodes_expanded << " nodes, ";
        continue;
      }
      v.require(!r.verdict, "seat " + std::to_string(m) + " wins n=16");
      v.detail << "m=" << m << " false (" << r.nodes_expanded << " nodes), ";
    }
  });

  criterion("protagonist-no-split", 0, [](Verdict& v) {
    std::uint64_t states = 0, forced = 0;
    for (std::uint64_t n = 2; n <= 25; ++n) {
      for (std::uint32_t seat : {1u, 2u}) {
        const NoSplitReport r = no_split_report(n, seat);
        v.require(verify_no_split_reachable(n, seat),
                  "n=" + std::to_string(n) + " seat " + std::to_string(seat));
        states += r.states;
        forced += r.fallback_splits;
      }
    }
    v.detail << "n=2..25, both seats, every antagonist line: no split while the protagonist still holds 1's ("
             << states << " states; " << forced << " forced splits once no 1's remain); ";
  });

  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
