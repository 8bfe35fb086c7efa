#pragma once

#include "zeck/bigint.hpp"
#include "zeck/decomposition.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace zeck {

// Index differences between consecutive summands, listed with multiplicity in
// increasing index order. Repeated summands contribute gaps of length 0.
struct GapProfile {
  std::vector<std::uint32_t> gaps;
};

// Throws std::domain_error for the empty decomposition.
GapProfile gaps_of(const Decomposition& d);

struct Moments {
  double mean = 0;
  double variance = 0;
  double skewness = 0;
  double excess_kurtosis = 0;
};

using SummandHistogram = std::map<std::uint32_t, BigInt>;

Moments moments_of(const SummandHistogram& hist);

// Aggregate gap and summand statistics over I(n) = [a_n, a_{n+1}).
struct IntervalStats {
  std::size_t n = 0;
  std::uint64_t interval_size = 0;  // a_{n+1} - a_n
  std::uint64_t processed = 0;      // integers aggregated (== interval_size in exact mode)
  std::uint64_t total_gaps = 0;
  std::uint64_t nonzero_gaps = 0;
  std::map<std::uint32_t, std::uint64_t> gap_histogram;
  std::map<std::uint32_t, std::uint64_t> summand_count_histogram;
  // occurrences_by_index[i - 1] = total copies of a_i over processed integers
  std::vector<std::uint64_t> occurrences_by_index;

  // Associative and commutative; the result does not depend on partitioning.
  void merge(const IntervalStats& other);

  double proportion_nonzero() const;
  Moments moments() const;
  // Mean copies of a_i per processed integer.
  std::vector<double> index_means() const;
};

struct ExactScan {};
struct SampledScan {
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
};
using ScanMode = std::variant<ExactScan, SampledScan>;

// Requires n >= 2 and a_{n+1} representable in 64 bits. `threads` partitions the
// exact scan; sampled scans are single-stream so results depend only on the seed.
IntervalStats interval_gap_stats(std::size_t n, const ScanMode& mode = ExactScan{},
                                 unsigned threads = 1);

enum class HistogramMode { enumerate, dp };

// Frequency of each total summand count over I(n). The dp mode counts legal
// coefficient vectors with s_n >= 1 without touching integers at all.
SummandHistogram summand_count_distribution(std::size_t n, HistogramMode mode);

std::string interval_stats_csv_header();
std::string interval_stats_csv_row(const IntervalStats& s);

}  // namespace zeck
