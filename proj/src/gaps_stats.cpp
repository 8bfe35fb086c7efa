#include "zeck/gaps_stats.hpp"

#include "zeck/sequence.hpp"

#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace zeck {

GapProfile gaps_of(const Decomposition& d) {
  if (summand_count(d) == 0) throw std::domain_error("gaps_of requires at least one summand");
  GapProfile profile;
  std::size_t prev = 0;
  for (std::size_t i = 1; i <= d.coeffs.size(); ++i) {
    for (std::uint32_t c = 0; c < d.coeffs[i - 1]; ++c) {
      if (prev != 0) profile.gaps.push_back(static_cast<std::uint32_t>(i - prev));
      prev = i;
    }
  }
  return profile;
}

Moments moments_of(const SummandHistogram& hist) {
  double total = 0, sum = 0;
  for (const auto& [count, freq] : hist) {
    const double f = freq.convert_to<double>();
    total += f;
    sum += f * count;
  }
  Moments m;
  if (total == 0) return m;
  m.mean = sum / total;
  double m2 = 0, m3 = 0, m4 = 0;
  for (const auto& [count, freq] : hist) {
    const double f = freq.convert_to<double>();
    const double d = count - m.mean;
    m2 += f * d * d;
    m3 += f * d * d * d;
    m4 += f * d * d * d * d;
  }
  m2 /= total;
  m3 /= total;
  m4 /= total;
  m.variance = m2;
  if (m2 > 0) {
    m.skewness = m3 / std::pow(m2, 1.5);
    m.excess_kurtosis = m4 / (m2 * m2) - 3.0;
  }
  return m;
}

void IntervalStats::merge(const IntervalStats& other) {
  processed += other.processed;
  total_gaps += other.total_gaps;
  nonzero_gaps += other.nonzero_gaps;
  for (const auto& [len, c] : other.gap_histogram) gap_histogram[len] += c;
  for (const auto& [k, c] : other.summand_count_histogram) summand_count_histogram[k] += c;
  if (occurrences_by_index.size() < other.occurrences_by_index.size())
    occurrences_by_index.resize(other.occurrences_by_index.size(), 0);
  for (std::size_t i = 0; i < other.occurrences_by_index.size(); ++i)
    occurrences_by_index[i] += other.occurrences_by_index[i];
}

double IntervalStats::proportion_nonzero() const {
  return total_gaps == 0 ? 0.0 : static_cast<double>(nonzero_gaps) / static_cast<double>(total_gaps);
}

Moments IntervalStats::moments() const {
  SummandHistogram hist;
  for (const auto& [k, c] : summand_count_histogram) hist[k] = c;
  return moments_of(hist);
}

std::vector<double> IntervalStats::index_means() const {
  std::vector<double> means;
  for (auto c : occurrences_by_index)
    means.push_back(processed == 0 ? 0.0 : static_cast<double>(c) / static_cast<double>(processed));
  return means;
}

namespace {

void accumulate(std::uint64_t m, std::vector<std::uint32_t>& coeffs, IntervalStats& s) {
  greedy_coefficients(m, coeffs);
  std::uint64_t summands = 0;
  std::size_t prev_index = 0;
  for (std::size_t i = 1; i <= coeffs.size(); ++i) {
    const std::uint32_t c = coeffs[i - 1];
    if (c == 0) continue;
    summands += c;
    s.occurrences_by_index[i - 1] += c;
    if (c > 1) s.gap_histogram[0] += c - 1;
    if (prev_index != 0) s.gap_histogram[static_cast<std::uint32_t>(i - prev_index)] += 1;
    if (prev_index != 0) ++s.nonzero_gaps;
    prev_index = i;
  }
  s.total_gaps += summands - 1;
  s.summand_count_histogram[static_cast<std::uint32_t>(summands)] += 1;
  ++s.processed;
}

IntervalStats empty_stats(std::size_t n) {
  IntervalStats s;
  s.n = n;
  s.interval_size = machine_term(n + 1) - machine_term(n);
  s.occurrences_by_index.assign(n, 0);
  return s;
}

}  // namespace

IntervalStats interval_gap_stats(std::size_t n, const ScanMode& mode, unsigned threads) {
  if (n < 2) throw std::domain_error("interval_gap_stats requires n >= 2");
  if (n + 1 > kMachineTermCount) throw std::domain_error("interval too large for a scan");
  const std::uint64_t lo = machine_term(n);
  const std::uint64_t hi = machine_term(n + 1);
  IntervalStats result = empty_stats(n);

  if (const auto* sampled = std::get_if<SampledScan>(&mode)) {
    std::mt19937_64 rng(sampled->seed);
    std::uniform_int_distribution<std::uint64_t> pick(lo, hi - 1);
    std::vector<std::uint32_t> coeffs;
    for (std::uint64_t k = 0; k < sampled->count; ++k) accumulate(pick(rng), coeffs, result);
    return result;
  }

  threads = std::max(1u, threads);
  const std::uint64_t span = hi - lo;
  std::vector<IntervalStats> parts(threads, result);
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t begin = lo + span * t / threads;
    const std::uint64_t end = lo + span * (t + 1) / threads;
    workers.emplace_back([&, t, begin, end] {
      std::vector<std::uint32_t> coeffs;
      for (std::uint64_t m = begin; m < end; ++m) accumulate(m, coeffs, parts[t]);
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& p : parts) result.merge(p);
  return result;
}

SummandHistogram summand_count_distribution(std::size_t n, HistogramMode mode) {
  if (n < 2) throw std::domain_error("summand_count_distribution requires n >= 2");
  SummandHistogram hist;

  if (mode == HistogramMode::enumerate) {
    if (n + 1 > kMachineTermCount) throw std::domain_error("interval too large to enumerate");
    std::map<std::uint32_t, std::uint64_t> counts;
    std::vector<std::uint32_t> coeffs;
    for (std::uint64_t m = machine_term(n); m < machine_term(n + 1); ++m) {
      greedy_coefficients(m, coeffs);
      std::uint32_t total = 0;
      for (auto c : coeffs) total += c;
      ++counts[total];
    }
    for (const auto& [k, c] : counts) hist[k] = c;
    return hist;
  }

  // by_flag[f][c]: number of ways to fill indices above the current one with
  // summand total c, where f says whether the index just above was saturated.
  std::vector<std::vector<BigInt>> by_flag(2, std::vector<BigInt>(1, 0));
  auto add = [](std::vector<BigInt>& v, std::size_t at, const BigInt& x) {
    if (v.size() <= at) v.resize(at + 1, 0);
    v[at] += x;
  };
  for (std::uint32_t s = 1; s <= n; ++s) add(by_flag[s == n ? 1 : 0], s, 1);
  for (std::size_t i = n - 1; i >= 1; --i) {
    std::vector<std::vector<BigInt>> next(2, std::vector<BigInt>(1, 0));
    for (int flag = 0; flag < 2; ++flag) {
      const std::uint32_t limit = flag ? 0 : static_cast<std::uint32_t>(i);
      for (std::size_t c = 0; c < by_flag[flag].size(); ++c) {
        if (by_flag[flag][c] == 0) continue;
        for (std::uint32_t s = 0; s <= limit; ++s) add(next[s == i ? 1 : 0], c + s, by_flag[flag][c]);
      }
    }
    by_flag = std::move(next);
  }
  for (int flag = 0; flag < 2; ++flag)
    for (std::size_t c = 0; c < by_flag[flag].size(); ++c)
      if (by_flag[flag][c] != 0) hist[static_cast<std::uint32_t>(c)] += by_flag[flag][c];
  return hist;
}

std::string interval_stats_csv_header() {
  return "n,interval_size,total_gaps,nonzero_gaps,proportion_nonzero,mean,variance,skewness,kurtosis";
}

std::string interval_stats_csv_row(const IntervalStats& s) {
  const Moments m = s.moments();
  std::ostringstream out;
  out << std::setprecision(10);
  out << s.n << ',' << s.interval_size << ',' << s.total_gaps << ',' << s.nonzero_gaps << ','
      << s.proportion_nonzero() << ',' << m.mean << ',' << m.variance << ',' << m.skewness << ','
      << m.excess_kurtosis;
  return out.str();
}

}  // namespace zeck
