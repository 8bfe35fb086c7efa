#include "zeck/move_counts.hpp"

#include "zeck/decomposition.hpp"
#include "zeck/sequence.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace zeck {

namespace {

std::vector<BigInt>& mc_table() {
  thread_local std::vector<BigInt> table{0, 1};  // table[i - 1] == MC(a_i)
  return table;
}

// MC(a_i) for every a_i below 2^64; MC(a_i) < a_i so these fit too.
std::vector<std::uint64_t> machine_mc_terms() {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 1; i <= kMachineTermCount; ++i) out.push_back(mc_of_term(i).convert_to<std::uint64_t>());
  return out;
}

}  // namespace

const BigInt& mc_of_term(std::size_t i) {
  if (i == 0) throw std::domain_error("MC index must be >= 1");
  auto& table = mc_table();
  while (table.size() < i) {
    const std::size_t next = table.size() + 1;  // computing MC(a_next), next >= 3
    table.push_back(BigInt(next - 1) * table[next - 2] + table[next - 3] + 1);
  }
  return table[i - 1];
}

BigInt mc(const BigInt& n) {
  if (n < 0) throw std::domain_error("mc requires n >= 0");
  if (n == 0) return 0;
  const Decomposition d = greedy_decompose(n);
  BigInt total = 0;
  for (std::size_t i = 1; i <= d.coeffs.size(); ++i) total += BigInt(d.coeffs[i - 1]) * mc_of_term(i);
  return total;
}

std::uint64_t mc(std::uint64_t n) {
  static const std::vector<std::uint64_t> terms = machine_mc_terms();
  thread_local std::vector<std::uint32_t> coeffs;
  greedy_coefficients(n, coeffs);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) total += coeffs[i] * terms[i];
  return total;
}

RatioScan mc_ratio_scan(std::uint64_t limit, std::size_t series_terms, unsigned threads) {
  if (limit < 1) throw std::domain_error("mc_ratio_scan requires N >= 1");
  struct Best {
    std::uint64_t n = 1;
    std::uint64_t moves = 0;
    bool holds = true;
  };
  threads = std::max(1u, threads);
  std::vector<Best> partial(threads);
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t begin = 1 + limit * t / threads;
    const std::uint64_t end = 1 + limit * (t + 1) / threads;
    workers.emplace_back([&, t, begin, end] {
      Best best{begin, mc(begin), true};
      for (std::uint64_t n = begin; n < end; ++n) {
        const std::uint64_t moves = mc(n);
        // moves/n > best.moves/best.n, compared exactly
        if (BigInt(moves) * best.n > BigInt(best.moves) * n) best = {n, moves, best.holds};
        if (BigInt(moves) * kBoundDenominator >= BigInt(kBoundNumerator) * n) best.holds = false;
      }
      partial[t] = best;
    });
  }
  for (auto& w : workers) w.join();

  RatioScan scan;
  scan.limit = limit;
  Best best = partial.front();
  for (const Best& b : partial) {
    best.holds = best.holds && b.holds;
    if (BigInt(b.moves) * best.n > BigInt(best.moves) * b.n) best = {b.n, b.moves, best.holds};
  }
  scan.argmax = best.n;
  scan.max_moves = best.moves;
  scan.bound_holds = best.holds;

  SequenceTable& seq = thread_sequence();
  for (std::size_t i = 1; i <= series_terms; ++i)
    scan.series.push_back({i, seq.term(i), mc_of_term(i), decimal_ratio(mc_of_term(i), seq.term(i), 10)});
  return scan;
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

bool ExactMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 1; i <= rows_; ++i)
    for (std::size_t j = 1; j <= cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimensions do not agree");
  ExactMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 1; i <= a.rows_; ++i)
    for (std::size_t k = 1; k <= a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 1; j <= b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

ExactMatrix build_matrix_A(std::size_t k) {
  if (k < 3) throw std::domain_error("matrix size must be >= 3");
  ExactMatrix a(k, k);
  for (std::size_t i = 1; i <= k; ++i) {
    a(i, i) = 1;
    if (i + 1 <= k) a(i, i + 1) = i == 1 ? -2 : -static_cast<long long>(i);
    if (i + 2 <= k) a(i, i + 2) = -1;
  }
  return a;
}

ExactMatrix build_matrix_B(std::size_t k) {
  if (k < 3) throw std::domain_error("matrix size must be >= 3");
  ExactMatrix b(k, k);
  for (std::size_t j = 1; j <= k; ++j) {
    b(j, j) = 1;
    for (std::size_t i = j - 1; i >= 2; --i) {
      const BigInt below2 = i + 2 <= j ? b(i + 2, j) : BigInt(0);
      b(i, j) = BigInt(i) * b(i + 1, j) + below2;
    }
  }
  SequenceTable& seq = thread_sequence();
  for (std::size_t j = 1; j <= k; ++j) b(1, j) = seq.term(j);
  return b;
}

ExactMatrix build_matrix_B_by_columns(std::size_t k) {
  if (k < 3) throw std::domain_error("matrix size must be >= 3");
  ExactMatrix b(k, k);
  for (std::size_t i = 1; i <= k; ++i) {
    b(i, i) = 1;
    if (i + 1 <= k) b(i, i + 1) = i == 1 ? 2 : i;
    for (std::size_t j = i + 2; j <= k; ++j) b(i, j) = BigInt(j - 1) * b(i, j - 1) + b(i, j - 2);
  }
  return b;
}

InverseCheck check_inverse_identity(std::size_t k) {
  const ExactMatrix a = build_matrix_A(k);
  const ExactMatrix b = build_matrix_B(k);
  InverseCheck check;
  check.product_is_identity = (a * b).is_identity();
  check.column_sums_match = true;
  for (std::size_t j = 2; j <= k; ++j) {
    BigInt sum = 0;
    for (std::size_t i = 2; i <= j; ++i) sum += b(i, j);
    if (sum != mc_of_term(j)) check.column_sums_match = false;
  }
  return check;
}

bool verify_inverse_identity(std::size_t k) { return check_inverse_identity(k).ok(); }

MoveTally tally_moves(std::span<const Move> history, std::size_t top_index) {
  MoveTally t;
  t.combines.assign(top_index, 0);
  t.splits.assign(top_index, 0);
  for (const Move& m : history) {
    if (m.index < 1 || m.index > top_index) throw std::invalid_argument("move index outside the game");
    (m.kind == MoveKind::combine ? t.combines : t.splits)[m.index - 1] += 1;
  }
  return t;
}

std::vector<BigInt> delta_from_tally(std::uint64_t n, const MoveTally& t, std::size_t k) {
  std::vector<BigInt> delta(k, 0);
  auto C = [&](std::size_t i) { return BigInt(t.combine(i)); };
  auto S = [&](std::size_t i) { return BigInt(t.split(i)); };
  if (k >= 1) delta[0] = BigInt(n) - 2 * C(1) - C(2) + S(2) + S(3);
  if (k >= 2) delta[1] = C(1) - 2 * C(2) - C(3) - 3 * S(2) + S(3) + S(4);
  for (std::size_t i = 3; i <= k; ++i) {
    const BigInt bi(i);
    delta[i - 1] = C(i - 1) - bi * C(i) - C(i + 1) + S(i - 1) - (bi + 1) * S(i) + (bi - 1) * S(i + 1) + S(i + 2);
  }
  return delta;
}

}  // namespace zeck
