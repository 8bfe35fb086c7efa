#pragma once

#include "zeck/bigint.hpp"
#include "zeck/game.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace zeck {

// MC(a_i): MC(a_1) = 0, MC(a_2) = 1, MC(a_i) = (i-1) MC(a_{i-1}) + MC(a_{i-2}) + 1.
// Throws std::domain_error for i == 0.
const BigInt& mc_of_term(std::size_t i);

// Number of combining moves in any complete game on n: sum of delta_i * MC(a_i)
// over the legal decomposition delta of n. mc(0) == 0.
BigInt mc(const BigInt& n);
std::uint64_t mc(std::uint64_t n);

struct TermRatio {
  std::size_t index;
  BigInt term;
  BigInt moves;
  std::string ratio;  // MC(a_i)/a_i, truncated decimal
};

struct RatioScan {
  std::uint64_t limit = 0;
  std::uint64_t argmax = 0;  // n attaining max MC(n)/n (smallest such n)
  std::uint64_t max_moves = 0;
  bool bound_holds = true;  // MC(n) * 10000 < 7757 * n for every n <= limit
  std::vector<TermRatio> series;
};

inline constexpr std::uint64_t kBoundNumerator = 7757;
inline constexpr std::uint64_t kBoundDenominator = 10000;

// Scans n = 1..limit (ratios compared by cross-multiplication) and reports
// MC(a_i)/a_i for i = 1..series_terms.
RatioScan mc_ratio_scan(std::uint64_t limit, std::size_t series_terms = 50, unsigned threads = 1);

// Dense matrix of exact integers, 1-indexed accessors.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[(i - 1) * cols_ + (j - 1)]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[(i - 1) * cols_ + (j - 1)]; }

  bool is_identity() const;
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> data_;
};

// Coefficients of (n, MC_1, ..., MC_{k-1}) in the combine-only delta equations:
// row 1 is (1, -2, -1, 0, ...); row i >= 2 has 1, -i, -1 starting at column i.
ExactMatrix build_matrix_A(std::size_t k);

// Inverse of A built from its row recurrence: B_{1,j} = a_j, and for i >= 2
// B_{i,i} = 1, B_{i,i+1} = i, B_{i,j} = i B_{i+1,j} + B_{i+2,j}.
ExactMatrix build_matrix_B(std::size_t k);

// The same matrix from the column recurrence B_{i,j} = (j-1) B_{i,j-1} + B_{i,j-2}.
ExactMatrix build_matrix_B_by_columns(std::size_t k);

struct InverseCheck {
  bool product_is_identity = false;
  bool column_sums_match = false;  // sum_{i=2}^{j} B_{i,j} == MC(a_j), j >= 2
  bool ok() const { return product_is_identity && column_sums_match; }
};

InverseCheck check_inverse_identity(std::size_t k);
bool verify_inverse_identity(std::size_t k);

// Per-index move tallies of one game: combines[i-1] = MC_i, splits[i-1] = MS_i.
struct MoveTally {
  std::vector<std::uint64_t> combines;
  std::vector<std::uint64_t> splits;

  std::uint64_t combine(std::size_t i) const { return i >= 1 && i <= combines.size() ? combines[i - 1] : 0; }
  std::uint64_t split(std::size_t i) const { return i >= 1 && i <= splits.size() ? splits[i - 1] : 0; }
};

MoveTally tally_moves(std::span<const Move> history, std::size_t top_index);

// Final coefficients delta_1..delta_k predicted by the linear delta equations
// from the starting value n and the tallies alone.
std::vector<BigInt> delta_from_tally(std::uint64_t n, const MoveTally& tally, std::size_t top_index);

}  // namespace zeck
