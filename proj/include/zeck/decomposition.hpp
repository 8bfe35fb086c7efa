#pragma once

#include "zeck/bigint.hpp"
#include "zeck/sequence.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace zeck {

// A legal decomposition sum s_i * a_i, stored densely: coeffs[i - 1] == s_i.
// Canonical: no trailing zeros, so the empty vector is the decomposition of 0.
struct Decomposition {
  std::vector<std::uint32_t> coeffs;
  BigInt value;

  std::size_t top_index() const { return coeffs.size(); }
  // s_i for i >= 1, zero beyond the top index.
  std::uint32_t coeff(std::size_t i) const {
    return i >= 1 && i <= coeffs.size() ? coeffs[i - 1] : 0;
  }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Greedy: take floor(x / a_n) copies of the largest a_n <= x, repeat on the rest.
// Throws std::domain_error for x <= 0.
Decomposition greedy_decompose(const BigInt& x);

// Machine-width fast path; writes s_1..s_k into `out` (resized to k).
// x == 0 yields an empty vector.
void greedy_coefficients(std::uint64_t x, std::vector<std::uint32_t>& out);

// 0 <= s_i <= i, and s_i == i forces s_{i-1} == 0. Trailing zeros are allowed.
bool is_legal(std::span<const std::int64_t> coeffs);
bool is_legal(std::span<const std::uint32_t> coeffs);

BigInt value_of(std::span<const std::int64_t> coeffs);
BigInt value_of(std::span<const std::uint32_t> coeffs);

std::uint64_t summand_count(const Decomposition& d);

// Visits every legal coefficient vector with top index <= max_index exactly once
// (including the empty one). The span passed to the visitor has length
// max_index and may carry trailing zeros; it is only valid during the call.
void for_each_legal(std::size_t max_index,
                    const std::function<void(std::span<const std::uint32_t>)>& visit);

// Materialized form of for_each_legal, canonicalized, with values.
std::vector<Decomposition> enumerate_legal(std::size_t max_index);

// "33 = 1*a4 + 3*a3 + 1*a1"
std::string format_decomposition(const Decomposition& d);

}  // namespace zeck
