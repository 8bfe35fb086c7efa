#pragma once

#include "zeck/bigint.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace zeck {

// Terms of a_1 = 1, a_2 = 2, a_{i+1} = i*a_i + a_{i-1}, 1-indexed.
//
// The table is append-only and grows on demand. Extension is not synchronized:
// share a table across threads only after extending it far enough, or use
// thread_sequence() which hands every thread its own cache.
class SequenceTable {
 public:
  SequenceTable();

  void extend_to_index(std::size_t k);

  // a_i, extending as needed. Throws std::domain_error for i == 0.
  const BigInt& term(std::size_t i);

  // a_i from the cached prefix only. Throws std::out_of_range if not cached.
  const BigInt& at(std::size_t i) const;

  // Largest n with a_n <= x. Throws std::domain_error for x < 1.
  std::size_t index_of_floor(const BigInt& x);

  std::size_t size() const { return terms_.size(); }
  std::span<const BigInt> terms() const { return terms_; }

 private:
  std::vector<BigInt> terms_;  // terms_[i - 1] == a_i
};

// Per-thread shared table; cheap since the sequence grows super-factorially.
SequenceTable& thread_sequence();

namespace detail {

constexpr std::size_t count_machine_terms() {
  std::uint64_t prev = 1, cur = 2;
  std::size_t count = 2;
  for (std::uint64_t i = 2;; ++i) {
    if (cur > (std::numeric_limits<std::uint64_t>::max() - prev) / i) return count;
    std::uint64_t next = i * cur + prev;
    prev = cur;
    cur = next;
    ++count;
  }
}

}  // namespace detail

inline constexpr std::size_t kMachineTermCount = detail::count_machine_terms();

// Every a_i representable in 64 bits; kMachineTerms[i - 1] == a_i.
inline constexpr std::array<std::uint64_t, kMachineTermCount> kMachineTerms = [] {
  std::array<std::uint64_t, kMachineTermCount> t{};
  t[0] = 1;
  t[1] = 2;
  for (std::size_t i = 2; i < kMachineTermCount; ++i) t[i] = i * t[i - 1] + t[i - 2];
  return t;
}();

inline std::uint64_t machine_term(std::size_t i) { return kMachineTerms.at(i - 1); }

// index_of_floor for machine-width x >= 1.
std::size_t index_of_floor(std::uint64_t x);

}  // namespace zeck
