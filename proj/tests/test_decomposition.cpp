#include "oracles.hpp"
#include "zeck/decomposition.hpp"
#include "zeck/sequence.hpp"

#include <doctest.h>

#include <random>

using namespace zeck;

namespace {
std::vector<int> as_int(const std::vector<std::uint32_t>& v) { return {v.begin(), v.end()}; }
}  // namespace

TEST_CASE("greedy of 33") {
  const Decomposition d = greedy_decompose(BigInt(33));
  CHECK(d.coeffs == std::vector<std::uint32_t>{1, 0, 3, 1});
  CHECK(d.value == 33);
  CHECK(format_decomposition(d) == "33 = 1*a4 + 3*a3 + 1*a1");
}

TEST_CASE("small values") {
  CHECK(greedy_decompose(BigInt(1)).coeffs == std::vector<std::uint32_t>{1});
  CHECK(greedy_decompose(BigInt(4)).coeffs == std::vector<std::uint32_t>{0, 2});
  CHECK(greedy_decompose(BigInt(16)).coeffs == std::vector<std::uint32_t>{1, 0, 3});
  CHECK(greedy_decompose(BigInt(17)).coeffs == std::vector<std::uint32_t>{0, 0, 0, 1});
  CHECK_THROWS_AS(greedy_decompose(BigInt(0)), std::domain_error);
  CHECK_THROWS_AS(greedy_decompose(BigInt(-1)), std::domain_error);
}

TEST_CASE("greedy matches the oracle and is legal on [1, 20000]") {
  std::vector<std::uint32_t> fast;
  for (std::uint64_t x = 1; x <= 20000; ++x) {
    const Decomposition d = greedy_decompose(BigInt(x));
    REQUIRE(as_int(d.coeffs) == oracle::greedy(x));
    CHECK(is_legal(std::span<const std::uint32_t>(d.coeffs)));
    CHECK(value_of(std::span<const std::uint32_t>(d.coeffs)) == x);
    greedy_coefficients(x, fast);
    CHECK(fast == d.coeffs);
  }
}

TEST_CASE("greedy on random big integers") {
  std::mt19937_64 rng(11);
  SequenceTable& seq = thread_sequence();
  for (int trial = 0; trial < 200; ++trial) {
    std::string digits = std::to_string(rng() % 9 + 1);
    const int len = static_cast<int>(rng() % 120);
    for (int j = 0; j < len; ++j) digits += static_cast<char>('0' + rng() % 10);
    const BigInt x = parse_decimal(digits);
    const Decomposition d = greedy_decompose(x);
    CHECK(is_legal(std::span<const std::uint32_t>(d.coeffs)));
    CHECK(value_of(std::span<const std::uint32_t>(d.coeffs)) == x);
    CHECK(d.top_index() == seq.index_of_floor(x));
  }
}

TEST_CASE("is_legal agrees with the oracle on every box vector up to k = 7") {
  for (std::size_t k = 1; k <= 7; ++k) {
    oracle::for_each_box_vector(k, [&](const std::vector<int>& s) {
      const std::vector<std::int64_t> v(s.begin(), s.end());
      CHECK(is_legal(std::span<const std::int64_t>(v)) == oracle::legal(s));
    });
  }
  const std::vector<std::int64_t> negative{1, -1};
  CHECK_FALSE(is_legal(std::span<const std::int64_t>(negative)));
  const std::vector<std::int64_t> too_big{2};
  CHECK_FALSE(is_legal(std::span<const std::int64_t>(too_big)));
  const std::vector<std::int64_t> sat_after_nonzero{1, 2};
  CHECK_FALSE(is_legal(std::span<const std::int64_t>(sat_after_nonzero)));
  const std::vector<std::int64_t> sat_after_zero{0, 2, 0, 0};
  CHECK(is_legal(std::span<const std::int64_t>(sat_after_zero)));
}

TEST_CASE("enumerate_legal lists exactly the oracle's legal vectors") {
  for (std::size_t k = 1; k <= 6; ++k) {
    const auto by_value = oracle::legal_by_value(k);
    std::size_t oracle_count = 0;
    for (const auto& [x, list] : by_value) oracle_count += list.size();
    const auto all = enumerate_legal(k);
    CHECK(all.size() == oracle_count);
    // includes zero vector; each nonzero value below a_{k+1} appears once
    CHECK(all.size() == oracle::terms(k + 1).back());
    for (const auto& d : all) {
      const auto v = d.value.convert_to<std::uint64_t>();
      REQUIRE(by_value.count(v) == 1);
      auto padded = as_int(d.coeffs);
      padded.resize(k, 0);
      CHECK(by_value.at(v).front() == padded);
    }
  }
}

TEST_CASE("summand_count") {
  CHECK(summand_count(greedy_decompose(BigInt(33))) == 5);
  CHECK(summand_count(greedy_decompose(BigInt(16936))) > 0);
}
