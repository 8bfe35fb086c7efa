#include "zeck/decomposition.hpp"

#include <stdexcept>

namespace zeck {

namespace {

template <typename Int>
bool is_legal_impl(std::span<const Int> coeffs) {
  for (std::size_t i = 1; i <= coeffs.size(); ++i) {
    const auto s = static_cast<std::int64_t>(coeffs[i - 1]);
    if (s < 0 || s > static_cast<std::int64_t>(i)) return false;
    if (i >= 2 && s == static_cast<std::int64_t>(i) && coeffs[i - 2] != 0) return false;
  }
  return true;
}

template <typename Int>
BigInt value_of_impl(std::span<const Int> coeffs) {
  SequenceTable& seq = thread_sequence();
  seq.extend_to_index(coeffs.size());
  BigInt sum = 0;
  for (std::size_t i = 1; i <= coeffs.size(); ++i) {
    if (coeffs[i - 1] != 0) sum += BigInt(coeffs[i - 1]) * seq.at(i);
  }
  return sum;
}

void trim(std::vector<std::uint32_t>& coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

}  // namespace

Decomposition greedy_decompose(const BigInt& x) {
  if (x <= 0) throw std::domain_error("greedy_decompose requires x >= 1");
  SequenceTable& seq = thread_sequence();
  const std::size_t k = seq.index_of_floor(x);
  Decomposition d;
  d.coeffs.assign(k, 0);
  d.value = x;
  BigInt rest = x;
  for (std::size_t i = k; i >= 1 && rest > 0; --i) {
    const BigInt& term = seq.at(i);
    if (term > rest) continue;
    BigInt q = rest / term;
    rest -= q * term;
    d.coeffs[i - 1] = q.convert_to<std::uint32_t>();
  }
  return d;
}

void greedy_coefficients(std::uint64_t x, std::vector<std::uint32_t>& out) {
  out.clear();
  if (x == 0) return;
  const std::size_t k = index_of_floor(x);
  out.assign(k, 0);
  for (std::size_t i = k; i >= 1 && x > 0; --i) {
    const std::uint64_t term = kMachineTerms[i - 1];
    if (term > x) continue;
    out[i - 1] = static_cast<std::uint32_t>(x / term);
    x %= term;
  }
}

bool is_legal(std::span<const std::int64_t> coeffs) { return is_legal_impl(coeffs); }
bool is_legal(std::span<const std::uint32_t> coeffs) { return is_legal_impl(coeffs); }

BigInt value_of(std::span<const std::int64_t> coeffs) { return value_of_impl(coeffs); }
BigInt value_of(std::span<const std::uint32_t> coeffs) { return value_of_impl(coeffs); }

std::uint64_t summand_count(const Decomposition& d) {
  std::uint64_t total = 0;
  for (auto s : d.coeffs) total += s;
  return total;
}

void for_each_legal(std::size_t max_index,
                    const std::function<void(std::span<const std::uint32_t>)>& visit) {
  std::vector<std::uint32_t> coeffs(max_index, 0);
  // Fill from the top index down; `saturated` means s_{i+1} == i+1, which pins s_i to 0.
  std::function<void(std::size_t, bool)> fill = [&](std::size_t i, bool saturated) {
    if (i == 0) {
      visit(coeffs);
      return;
    }
    const std::uint32_t limit = saturated ? 0 : static_cast<std::uint32_t>(i);
    for (std::uint32_t s = 0; s <= limit; ++s) {
      coeffs[i - 1] = s;
      fill(i - 1, s == i);
    }
    coeffs[i - 1] = 0;
  };
  fill(max_index, false);
}

std::vector<Decomposition> enumerate_legal(std::size_t max_index) {
  std::vector<Decomposition> out;
  for_each_legal(max_index, [&](std::span<const std::uint32_t> coeffs) {
    Decomposition d;
    d.coeffs.assign(coeffs.begin(), coeffs.end());
    trim(d.coeffs);
    d.value = value_of(std::span<const std::uint32_t>(d.coeffs));
    out.push_back(std::move(d));
  });
  return out;
}

std::string format_decomposition(const Decomposition& d) {
  std::string out = d.value.str() + " =";
  bool first = true;
  for (std::size_t i = d.coeffs.size(); i >= 1; --i) {
    if (d.coeffs[i - 1] == 0) continue;
    out += first ? " " : " + ";
    out += std::to_string(d.coeffs[i - 1]) + "*a" + std::to_string(i);
    first = false;
  }
  if (first) out += " 0";
  return out;
}

}  // namespace zeck
