#include "zeck/sequence.hpp"

#include <algorithm>
#include <stdexcept>

namespace zeck {

BigInt parse_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("expected a decimal integer, got an empty string");
  BigInt value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9')
      throw std::invalid_argument("expected a decimal integer, got '" + std::string(text) + "'");
    value = value * 10 + (ch - '0');
  }
  return value;
}

std::string decimal_ratio(const BigInt& num, const BigInt& den, unsigned digits) {
  if (den == 0) throw std::domain_error("decimal_ratio: zero denominator");
  BigInt whole = num / den;
  BigInt rem = num % den;
  std::string out = whole.str();
  if (digits == 0) return out;
  out += '.';
  for (unsigned d = 0; d < digits; ++d) {
    rem *= 10;
    BigInt digit = rem / den;
    rem %= den;
    out += static_cast<char>('0' + digit.convert_to<int>());
  }
  return out;
}

SequenceTable::SequenceTable() : terms_{BigInt(1), BigInt(2)} {}

void SequenceTable::extend_to_index(std::size_t k) {
  while (terms_.size() < k) {
    const std::size_t i = terms_.size();  // next term is a_{i+1} = i*a_i + a_{i-1}
    terms_.push_back(BigInt(i) * terms_[i - 1] + terms_[i - 2]);
  }
}

const BigInt& SequenceTable::term(std::size_t i) {
  if (i == 0) throw std::domain_error("sequence index must be >= 1");
  extend_to_index(i);
  return terms_[i - 1];
}

const BigInt& SequenceTable::at(std::size_t i) const {
  if (i == 0 || i > terms_.size()) throw std::out_of_range("sequence index not cached");
  return terms_[i - 1];
}

std::size_t SequenceTable::index_of_floor(const BigInt& x) {
  if (x < 1) throw std::domain_error("index_of_floor requires x >= 1");
  while (terms_.back() <= x) extend_to_index(terms_.size() + 1);
  // first term strictly greater than x; its predecessor is the floor
  auto it = std::upper_bound(terms_.begin(), terms_.end(), x);
  return static_cast<std::size_t>(it - terms_.begin());
}

SequenceTable& thread_sequence() {
  thread_local SequenceTable table;
  return table;
}

std::size_t index_of_floor(std::uint64_t x) {
  if (x < 1) throw std::domain_error("index_of_floor requires x >= 1");
  auto it = std::upper_bound(kMachineTerms.begin(), kMachineTerms.end(), x);
  return static_cast<std::size_t>(it - kMachineTerms.begin());
}

}  // namespace zeck
