#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace zeck {

using BigInt = boost::multiprecision::cpp_int;

// Parses an unsigned decimal string of any length. Throws std::invalid_argument
// on anything that is not [0-9]+.
BigInt parse_decimal(std::string_view text);

inline std::string to_string(const BigInt& x) { return x.str(); }

// Renders num/den as a decimal with `digits` fractional digits, truncated.
// Exact: computed with integer division only.
std::string decimal_ratio(const BigInt& num, const BigInt& den, unsigned digits);

}  // namespace zeck
