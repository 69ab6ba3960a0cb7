#include "packdense/checked_int.hpp"

#include <algorithm>

namespace packdense {

Int128 binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int128 result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // result * (n-k+i) is divisible by i; cancel gcd(result, i) first so the
    // product only overflows when the binomial itself does
    Int128 a = result;
    Int128 b = i;
    while (b != 0) {
      const Int128 r = a % b;
      a = b;
      b = r;
    }
    result = checked_mul(result / a, static_cast<Int128>(n - k + i) / (i / a));
  }
  return result;
}

std::string to_string(Int128 v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  // Work with negative values so that the minimum Int128 is representable.
  std::string digits;
  while (v != 0) {
    const int d = static_cast<int>(v % 10);
    digits.push_back(static_cast<char>('0' + (negative ? -d : d)));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Int128 parse_int128(std::string_view text) {
  if (text.empty()) throw InvalidInput("empty integer literal");
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw InvalidInput("integer literal has no digits: '" + std::string(text) + "'");
  Int128 value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') throw InvalidInput("invalid integer literal: '" + std::string(text) + "'");
    value = checked_mul(value, 10);
    value = negative ? checked_sub(value, c - '0') : checked_add(value, c - '0');
  }
  return value;
}

}  // namespace packdense
