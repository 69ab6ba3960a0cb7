#ifndef PACKDENSE_CHECKED_INT_HPP
#define PACKDENSE_CHECKED_INT_HPP

// Checked 128-bit integer arithmetic. Every count in the library is an
// Int128; overflow raises ArithmeticOverflow instead of wrapping.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace packdense {

using Int128 = __int128;

class ArithmeticOverflow : public std::overflow_error {
 public:
  explicit ArithmeticOverflow(const std::string& what) : std::overflow_error(what) {}
};

class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

inline Int128 checked_add(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("128-bit addition overflow");
  return r;
}

inline Int128 checked_sub(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("128-bit subtraction overflow");
  return r;
}

inline Int128 checked_mul(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("128-bit multiplication overflow");
  return r;
}

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
/// Multiplicative form C(n,i) = C(n,i-1) * (n-i+1) / i with the division
/// cancelled first, so ArithmeticOverflow means the result does not fit.
Int128 binomial(std::int64_t n, std::int64_t k);

std::string to_string(Int128 v);

/// Parses an optionally signed decimal integer; throws InvalidInput on junk
/// and ArithmeticOverflow when the value does not fit.
Int128 parse_int128(std::string_view text);

}  // namespace packdense

#endif  // PACKDENSE_CHECKED_INT_HPP
