#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace vcb {

// Every weight, dual value and bound in this library is an exact rational;
// there is no floating point anywhere. boost cpp_rational keeps values in
// lowest terms with a positive denominator, which is exactly the contract
// the rest of the code relies on.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "3/4" or the integer shorthand "3". Whitespace is not accepted.
// Returns nullopt on malformed input or a zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

// Canonical "num/den" form; integral values print without the "/1" suffix.
std::string to_string(const Rational& value);

inline Rational rat(long long num, long long den = 1) {
  return Rational(Integer(num), Integer(den));
}

}  // namespace vcb
