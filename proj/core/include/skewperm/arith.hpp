#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace skewperm {

// Arbitrary-precision integers and rationals. Everything the library
// computes (coefficients, permanents, weights) is exact; floating point
// only appears at the root-finding boundary in spectra.hpp.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "7", "-3/4", "2.5", "-0.125". Decimal forms convert exactly
// (2.5 becomes 5/2). Throws std::invalid_argument on anything else,
// including a zero denominator.
Rat parse_rational(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string rat_string(const Rat& value);

double rat_double(const Rat& value);

}  // namespace skewperm
