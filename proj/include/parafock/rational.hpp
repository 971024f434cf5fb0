#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace parafock {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Wire form: "num" when the denominator is 1, otherwise "num/den" with
/// den > 0 and the sign on the numerator.
std::string to_string(const Rational& r);

/// Parses the wire form above; throws std::invalid_argument on anything else.
Rational rational_from_string(std::string_view text);

double to_double(const Rational& r);

Int factorial(int n);

}  // namespace parafock
