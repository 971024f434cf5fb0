#include "parafock/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace parafock {

std::string to_string(const Rational& r) {
  std::ostringstream out;
  out << r;  // "num" or "num/den", denominator always positive
  return out.str();
}

Rational rational_from_string(std::string_view text) {
  const auto fail = [&] {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  };
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) fail();
  Int num(std::string(text.substr(0, i)));
  Int den = 1;
  if (i < text.size()) {
    if (text[i] != '/') fail();
    ++i;
    std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) fail();
    den = Int(std::string(text.substr(den_begin)));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num) / Rational(den);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  Int result = 1;
  for (int k = 2; k <= n; ++k) result *= k;
  return result;
}

}  // namespace parafock
