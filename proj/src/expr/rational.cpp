#include "ltic/rational.hpp"

#include <stdexcept>

namespace ltic {

std::string to_string(const Rational& r) {
  using boost::multiprecision::cpp_int;
  const cpp_int num = boost::multiprecision::numerator(r);
  const cpp_int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_from_decimal(const std::string& text) {
  using boost::multiprecision::cpp_int;
  const auto dot = text.find('.');
  const std::string whole = text.substr(0, dot);
  const std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) throw std::invalid_argument("empty number");
  for (char c : whole + frac) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad digit in '" + text + "'");
  }
  cpp_int num = 0;
  for (char c : whole + frac) num = num * 10 + (c - '0');
  cpp_int den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  return Rational(num, den);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace ltic
