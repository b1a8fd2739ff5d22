#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ltic {

/// Exact arbitrary-precision rational; the symbolic layer never touches floats.
using Rational = boost::multiprecision::cpp_rational;

/// "3", "-1/2".
std::string to_string(const Rational& r);

/// Parses an unsigned integer or decimal literal ("12", "0.25") exactly.
Rational rational_from_decimal(const std::string& text);

double to_double(const Rational& r);

}  // namespace ltic
