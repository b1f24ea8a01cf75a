// Exact rational scalars and conversions between decimals, doubles and
// rationals.
#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "ellinv/errors.hpp"

namespace ellinv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact value of the double (binary mantissa times power of two); throws
// InvalidSpecError for non-finite input.
Rational rational_from_double(double v);

// Parses "p/q", integers, and decimal/scientific literals exactly, so that
// e.g. "0.25" becomes 1/4 and "2.5e-1" becomes 1/4. Throws ParseError.
Rational rational_from_string(const std::string& text);

double to_double(const Rational& r);

std::string to_string(const Rational& r);

} // namespace ellinv
