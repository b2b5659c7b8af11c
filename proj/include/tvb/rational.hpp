#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tvb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "3", "-5/3", and decimal literals like "0.25" or "1.5e-2".
// Exact in all cases; decimals are scaled powers of ten, never doubles.
Rational parse_rational(const std::string& text);

// Inverse of parse_rational: "num/den" in lowest terms, or "num" when the
// denominator is 1.
std::string format_rational(const Rational& value);

double rational_to_double(const Rational& value);

}  // namespace tvb
