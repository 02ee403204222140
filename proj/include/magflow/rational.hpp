#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace magflow {

// Exact rational scalar used throughout the algebraic layer. cpp_rational
// keeps values canonical (reduced, denominator > 0), so equality comparison
// and hashing need no extra normalization.
using Rational = boost::multiprecision::cpp_rational;
using BigInt   = boost::multiprecision::cpp_int;

// Accepts "p", "-p", "p/q", "-p/q" with optional surrounding whitespace.
// Returns nullopt on malformed text or a zero denominator.
std::optional<Rational> parse_rational(const std::string& text);

// "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& r);

double to_double(const Rational& r);

}  // namespace magflow
