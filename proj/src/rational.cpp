#include "magflow/rational.hpp"

#include <cctype>

namespace magflow {

namespace {

// [sign] digits, nonempty. BigInt's own parser takes neither a leading '+'
// nor anything non-numeric, so hand it the digits alone.
bool parse_integer(const std::string& s, BigInt& out) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    negative = s[i] == '-';
    ++i;
  }
  if (i >= s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  out = BigInt(s.substr(i));
  if (negative) out = -out;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  std::size_t b = text.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return std::nullopt;
  std::size_t e = text.find_last_not_of(" \t\r\n");
  std::string s = text.substr(b, e - b + 1);

  std::size_t slash = s.find('/');
  BigInt num, den = 1;
  if (slash == std::string::npos) {
    if (!parse_integer(s, num)) return std::nullopt;
  } else {
    if (!parse_integer(s.substr(0, slash), num)) return std::nullopt;
    if (!parse_integer(s.substr(slash + 1), den)) return std::nullopt;
    if (den == 0) return std::nullopt;
    if (den < 0) {  // keep the sign in the numerator
      num = -num;
      den = -den;
    }
  }
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace magflow
