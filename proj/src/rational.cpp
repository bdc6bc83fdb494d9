#include "sympgt/rational.hpp"

#include "sympgt/errors.hpp"

namespace sympgt {

namespace {

// Strict integer syntax: optional sign, then digits only. cpp_int's own
// string constructor is more permissive than the wire format allows.
bool parse_int_text(const std::string& text, Int& out) {
  if (text.empty()) return false;
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = (text[0] == '-');
    pos = 1;
  }
  if (pos >= text.size()) return false;
  Int value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') return false;
    value *= 10;
    value += c - '0';
  }
  out = negative ? Int(-value) : value;
  return true;
}

}  // namespace

std::string to_fraction_string(const Rational& q) {
  // cpp_rational keeps itself reduced with a positive denominator.
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_fraction(const std::string& s) {
  const auto slash = s.find('/');
  Int num;
  Int den = 1;
  if (slash == std::string::npos) {
    if (!parse_int_text(s, num)) {
      throw ValidationError("malformed rational '" + s + "'");
    }
  } else {
    if (!parse_int_text(s.substr(0, slash), num) ||
        !parse_int_text(s.substr(slash + 1), den)) {
      throw ValidationError("malformed rational '" + s + "'");
    }
    if (den == 0) {
      throw ValidationError("zero denominator in rational '" + s + "'");
    }
  }
  // The two-argument constructor rejects negative denominators.
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

}  // namespace sympgt
