#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace sympgt {

// All arithmetic in the construction is exact. Integers are arbitrary
// precision: coefficient products stack up to 2k-1 big-integer factors times 4
// and denominators multiply across levels, so fixed-width types would
// overflow silently.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "num/den" with the denominator always present and positive, e.g. "4/1",
// "-1/2". This is the wire form used by the exact-json format.
std::string to_fraction_string(const Rational& q);

// Accepts "num/den" or a bare integer "num". Throws ValidationError on
// malformed input or a zero denominator.
Rational parse_fraction(const std::string& s);

}  // namespace sympgt
