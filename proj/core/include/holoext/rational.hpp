#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace holoext {

// Arbitrary-precision integers and rationals. Moment cascades multiply
// binomials, so fixed-width types overflow at modest degree.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(n, k); zero when k is outside [0, n].
Int binomial(long n, long k);

/// "p/q" in lowest terms, "p" when the denominator is 1.
std::string to_string(const Rational& r);

}  // namespace holoext
