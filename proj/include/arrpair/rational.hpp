#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace arrpair {

/// Arbitrary-precision integer.
using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator, so equality is structural.
using Rational = boost::multiprecision::cpp_rational;

using QVector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q" with q > 0. No whitespace, no leading '+'.
Rational parse_rational(std::string_view text);

/// Canonical form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// -1, 0 or +1.
int sign(const Rational& value);

/// Dot product of equal-length vectors; throws DimensionError otherwise.
Rational dot(const QVector& a, const QVector& b);

Integer lcm_of_denominators(const QVector& values);

}  // namespace arrpair
