#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace gsec {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Parses "p/q", "p" or a decimal such as "0.25". Throws ParseError.
Rational parse_rational(std::string_view text);

/// Always "p/q" with q > 0, e.g. "3/1", "-1/2".
std::string to_string(const Rational& r);

std::int64_t floor_int(const Rational& r);
std::int64_t ceil_int(const Rational& r);

/// Sum of values[v] over the vertices in mask.
Rational sum_over(std::span<const Rational> values, std::uint32_t mask);

/// Scales rationals to integers sharing one denominator. Throws BadParams when
/// a scaled value does not fit in int64.
struct ScaledIntegers {
  std::vector<std::int64_t> values;
  BigInt denominator;
};
ScaledIntegers scale_to_integers(std::span<const Rational> values);

}  // namespace gsec
