#pragma once
// Exact rational arithmetic. Every quantity in this library is an exact
// fraction; classification hinges on strict-vs-weak inequalities, so there is
// no floating point anywhere on a decision path.

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace discrim {

// et_off so Rational behaves as a plain value type (auto, std::max, sorting).
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Parses "num", "-num" or "num/den" (den > 0 digits). The result is reduced
/// to lowest terms with the sign on the numerator. Throws std::invalid_argument
/// on anything else, including decimal notation and zero denominators.
Rational parse_rational(const std::string& text);

/// Canonical text form: lowest terms, "-" on the numerator, "n" when the
/// denominator is 1. Inverse of parse_rational.
std::string to_string(const Rational& value);

/// "(a, b, c)" rendering used in error messages and text reports.
std::string format_vector(const std::vector<Rational>& values);

}  // namespace discrim
