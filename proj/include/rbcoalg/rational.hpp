/**
 * @file rational.hpp
 * @brief Exact rational scalars for all structure-constant arithmetic.
 *
 * Every value in this library is a rational number with arbitrary-precision
 * numerator and denominator, stored in lowest terms with positive
 * denominator. Equality is decidable and exact; there is no floating point
 * anywhere.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace rbcoalg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// num/den as an exact rational; throws std::invalid_argument when den = 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses "num" or "num/den" (optional leading '-', decimal digits only).
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical rendering: "num" when the denominator is 1, else "num/den".
std::string format_rational(const Rational& r);

/// base^exp for integer exp (negative exp requires a nonzero base).
Rational rational_pow(const Rational& base, int exp);

}  // namespace rbcoalg
