#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace hibi {

/// Exact rational scalar used throughout (GMP-backed).
using Rational = boost::multiprecision::mpq_rational;

/// Exact integer for counts that may outgrow machine words.
using BigInt = boost::multiprecision::mpz_int;

/// Canonical "num/den" rendering: gcd-reduced, den > 0, always with a slash.
inline std::string to_fraction_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses "num/den" or a bare integer string.
Rational fraction_from_string(const std::string& s);

}  // namespace hibi
