#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace umbral {

using Integer = mpz_class;
using Rational = mpq_class;

/// n! as an exact integer.
Integer factorial(std::size_t n);

/// Factorial moments of the singleton umbra: (-1)^(k-1) (k-1)!.
Integer singleton_factorial_moment(std::size_t k);

/// Canonical "p" or "p/q" spelling.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

}  // namespace umbral
