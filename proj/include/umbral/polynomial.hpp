#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

/// Dense polynomial in the sample size n with exact rational coefficients;
/// coeffs[k] multiplies n^k. The zero polynomial has no coefficients.
class SamplePoly {
 public:
  SamplePoly() = default;
  explicit SamplePoly(std::vector<Rational> coeffs);
  static SamplePoly constant(const Rational& c);
  /// n - root.
  static SamplePoly linear(const Rational& root);
  /// (n)_k = n (n-1) ... (n-k+1).
  static SamplePoly falling_factorial(int k);
  /// (n - from)(n - from - 1) ... (n - to + 1); 1 when from >= to.
  static SamplePoly factorial_range(int from, int to);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const { return c_.back(); }
  Rational operator()(const Rational& n) const;

  SamplePoly& operator+=(const SamplePoly& o);
  SamplePoly& operator*=(const Rational& c);
  friend SamplePoly operator+(SamplePoly a, const SamplePoly& b) { return a += b; }
  friend SamplePoly operator*(const SamplePoly& a, const SamplePoly& b);
  friend SamplePoly operator*(SamplePoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const SamplePoly&, const SamplePoly&) = default;

  /// Quotient and remainder of Euclidean division.
  std::pair<SamplePoly, SamplePoly> divmod(const SamplePoly& d) const;
  SamplePoly monic() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic greatest common divisor (zero only when both are zero).
SamplePoly gcd(const SamplePoly& a, const SamplePoly& b);

}  // namespace umbral
