#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "umbral/fraction.hpp"
#include "umbral/sym_expr.hpp"

namespace umbral {

inline constexpr int kMaxOracleSampleSize = 8;

/// n sampling units, each carrying `arity` variables X_{i,1..arity}.
/// Units are independent and identically distributed; variables inside one
/// unit are arbitrarily dependent.
struct FormalSample {
  /// Throws GuardViolation unless 1 <= n <= kMaxOracleSampleSize.
  FormalSample(int n, std::size_t arity);

  int n;
  std::size_t arity;
};

/// Polynomial in the indexed variables X_{i,c}. A key holds the exponent of
/// X_{i,c} at position i * arity + c.
class IndexedPolynomial {
 public:
  using Key = std::vector<std::uint16_t>;

  IndexedPolynomial() = default;
  static IndexedPolynomial constant(const FormalSample& s, const Rational& c);

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Key& k, const Rational& c);

  IndexedPolynomial& operator+=(const IndexedPolynomial& o);
  friend IndexedPolynomial operator*(const IndexedPolynomial& a, const IndexedPolynomial& b);
  friend IndexedPolynomial operator*(IndexedPolynomial a, const Rational& c);
  friend bool operator==(const IndexedPolynomial&, const IndexedPolynomial&) = default;

 private:
  std::map<Key, Rational> terms_;
};

/// sum_i prod_c X_{i,c}^{v_c}.
IndexedPolynomial expand_power_sum(const ExpVec& v, const FormalSample& s);

struct BracketExpansion {
  IndexedPolynomial value;
  /// True when the bracket has more parts than units, so no injective index
  /// tuple exists and the value is zero.
  bool empty_sum = false;
};

/// Sum over injective index tuples (i_1, ..., i_k) of prod_j X_{i_j}^{v_j}.
BracketExpansion expand_bracket(const Bracket& b, const FormalSample& s);

/// Expectation of an indexed polynomial: each unit's factor becomes the
/// moment m of that unit's exponent vector, and units multiply.
SymExpr expectation(const IndexedPolynomial& p, const FormalSample& s);

/// Expands every power-sum and bracket atom of e over the sample, with n,
/// (n)_k and (n - j) specialized to s.n. Moment atoms are not allowed.
IndexedPolynomial expand_over_sample(const SymExpr& e, const FormalSample& s);

/// Expands every power-sum and bracket atom of e over the sample and takes
/// the expectation. n, (n)_k and (n - j) are specialized to s.n; moment atoms
/// are not allowed.
SymExpr oracle_expectation(const SymExpr& e, const FormalSample& s);
/// The same for numerator / denominator; the denominator must be a non-zero
/// number once n is fixed.
SymExpr oracle_expectation(const Fraction& f, const FormalSample& s);

/// Value of e on concrete data: rows[i][c] is variable c of unit i, so n is
/// rows.size(). Power sums and brackets are summed directly; moment atoms are
/// not allowed.
Rational evaluate_on_data(const SymExpr& e, const std::vector<std::vector<Rational>>& rows);
Rational evaluate_on_data(const Fraction& f, const std::vector<std::vector<Rational>>& rows);

}  // namespace umbral
