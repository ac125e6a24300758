#pragma once

#include <map>

#include "umbral/polynomial.hpp"
#include "umbral/sym_expr.hpp"

namespace umbral {

/// A formula numerator / denominator. Estimators are returned in this form
/// with the denominator a polynomial in n.
struct Fraction {
  SymExpr numerator;
  SymExpr denominator = SymExpr(1);

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// Replaces every (n)_k and (n - j) atom by its polynomial in n.
SymExpr falling_factorial_expand(const SymExpr& e);
Fraction falling_factorial_expand(const Fraction& f);

/// Brings num/den to lowest terms.
///
/// The denominator must be a non-zero polynomial in n alone (after
/// expanding falling factorials). Common polynomial factors in n are
/// cancelled, the numerator is scaled to integer coefficients with no common
/// content, and the denominator's leading coefficient is made positive. The
/// returned denominator is a single product c * n^a * prod (n - j)^e when it
/// splits into integer linear factors, otherwise its expanded polynomial.
///
/// Throws std::domain_error for a zero denominator and
/// std::invalid_argument when the denominator involves data atoms.
Fraction normalize_over_common_denominator(const SymExpr& num, const SymExpr& den);

/// Polynomial in n of an expression free of data atoms; throws
/// std::invalid_argument otherwise. Falling factorials are expanded first.
SamplePoly to_sample_poly(const SymExpr& e);
SymExpr to_expr(const SamplePoly& p);

/// Groups an expression by its data-atom part: content term -> polynomial
/// coefficient in n. Falling factorials are expanded first.
std::map<Term, SamplePoly, TermOrder> collect_by_content(const SymExpr& e);

/// Factored display form of a polynomial in n (see
/// normalize_over_common_denominator).
SymExpr factor_sample_poly(const SamplePoly& p);

/// Substitutes a concrete value for n in every n, (n)_k and (n - j) atom.
SymExpr at_sample_size(const SymExpr& e, const Rational& n);

/// num(n) / den(n) for concrete n; the denominator must evaluate to a
/// non-zero constant (std::domain_error otherwise).
SymExpr at_sample_size(const Fraction& f, const Rational& n);

}  // namespace umbral
