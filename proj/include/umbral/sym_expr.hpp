#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "umbral/exponent_vector.hpp"
#include "umbral/multiset.hpp"
#include "umbral/rational.hpp"

namespace umbral {

/// Augmented symmetric function [v_1 v_2 ...]: the sum over injective index
/// tuples of the part monomials. Parts are non-zero and kept sorted.
class Bracket {
 public:
  Bracket() = default;
  explicit Bracket(std::vector<ExpVec> parts);
  explicit Bracket(const Multiset<ExpVec>& parts);

  const std::vector<ExpVec>& parts() const { return parts_; }
  /// Number of parts counted with repetition.
  std::size_t size() const { return parts_.size(); }
  std::size_t arity() const { return parts_.empty() ? 0 : parts_.front().arity(); }
  int degree() const;
  Multiset<ExpVec> as_multiset() const { return Multiset<ExpVec>::from_items(parts_); }

  friend bool operator==(const Bracket&, const Bracket&) = default;
  /// Part count, then part sequence.
  friend std::strong_ordering operator<=>(const Bracket& a, const Bracket& b);

 private:
  std::vector<ExpVec> parts_;
};

enum class AtomKind : std::uint8_t {
  SampleSize,        // n
  FallingFactorial,  // (n)_k
  ShiftedSampleSize, // (n - j), j != 0
  Moment,            // m_v
  PowerSum,          // S_v
  Bracket,           // AUG[...]
};

/// A formal symbol of SymExpr.
class Atom {
 public:
  static Atom sample_size();
  static Atom falling_factorial(int depth);
  static Atom shifted_sample_size(int shift);
  static Atom moment(const ExpVec& index);
  static Atom power_sum(const ExpVec& index);
  static Atom bracket(Bracket b);

  AtomKind kind() const { return kind_; }
  /// Depth of (n)_k or shift j of (n - j).
  int parameter() const { return param_; }
  const ExpVec& index() const { return index_; }
  const Bracket& bracket() const { return bracket_; }

  /// Moments, power sums and brackets: the data-dependent symbols.
  bool is_content() const { return kind_ >= AtomKind::Moment; }
  /// Degree in n contributed by one power of this atom.
  int sample_degree() const;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b);

 private:
  AtomKind kind_ = AtomKind::SampleSize;
  int param_ = 0;
  ExpVec index_;
  Bracket bracket_;
};

/// A power product of atoms with positive exponents, factors sorted by atom.
class Term {
 public:
  Term() = default;
  explicit Term(std::vector<std::pair<Atom, int>> factors);
  static Term of(const Atom& a, int power = 1);

  const std::vector<std::pair<Atom, int>>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  int power_of(const Atom& a) const;
  /// Total power of content atoms.
  int content_count() const { return content_count_; }
  /// Degree in n after expanding every falling factorial and shift.
  int sample_degree() const { return sample_degree_; }
  /// The same term with every SampleSize / FallingFactorial / Shifted factor removed.
  Term content_part() const;

  friend Term operator*(const Term& a, const Term& b);
  friend bool operator==(const Term& a, const Term& b) { return a.factors_ == b.factors_; }

 private:
  void refresh();

  std::vector<std::pair<Atom, int>> factors_;
  int content_count_ = 0;
  int sample_degree_ = 0;
};

/// Display order of terms: fewer content factors first, then the ascending
/// content-atom sequence, then higher degree in n first. This renders
/// k_3 as n^2*S[3] - 3*n*S[1]*S[2] + 2*S[1]^3.
struct TermOrder {
  bool operator()(const Term& a, const Term& b) const;
};

/// Exact-rational polynomial in atoms. No zero coefficients are stored.
class SymExpr {
 public:
  using TermMap = std::map<Term, Rational, TermOrder>;

  SymExpr() = default;
  SymExpr(const Rational& constant);  // NOLINT: implicit numeric promotion
  SymExpr(long constant) : SymExpr(Rational(constant)) {}  // NOLINT
  static SymExpr of(const Atom& a, int power = 1);
  static SymExpr monomial(const Term& t, const Rational& coeff = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// The constant value if the expression has no atoms.
  std::optional<Rational> constant_value() const;
  Rational coefficient(const Term& t) const;

  void add_term(const Term& t, const Rational& coeff);

  SymExpr& operator+=(const SymExpr& o);
  SymExpr& operator-=(const SymExpr& o);
  SymExpr& operator*=(const SymExpr& o);
  SymExpr& operator*=(const Rational& c);
  friend SymExpr operator+(SymExpr a, const SymExpr& b) { return a += b; }
  friend SymExpr operator-(SymExpr a, const SymExpr& b) { return a -= b; }
  friend SymExpr operator*(const SymExpr& a, const SymExpr& b);
  friend SymExpr operator*(SymExpr a, const Rational& c) { return a *= c; }
  friend SymExpr operator*(const Rational& c, SymExpr a) { return a *= c; }
  SymExpr operator-() const;
  SymExpr pow(unsigned e) const;

  friend bool operator==(const SymExpr& a, const SymExpr& b) { return a.terms_ == b.terms_; }

  /// Replaces atoms for which `rule` returns a value; others are kept.
  SymExpr substitute(const std::function<std::optional<SymExpr>(const Atom&)>& rule) const;

  /// Number of distinct content monomials (e.g. power-sum products),
  /// ignoring how the coefficient depends on n.
  std::size_t content_term_count() const;

 private:
  TermMap terms_;
};

/// n as an expression; (n)_k with (n)_0 = 1 and (n)_1 = n.
SymExpr sample_size();
SymExpr falling_factorial(int depth);

}  // namespace umbral
