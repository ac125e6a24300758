#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "umbral/exponent_vector.hpp"
#include "umbral/multiset.hpp"

namespace umbral {

/// Identifier of an uncorrelated singleton umbra chi_i.
using SingletonLabel = int;

/// An umbral monomial mu_1^k mu_2^l ... optionally multiplied by singleton
/// umbrae. Labels are held as a sorted multiset so that chi_1^2 (which
/// evaluates to zero) is representable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(ExpVec exponents, std::vector<SingletonLabel> labels = {});

  const ExpVec& exponents() const { return exponents_; }
  const std::vector<SingletonLabel>& labels() const { return labels_; }
  bool labeled() const { return !labels_.empty(); }
  std::size_t arity() const { return exponents_.arity(); }
  bool is_unit() const { return exponents_.is_zero() && labels_.empty(); }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Canonical order: exponent vector order, then label sequence.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  ExpVec exponents_;
  std::vector<SingletonLabel> labels_;
};

/// Evaluates the product of a block of labeled monomials.
///
/// Returns std::nullopt when a singleton label occurs at least twice across
/// the block (chi^2 evaluates to zero). Otherwise the exponents are summed and
/// every label is dropped, since E[chi_i] = 1.
std::optional<Monomial> merge_block(std::span<const Monomial> block);
std::optional<Monomial> merge_block(const Multiset<Monomial>& block);

}  // namespace umbral
