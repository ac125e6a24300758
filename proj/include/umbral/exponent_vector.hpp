#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace umbral {

inline constexpr std::size_t kMaxArity = 8;

/// Fixed-width exponent vector over a declared variable family.
///
/// The width ("arity") is chosen per computation; all vectors that meet in
/// one expression must share it. Ordering is the canonical monomial order:
/// total degree ascending, then exponents lexicographically descending (so
/// x comes before y), then arity.
class ExpVec {
 public:
  ExpVec() = default;
  explicit ExpVec(std::size_t arity);
  ExpVec(std::initializer_list<int> exponents);
  explicit ExpVec(const std::vector<int>& exponents);

  static ExpVec unit(std::size_t arity, std::size_t coordinate);

  std::size_t arity() const { return arity_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, int value);

  int degree() const;
  bool is_zero() const { return degree() == 0; }
  std::vector<int> to_vector() const;

  ExpVec& operator+=(const ExpVec& other);
  friend ExpVec operator+(ExpVec a, const ExpVec& b) { return a += b; }

  /// Applies a coordinate permutation: result[perm[i]] = (*this)[i].
  ExpVec permuted(const std::vector<std::size_t>& perm) const;

  friend bool operator==(const ExpVec&, const ExpVec&) = default;
  friend std::strong_ordering operator<=>(const ExpVec& a, const ExpVec& b);

  std::size_t hash() const;

  /// "2,1" style.
  std::string to_string() const;

 private:
  std::array<std::uint16_t, kMaxArity> exps_{};
  std::uint8_t arity_ = 0;
};

struct ExpVecHash {
  std::size_t operator()(const ExpVec& v) const { return v.hash(); }
};

}  // namespace umbral
