#include "umbral/exponent_vector.hpp"

#include <limits>
#include <stdexcept>

namespace umbral {

namespace {

void check_arity(std::size_t arity) {
  if (arity > kMaxArity) {
    throw std::invalid_argument("arity " + std::to_string(arity) + " exceeds maximum " +
                                std::to_string(kMaxArity));
  }
}

std::uint16_t checked_exponent(int value) {
  if (value < 0 || value > std::numeric_limits<std::uint16_t>::max()) {
    throw std::invalid_argument("exponent out of range: " + std::to_string(value));
  }
  return static_cast<std::uint16_t>(value);
}

}  // namespace

ExpVec::ExpVec(std::size_t arity) : arity_(static_cast<std::uint8_t>(arity)) { check_arity(arity); }

ExpVec::ExpVec(std::initializer_list<int> exponents) : ExpVec(std::vector<int>(exponents)) {}

ExpVec::ExpVec(const std::vector<int>& exponents) {
  check_arity(exponents.size());
  arity_ = static_cast<std::uint8_t>(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) exps_[i] = checked_exponent(exponents[i]);
}

ExpVec ExpVec::unit(std::size_t arity, std::size_t coordinate) {
  ExpVec v(arity);
  if (coordinate >= arity) throw std::invalid_argument("unit coordinate out of range");
  v.exps_[coordinate] = 1;
  return v;
}

void ExpVec::set(std::size_t i, int value) {
  if (i >= arity_) throw std::out_of_range("ExpVec::set index");
  exps_[i] = checked_exponent(value);
}

int ExpVec::degree() const {
  int d = 0;
  for (std::size_t i = 0; i < arity_; ++i) d += exps_[i];
  return d;
}

std::vector<int> ExpVec::to_vector() const {
  return std::vector<int>(exps_.begin(), exps_.begin() + arity_);
}

ExpVec& ExpVec::operator+=(const ExpVec& other) {
  if (other.arity_ != arity_) throw std::invalid_argument("arity mismatch in exponent sum");
  for (std::size_t i = 0; i < arity_; ++i) exps_[i] = checked_exponent(exps_[i] + other.exps_[i]);
  return *this;
}

ExpVec ExpVec::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != arity_) throw std::invalid_argument("permutation width mismatch");
  ExpVec out(arity_);
  for (std::size_t i = 0; i < arity_; ++i) out.exps_[perm[i]] = exps_[i];
  return out;
}

std::strong_ordering operator<=>(const ExpVec& a, const ExpVec& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const std::size_t width = std::min(a.arity_, b.arity_);
  for (std::size_t i = 0; i < width; ++i) {
    // Descending: the vector with the larger leading exponent sorts first.
    if (auto c = b.exps_[i] <=> a.exps_[i]; c != 0) return c;
  }
  return a.arity_ <=> b.arity_;
}

std::size_t ExpVec::hash() const {
  std::size_t h = arity_;
  for (std::size_t i = 0; i < arity_; ++i) h = h * 1000003u ^ exps_[i];
  return h;
}

std::string ExpVec::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < arity_; ++i) {
    if (i) s += ',';
    s += std::to_string(exps_[i]);
  }
  return s;
}

}  // namespace umbral
