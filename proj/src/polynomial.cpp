#include "umbral/polynomial.hpp"

#include <stdexcept>

namespace umbral {

SamplePoly::SamplePoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

SamplePoly SamplePoly::constant(const Rational& c) { return SamplePoly({c}); }

SamplePoly SamplePoly::linear(const Rational& root) { return SamplePoly({-root, Rational(1)}); }

SamplePoly SamplePoly::falling_factorial(int k) { return factorial_range(0, k); }

SamplePoly SamplePoly::factorial_range(int from, int to) {
  SamplePoly p = constant(1);
  for (int j = from; j < to; ++j) p = p * linear(j);
  return p;
}

void SamplePoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational SamplePoly::operator()(const Rational& n) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * n + *it;
  return acc;
}

SamplePoly& SamplePoly::operator+=(const SamplePoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

SamplePoly& SamplePoly::operator*=(const Rational& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (Rational& x : c_) x *= c;
  return *this;
}

SamplePoly operator*(const SamplePoly& a, const SamplePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return SamplePoly(std::move(out));
}

std::pair<SamplePoly, SamplePoly> SamplePoly::divmod(const SamplePoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = c_;
  if (degree() < d.degree()) return {SamplePoly{}, *this};
  std::vector<Rational> quot(rem.size() - d.c_.size() + 1);
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational q = rem[k + d.c_.size() - 1] / d.leading();
    quot[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= q * d.c_[j];
  }
  return {SamplePoly(std::move(quot)), SamplePoly(std::move(rem))};
}

SamplePoly SamplePoly::monic() const {
  if (is_zero()) return *this;
  SamplePoly out = *this;
  Rational lead = leading();
  for (Rational& x : out.c_) x /= lead;
  return out;
}

SamplePoly gcd(const SamplePoly& a, const SamplePoly& b) {
  SamplePoly x = a;
  SamplePoly y = b;
  while (!y.is_zero()) {
    SamplePoly r = x.divmod(y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

}  // namespace umbral
