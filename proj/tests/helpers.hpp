#pragma once

// Independent reference implementations used as test oracles, plus small
// builders for expected expressions.

#include <functional>
#include <random>
#include <vector>

#include "umbral/fraction.hpp"
#include "umbral/sym_expr.hpp"

namespace testing {

using umbral::Atom;
using umbral::AtomKind;
using umbral::Bracket;
using umbral::ExpVec;
using umbral::Integer;
using umbral::Rational;
using umbral::SymExpr;
using umbral::Term;

// ------------------------------------------------------------- builders

inline SymExpr S(ExpVec v, int power = 1) { return SymExpr::of(Atom::power_sum(v), power); }
inline SymExpr m(ExpVec v, int power = 1) { return SymExpr::of(Atom::moment(v), power); }
inline SymExpr aug(std::vector<ExpVec> parts) { return SymExpr::of(Atom::bracket(Bracket(std::move(parts)))); }
inline SymExpr n() { return umbral::sample_size(); }
inline SymExpr ff(int k) { return umbral::falling_factorial(k); }

// --------------------------------------------------------- combinatorics

// Set partitions of {0..k-1} by recursive insertion of the last element.
inline std::vector<std::vector<std::vector<std::size_t>>> brute_set_partitions(std::size_t k) {
  std::vector<std::vector<std::vector<std::size_t>>> out;
  std::vector<std::vector<std::size_t>> current;
  std::function<void(std::size_t)> rec = [&](std::size_t e) {
    if (e == k) {
      out.push_back(current);
      return;
    }
    for (std::size_t b = 0; b < current.size(); ++b) {
      current[b].push_back(e);
      rec(e + 1);
      current[b].pop_back();
    }
    current.push_back({e});
    rec(e + 1);
    current.pop_back();
  };
  rec(0);
  return out;
}

// Bell numbers from Stirling numbers of the second kind.
inline Integer bell_by_stirling(std::size_t k) {
  std::vector<std::vector<Integer>> s(k + 1, std::vector<Integer>(k + 1, 0));
  s[0][0] = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = 1; j <= i; ++j) s[i][j] = s[i - 1][j - 1] + Integer(static_cast<unsigned long>(j)) * s[i - 1][j];
  }
  Integer b = 0;
  for (std::size_t j = 0; j <= k; ++j) b += s[k][j];
  return b;
}

// Number of integer partitions of i by the parts-at-most-j recurrence.
inline long partition_count(int i) {
  std::vector<long> p(static_cast<std::size_t>(i) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= i; ++part) {
    for (int s = part; s <= i; ++s) p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
  }
  return p[static_cast<std::size_t>(i)];
}

// -------------------------------------------------------- numeric values

using Data = std::vector<std::vector<Rational>>;

inline Data random_data(std::mt19937& rng, std::size_t n, std::size_t arity) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  Data d(n, std::vector<Rational>(arity));
  for (auto& row : d) {
    for (auto& x : row) {
      x = Rational(num(rng), den(rng));
      x.canonicalize();
    }
  }
  return d;
}

inline Rational unit_power(const std::vector<Rational>& row, const ExpVec& v) {
  Rational x = 1;
  for (std::size_t c = 0; c < v.arity(); ++c) {
    for (int k = 0; k < v[c]; ++k) x *= row[c];
  }
  return x;
}

// Sum over injective index tuples, by direct nested enumeration.
inline Rational bracket_value(const std::vector<ExpVec>& parts, const Data& d) {
  Rational total = 0;
  std::vector<std::size_t> idx(parts.size());
  std::function<void(std::size_t, Rational)> rec = [&](std::size_t j, Rational acc) {
    if (j == parts.size()) {
      total += acc;
      return;
    }
    for (std::size_t i = 0; i < d.size(); ++i) {
      bool used = false;
      for (std::size_t q = 0; q < j; ++q) used = used || idx[q] == i;
      if (used) continue;
      idx[j] = i;
      rec(j + 1, acc * unit_power(d[i], parts[j]));
    }
  };
  rec(0, Rational(1));
  return total;
}

// Value of an expression in n, (n)_k, (n-j), power sums and brackets on data.
inline Rational value_on(const SymExpr& e, const Data& d) {
  const Rational nval(static_cast<long>(d.size()));
  Rational total = 0;
  for (const auto& [t, c] : e.terms()) {
    Rational term = c;
    for (const auto& [a, p] : t.factors()) {
      Rational v = 0;
      switch (a.kind()) {
        case AtomKind::SampleSize:
          v = nval;
          break;
        case AtomKind::FallingFactorial:
          v = 1;
          for (int j = 0; j < a.parameter(); ++j) v *= nval - j;
          break;
        case AtomKind::ShiftedSampleSize:
          v = nval - a.parameter();
          break;
        case AtomKind::PowerSum:
          for (const auto& row : d) v += unit_power(row, a.index());
          break;
        case AtomKind::Bracket:
          v = bracket_value(a.bracket().parts(), d);
          break;
        case AtomKind::Moment:
          throw std::invalid_argument("moments have no data value");
      }
      for (int k = 0; k < p; ++k) term *= v;
    }
    total += term;
  }
  return total;
}

inline Rational value_on(const umbral::Fraction& f, const Data& d) {
  return value_on(f.numerator, d) / value_on(f.denominator, d);
}

// ------------------------------------------------------------ cumulants

// Joint cumulant of the listed components by the set-partition formula
// sum_pi (-1)^{|pi|-1} (|pi|-1)! prod_B m_{sum of B}.
inline SymExpr brute_joint_cumulant(const std::vector<ExpVec>& t) {
  SymExpr out;
  for (const auto& pi : brute_set_partitions(t.size())) {
    const std::size_t k = pi.size();
    Integer c = 1;
    for (std::size_t j = 1; j < k; ++j) c *= Integer(static_cast<unsigned long>(j));
    if (k % 2 == 0) c = -c;
    SymExpr prod{Rational(c)};
    for (const auto& block : pi) {
      ExpVec v(t.front().arity());
      for (std::size_t e : block) v += t[e];
      prod *= m(v);
    }
    out += prod;
  }
  return out;
}

}  // namespace testing
