#include "umbral/oracle.hpp"

#include <stdexcept>

#include "umbral/errors.hpp"

namespace umbral {

FormalSample::FormalSample(int n_, std::size_t arity_) : n(n_), arity(arity_) {
  if (n < 1 || n > kMaxOracleSampleSize) {
    throw GuardViolation("oracle sample size must lie in 1.." + std::to_string(kMaxOracleSampleSize) +
                         ", got " + std::to_string(n));
  }
  if (arity < 1 || arity > kMaxArity) throw std::invalid_argument("oracle arity out of range");
}

IndexedPolynomial IndexedPolynomial::constant(const FormalSample& s, const Rational& c) {
  IndexedPolynomial p;
  p.add(Key(static_cast<std::size_t>(s.n) * s.arity, 0), c);
  return p;
}

void IndexedPolynomial::add(const Key& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IndexedPolynomial& IndexedPolynomial::operator+=(const IndexedPolynomial& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

IndexedPolynomial operator*(const IndexedPolynomial& a, const IndexedPolynomial& b) {
  IndexedPolynomial out;
  IndexedPolynomial::Key key;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      key = ka;
      for (std::size_t i = 0; i < key.size(); ++i) key[i] = static_cast<std::uint16_t>(key[i] + kb[i]);
      out.add(key, ca * cb);
    }
  }
  return out;
}

IndexedPolynomial operator*(IndexedPolynomial a, const Rational& c) {
  if (c == 0) return {};
  for (auto& [k, x] : a.terms_) x *= c;
  return a;
}

namespace {

void check_vector(const ExpVec& v, const FormalSample& s) {
  if (v.arity() != s.arity) throw std::invalid_argument("exponent vector arity differs from the sample");
  if (v.is_zero()) throw std::invalid_argument("zero exponent vector");
}

// Calls visit(tuple) for every injective tuple of k indices below n.
template <class Visit>
void injective_tuples(std::size_t k, std::size_t n, Visit&& visit) {
  std::vector<std::size_t> tuple(k);
  std::vector<bool> used(n, false);
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (depth == k) {
      visit(tuple);
      return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      used[i] = true;
      tuple[depth] = i;
      self(self, depth + 1);
      used[i] = false;
    }
  };
  recurse(recurse, 0);
}

IndexedPolynomial power(const IndexedPolynomial& base, int e, const FormalSample& s) {
  IndexedPolynomial out = IndexedPolynomial::constant(s, 1);
  for (int i = 0; i < e; ++i) out = out * base;
  return out;
}

}  // namespace

IndexedPolynomial expand_power_sum(const ExpVec& v, const FormalSample& s) {
  check_vector(v, s);
  IndexedPolynomial p;
  for (int i = 0; i < s.n; ++i) {
    IndexedPolynomial::Key key(static_cast<std::size_t>(s.n) * s.arity, 0);
    for (std::size_t c = 0; c < s.arity; ++c) key[static_cast<std::size_t>(i) * s.arity + c] = static_cast<std::uint16_t>(v[c]);
    p.add(key, 1);
  }
  return p;
}

BracketExpansion expand_bracket(const Bracket& b, const FormalSample& s) {
  BracketExpansion out;
  for (const ExpVec& v : b.parts()) check_vector(v, s);
  if (b.size() > static_cast<std::size_t>(s.n)) {
    out.empty_sum = true;
    return out;
  }
  injective_tuples(b.size(), static_cast<std::size_t>(s.n), [&](const std::vector<std::size_t>& tuple) {
    IndexedPolynomial::Key key(static_cast<std::size_t>(s.n) * s.arity, 0);
    for (std::size_t j = 0; j < tuple.size(); ++j) {
      for (std::size_t c = 0; c < s.arity; ++c) {
        key[tuple[j] * s.arity + c] = static_cast<std::uint16_t>(key[tuple[j] * s.arity + c] + b.parts()[j][c]);
      }
    }
    out.value.add(key, 1);
  });
  return out;
}

SymExpr expectation(const IndexedPolynomial& p, const FormalSample& s) {
  SymExpr out;
  for (const auto& [key, c] : p.terms()) {
    std::vector<std::pair<Atom, int>> factors;
    for (int i = 0; i < s.n; ++i) {
      ExpVec unit(s.arity);
      for (std::size_t col = 0; col < s.arity; ++col) unit.set(col, key[static_cast<std::size_t>(i) * s.arity + col]);
      if (!unit.is_zero()) factors.emplace_back(Atom::moment(unit), 1);
    }
    out.add_term(Term(std::move(factors)), c);
  }
  return out;
}

IndexedPolynomial expand_over_sample(const SymExpr& e, const FormalSample& s) {
  const SymExpr specialized = at_sample_size(e, Rational(s.n));
  std::map<Atom, IndexedPolynomial> cache;
  auto expansion = [&](const Atom& a) -> const IndexedPolynomial& {
    auto it = cache.find(a);
    if (it != cache.end()) return it->second;
    IndexedPolynomial p;
    switch (a.kind()) {
      case AtomKind::PowerSum:
        p = expand_power_sum(a.index(), s);
        break;
      case AtomKind::Bracket:
        p = expand_bracket(a.bracket(), s).value;
        break;
      default:
        throw std::invalid_argument("oracle expects power sums and brackets only");
    }
    return cache.emplace(a, std::move(p)).first->second;
  };

  IndexedPolynomial out;
  for (const auto& [t, c] : specialized.terms()) {
    IndexedPolynomial product = IndexedPolynomial::constant(s, c);
    for (const auto& [a, p] : t.factors()) product = product * power(expansion(a), p, s);
    out += product;
  }
  return out;
}

SymExpr oracle_expectation(const SymExpr& e, const FormalSample& s) {
  return expectation(expand_over_sample(e, s), s);
}

SymExpr oracle_expectation(const Fraction& f, const FormalSample& s) {
  auto den = at_sample_size(f.denominator, Rational(s.n)).constant_value();
  if (!den) throw std::invalid_argument("denominator depends on data atoms");
  if (*den == 0) throw std::domain_error("denominator vanishes at n = " + std::to_string(s.n));
  return oracle_expectation(f.numerator, s) * Rational(1 / *den);
}

Rational evaluate_on_data(const SymExpr& e, const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) throw std::invalid_argument("no data rows");
  const std::size_t n = rows.size();
  auto unit_value = [&](std::size_t i, const ExpVec& v) {
    if (rows[i].size() != v.arity()) throw std::invalid_argument("data width differs from exponent arity");
    Rational x = 1;
    for (std::size_t c = 0; c < v.arity(); ++c) {
      for (int k = 0; k < v[c]; ++k) x *= rows[i][c];
    }
    return x;
  };
  const SymExpr specialized = at_sample_size(e, Rational(static_cast<long>(n)));
  Rational total = 0;
  for (const auto& [t, c] : specialized.terms()) {
    Rational term = c;
    for (const auto& [a, p] : t.factors()) {
      Rational value = 0;
      if (a.kind() == AtomKind::PowerSum) {
        for (std::size_t i = 0; i < n; ++i) value += unit_value(i, a.index());
      } else if (a.kind() == AtomKind::Bracket) {
        const auto& parts = a.bracket().parts();
        if (parts.size() <= n) {
          injective_tuples(parts.size(), n, [&](const std::vector<std::size_t>& tuple) {
            Rational x = 1;
            for (std::size_t j = 0; j < tuple.size(); ++j) x *= unit_value(tuple[j], parts[j]);
            value += x;
          });
        }
      } else {
        throw std::invalid_argument("data evaluation expects power sums and brackets only");
      }
      for (int k = 0; k < p; ++k) term *= value;
    }
    total += term;
  }
  return total;
}

Rational evaluate_on_data(const Fraction& f, const std::vector<std::vector<Rational>>& rows) {
  const Rational den = evaluate_on_data(f.denominator, rows);
  if (den == 0) throw std::domain_error("denominator vanishes on this sample");
  return evaluate_on_data(f.numerator, rows) / den;
}

}  // namespace umbral
