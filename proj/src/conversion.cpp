#include "umbral/conversion.hpp"

#include <algorithm>
#include <stdexcept>

#include "umbral/subdivisions.hpp"

namespace umbral {

namespace {

std::vector<Integer> singleton_moments(std::size_t up_to) {
  std::vector<Integer> x(up_to + 1);
  for (std::size_t k = 1; k <= up_to; ++k) x[k] = singleton_factorial_moment(k);
  return x;
}

// Sum over elements e of counts[position[e]] * values[e].
ExpVec merge_counts(const BlockPattern& block, const std::vector<ExpVec>& values,
                    const std::vector<std::size_t>& position, std::size_t& size) {
  const std::size_t arity = values.front().arity();
  ExpVec merged(arity);
  size = 0;
  for (std::size_t e = 0; e < values.size(); ++e) {
    const std::size_t c = block.counts[position[e]];
    if (c == 0) continue;
    size += c;
    for (std::size_t i = 0; i < arity; ++i) {
      merged.set(i, merged[i] + static_cast<int>(c) * values[e][i]);
    }
  }
  return merged;
}

SymExpr brackets_to_expr(const std::map<Bracket, Integer>& acc) {
  SymExpr out;
  for (const auto& [b, c] : acc) out.add_term(Term::of(Atom::bracket(b)), Rational(c));
  return out;
}

void require_arity(const std::vector<ExpVec>& values) {
  for (const ExpVec& v : values) {
    if (v.arity() != values.front().arity()) {
      throw std::invalid_argument("exponent vectors of different arity in one computation");
    }
    if (v.is_zero()) throw std::invalid_argument("zero exponent vector");
  }
}

}  // namespace

SymExpr to_expr(const PowerSumPoly& p) {
  SymExpr out;
  for (const auto& [key, c] : p) {
    std::vector<std::pair<Atom, int>> factors;
    for (const ExpVec& v : key) factors.emplace_back(Atom::power_sum(v), 1);
    out.add_term(Term(std::move(factors)), Rational(c));
  }
  return out;
}

PowerSumPoly aug_to_ps_poly(const Bracket& b, const ComputeOptions& options, ComputeStats* stats) {
  if (b.size() == 0) throw std::invalid_argument("empty bracket");
  check_order(static_cast<long>(b.size()), options, "bracket with part count");

  std::vector<ExpVec> values;
  std::vector<std::size_t> mult;
  const Multiset<ExpVec> parts = b.as_multiset();
  for (const auto& [v, count] : parts.entries()) {
    values.push_back(v);
    mult.push_back(count);
  }
  const PatternView view = unlabeled_patterns(mult);
  if (stats) stats->observe_subdivisions(view.patterns->size());
  const std::vector<Integer> x = singleton_moments(b.size());

  PowerSumPoly out;
  PowerSumKey key;
  Integer coeff;
  for (const SubdivisionPattern& pat : *view.patterns) {
    coeff = pat.multiplicity;
    key.clear();
    for (const BlockPattern& block : pat.blocks) {
      std::size_t size = 0;
      const ExpVec merged = merge_counts(block, values, view.position, size);
      for (std::size_t r = 0; r < block.repetition; ++r) {
        coeff *= x[size];
        key.push_back(merged);
      }
    }
    std::sort(key.begin(), key.end());
    out[key] += coeff;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

SymExpr aug_to_ps(const Bracket& b, const ComputeOptions& options, ComputeStats* stats) {
  return to_expr(aug_to_ps_poly(b, options, stats));
}

SymExpr ps_to_aug(const Multiset<Monomial>& m, const ComputeOptions& options, ComputeStats* stats) {
  if (m.empty()) throw std::invalid_argument("empty multiset has no subdivisions");
  check_order(static_cast<long>(m.size()), options, "multiset of size");
  std::vector<ExpVec> values;
  std::vector<std::size_t> mult;
  for (const auto& [mono, count] : m.entries()) {
    if (mono.labeled()) {
      throw std::invalid_argument("ps_to_aug takes unlabeled monomials; use aug_product for labels");
    }
    values.push_back(mono.exponents());
    mult.push_back(count);
  }
  require_arity(values);

  const PatternView view = unlabeled_patterns(mult);
  if (stats) stats->observe_subdivisions(view.patterns->size());
  std::map<Bracket, Integer> acc;
  std::vector<ExpVec> parts;
  for (const SubdivisionPattern& pat : *view.patterns) {
    parts.clear();
    for (const BlockPattern& block : pat.blocks) {
      std::size_t size = 0;
      const ExpVec merged = merge_counts(block, values, view.position, size);
      parts.insert(parts.end(), block.repetition, merged);
    }
    acc[Bracket(parts)] += pat.multiplicity;
  }
  return brackets_to_expr(acc);
}

SymExpr brackets_to_power_sums(const SymExpr& e, const ComputeOptions& options) {
  std::map<Bracket, SymExpr> memo;
  return e.substitute([&](const Atom& a) -> std::optional<SymExpr> {
    if (a.kind() != AtomKind::Bracket) return std::nullopt;
    auto it = memo.find(a.bracket());
    if (it == memo.end()) it = memo.emplace(a.bracket(), aug_to_ps(a.bracket(), options)).first;
    return it->second;
  });
}

SymExpr power_sums_to_brackets(const SymExpr& e, const ComputeOptions& options) {
  SymExpr out;
  for (const auto& [t, c] : e.terms()) {
    Multiset<Monomial> m;
    std::vector<std::pair<Atom, int>> rest;
    for (const auto& [a, p] : t.factors()) {
      if (a.kind() == AtomKind::PowerSum) {
        m.insert(Monomial(a.index()), static_cast<std::size_t>(p));
      } else {
        rest.emplace_back(a, p);
      }
    }
    SymExpr piece = SymExpr::monomial(Term(std::move(rest)), c);
    if (!m.empty()) piece *= ps_to_aug(m, options);
    out += piece;
  }
  return out;
}

SymExpr aug_product(const std::vector<Bracket>& brackets, const ComputeOptions& options,
                    ComputeStats* stats) {
  if (brackets.empty()) throw std::invalid_argument("aug_product needs at least one bracket");
  Multiset<Monomial> m;
  std::vector<ExpVec> all_parts;
  for (std::size_t i = 0; i < brackets.size(); ++i) {
    if (brackets[i].size() == 0) throw std::invalid_argument("empty bracket");
    for (const ExpVec& v : brackets[i].parts()) {
      m.insert(Monomial(v, {static_cast<SingletonLabel>(i)}));
      all_parts.push_back(v);
    }
  }
  require_arity(all_parts);
  check_order(static_cast<long>(m.size()), options, "bracket product with part count");

  std::vector<ExpVec> values;
  std::vector<std::size_t> mult;
  std::vector<std::vector<SingletonLabel>> labels;
  for (const auto& [mono, count] : m.entries()) {
    values.push_back(mono.exponents());
    mult.push_back(count);
    labels.push_back(mono.labels());
  }
  const PatternList patterns = labeled_patterns(mult, labels);
  if (stats) stats->observe_subdivisions(patterns.size());
  std::vector<std::size_t> identity(values.size());
  for (std::size_t e = 0; e < identity.size(); ++e) identity[e] = e;

  std::map<Bracket, Integer> acc;
  std::vector<ExpVec> parts;
  for (const SubdivisionPattern& pat : patterns) {
    parts.clear();
    for (const BlockPattern& block : pat.blocks) {
      std::size_t size = 0;
      const ExpVec merged = merge_counts(block, values, identity, size);
      parts.insert(parts.end(), block.repetition, merged);
    }
    acc[Bracket(parts)] += pat.multiplicity;
  }
  return brackets_to_expr(acc);
}

SymExpr expectation_of_brackets(const SymExpr& e) {
  return e.substitute([](const Atom& a) -> std::optional<SymExpr> {
    switch (a.kind()) {
      case AtomKind::Bracket: {
        SymExpr out = falling_factorial(static_cast<int>(a.bracket().size()));
        for (const ExpVec& v : a.bracket().parts()) out *= SymExpr::of(Atom::moment(v));
        return out;
      }
      case AtomKind::PowerSum:
      case AtomKind::Moment:
        throw std::invalid_argument("expectation_of_brackets expects brackets only");
      default:
        return std::nullopt;
    }
  });
}

}  // namespace umbral
