#include "umbral/estimators.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "parallel.hpp"
#include "umbral/conversion.hpp"
#include "umbral/subdivisions.hpp"

namespace umbral {

namespace {

// Coefficients of AUG[...] / (n)_k, keyed by (k, bracket).
using OuterSum = std::map<std::pair<int, Bracket>, Rational>;

// One choice of subdivision for one cumulant factor.
struct FactorTerm {
  int blocks = 0;
  Integer coeff;
  std::vector<ExpVec> parts;
};

std::vector<FactorTerm> univariate_factor_terms(int order) {
  std::vector<FactorTerm> out;
  for (const IntegerPartition& lambda : integer_partitions(order)) {
    FactorTerm t;
    t.blocks = static_cast<int>(lambda.length());
    t.coeff = singleton_factorial_moment(lambda.length()) * d_lambda(lambda);
    for (int p : lambda.parts()) t.parts.push_back(ExpVec{p});
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<FactorTerm> multivariate_factor_terms(const Multiset<ExpVec>& group, ComputeStats* stats) {
  std::vector<ExpVec> values;
  std::vector<std::size_t> mult;
  for (const auto& [v, c] : group.entries()) {
    values.push_back(v);
    mult.push_back(c);
  }
  const PatternView view = unlabeled_patterns(mult);
  if (stats) stats->observe_subdivisions(view.patterns->size());
  std::vector<FactorTerm> out;
  for (const SubdivisionPattern& pat : *view.patterns) {
    FactorTerm t;
    t.blocks = static_cast<int>(pat.block_count());
    t.coeff = pat.multiplicity * singleton_factorial_moment(pat.block_count());
    for (const BlockPattern& block : pat.blocks) {
      ExpVec merged(values.front().arity());
      for (std::size_t e = 0; e < values.size(); ++e) {
        const int c = block.counts[view.position[e]];
        for (std::size_t i = 0; i < merged.arity(); ++i) merged.set(i, merged[i] + c * values[e][i]);
      }
      t.parts.insert(t.parts.end(), block.repetition, merged);
    }
    out.push_back(std::move(t));
  }
  return out;
}

// Cartesian product over the factors: prod coeff / (n)_{sum blocks} times the
// bracket of all parts together.
OuterSum combine_factors(const std::vector<std::vector<FactorTerm>>& factors) {
  OuterSum outer;
  std::vector<ExpVec> parts;
  Integer coeff = 1;
  auto recurse = [&](auto&& self, std::size_t f, int blocks) -> void {
    if (f == factors.size()) {
      outer[{blocks, Bracket(parts)}] += Rational(coeff);
      return;
    }
    for (const FactorTerm& t : factors[f]) {
      const std::size_t mark = parts.size();
      const Integer saved = coeff;
      parts.insert(parts.end(), t.parts.begin(), t.parts.end());
      coeff *= t.coeff;
      self(self, f + 1, blocks + t.blocks);
      coeff = saved;
      parts.resize(mark);
    }
  };
  recurse(recurse, 0, 0);
  return outer;
}

// Rewrites every bracket in power sums and brings the sum over the common
// denominator (n)_K, K the deepest falling factorial.
Fraction assemble(const OuterSum& outer, const ComputeOptions& options, ComputeStats* stats) {
  std::map<Bracket, std::size_t> index;
  std::vector<const Bracket*> brackets;
  for (const auto& [key, c] : outer) {
    if (index.emplace(key.second, brackets.size()).second) brackets.push_back(&key.second);
  }
  std::vector<PowerSumPoly> polys(brackets.size());
  detail::parallel_for(brackets.size(), options.threads,
                       [&](std::size_t i) { polys[i] = aug_to_ps_poly(*brackets[i], options, stats); });

  int depth = 0;
  std::map<PowerSumKey, std::map<int, Rational>> by_product;
  for (const auto& [key, c] : outer) {
    depth = std::max(depth, key.first);
    for (const auto& [product, coeff] : polys[index.at(key.second)]) {
      by_product[product][key.first] += c * Rational(coeff);
    }
  }

  std::vector<SamplePoly> cofactor(static_cast<std::size_t>(depth) + 1);
  for (int k = 0; k <= depth; ++k) cofactor[static_cast<std::size_t>(k)] = SamplePoly::factorial_range(k, depth);

  SymExpr numerator;
  const Atom n = Atom::sample_size();
  for (const auto& [product, by_depth] : by_product) {
    SamplePoly p;
    for (const auto& [k, c] : by_depth) p += cofactor[static_cast<std::size_t>(k)] * c;
    std::vector<std::pair<Atom, int>> factors;
    for (const ExpVec& v : product) factors.emplace_back(Atom::power_sum(v), 1);
    const Term content(std::move(factors));
    for (std::size_t d = 0; d < p.coeffs().size(); ++d) {
      if (p.coeffs()[d] == 0) continue;
      const Term t = d == 0 ? content : Term::of(n, static_cast<int>(d)) * content;
      numerator.add_term(t, p.coeffs()[d]);
    }
  }
  return normalize_over_common_denominator(numerator, falling_factorial(depth));
}

void validate_groups(const std::vector<Multiset<ExpVec>>& groups) {
  if (groups.empty()) throw std::invalid_argument("at least one cumulant group is required");
  std::size_t arity = 0;
  for (const auto& g : groups) {
    if (g.empty()) throw std::invalid_argument("empty cumulant group");
    for (const auto& [v, c] : g.entries()) {
      if (v.is_zero()) throw std::invalid_argument("zero exponent vector in cumulant index");
      if (arity == 0) arity = v.arity();
      if (v.arity() != arity) throw std::invalid_argument("exponent vectors of different arity");
    }
  }
}

}  // namespace

SymExpr cumulants_from_moments(int i) {
  if (i < 1) throw std::invalid_argument("cumulant order must be positive");
  SymExpr out;
  for (const IntegerPartition& lambda : integer_partitions(i)) {
    std::vector<std::pair<Atom, int>> factors;
    for (int p : lambda.parts()) factors.emplace_back(Atom::moment(ExpVec{p}), 1);
    out.add_term(Term(std::move(factors)),
                 Rational(singleton_factorial_moment(lambda.length()) * d_lambda(lambda)));
  }
  return out;
}

SymExpr joint_cumulant(const Multiset<ExpVec>& t) {
  validate_groups({t});
  SymExpr out;
  for (const FactorTerm& term : multivariate_factor_terms(t, nullptr)) {
    std::vector<std::pair<Atom, int>> factors;
    for (const ExpVec& v : term.parts) factors.emplace_back(Atom::moment(v), 1);
    out.add_term(Term(std::move(factors)), Rational(term.coeff));
  }
  return out;
}

SymExpr cumulant_product(const std::vector<Multiset<ExpVec>>& groups) {
  SymExpr out(1);
  for (const auto& g : groups) out *= joint_cumulant(g);
  return out;
}

int total_degree(const std::vector<Multiset<ExpVec>>& groups) {
  int d = 0;
  for (const auto& g : groups) {
    for (const auto& [v, c] : g.entries()) d += v.degree() * static_cast<int>(c);
  }
  return d;
}

Fraction u_statistic(const std::vector<ExpVec>& parts, bool want_power_sums,
                     const ComputeOptions& options, ComputeStats* stats) {
  if (parts.empty()) throw std::invalid_argument("U-statistic needs at least one part");
  check_order(static_cast<long>(parts.size()), options, "U-statistic with part count");
  Bracket b(parts);
  const int k = static_cast<int>(b.size());
  if (!want_power_sums) return {SymExpr::of(Atom::bracket(b)), falling_factorial(k)};
  OuterSum outer;
  outer[{k, b}] = 1;
  return assemble(outer, options, stats);
}

Fraction u_statistic(const IntegerPartition& lambda, bool want_power_sums,
                     const ComputeOptions& options, ComputeStats* stats) {
  std::vector<ExpVec> parts;
  for (int p : lambda.parts()) parts.push_back(ExpVec{p});
  return u_statistic(parts, want_power_sums, options, stats);
}

Fraction polykay(const std::vector<int>& orders, const ComputeOptions& options, ComputeStats* stats) {
  if (orders.empty()) throw std::invalid_argument("polykay needs at least one order");
  long sum = 0;
  for (int r : orders) {
    if (r < 1) throw std::invalid_argument("polykay orders must be positive");
    sum += r;
  }
  check_order(sum, options, "total order");
  std::vector<std::vector<FactorTerm>> factors;
  for (int r : orders) factors.push_back(univariate_factor_terms(r));
  return assemble(combine_factors(factors), options, stats);
}

Fraction k_statistic(int i, const ComputeOptions& options, ComputeStats* stats) {
  if (i < 1) throw std::invalid_argument("k-statistic order must be positive");
  return polykay({i}, options, stats);
}

Fraction multivariate_polykay(const std::vector<Multiset<ExpVec>>& groups, const ComputeOptions& options,
                              ComputeStats* stats) {
  validate_groups(groups);
  long parts = 0;
  for (const auto& g : groups) parts += static_cast<long>(g.size());
  check_order(parts, options, "total cumulant index size");
  std::vector<std::vector<FactorTerm>> factors;
  for (const auto& g : groups) factors.push_back(multivariate_factor_terms(g, stats));
  return assemble(combine_factors(factors), options, stats);
}

Fraction multivariate_k_statistic(const Multiset<ExpVec>& t, const ComputeOptions& options,
                                  ComputeStats* stats) {
  return multivariate_polykay({t}, options, stats);
}

}  // namespace umbral
