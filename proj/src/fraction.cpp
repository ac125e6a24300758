#include "umbral/fraction.hpp"

#include <algorithm>
#include <stdexcept>

namespace umbral {

namespace {

std::optional<SymExpr> expand_rule(const Atom& a) {
  switch (a.kind()) {
    case AtomKind::FallingFactorial:
      return to_expr(SamplePoly::falling_factorial(a.parameter()));
    case AtomKind::ShiftedSampleSize:
      return to_expr(SamplePoly::linear(a.parameter()));
    default:
      return std::nullopt;
  }
}

Integer lcm_of_denominators(const std::vector<const Rational*>& values) {
  Integer l = 1;
  for (const Rational* q : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q->get_den_mpz_t());
  return l;
}

Integer gcd_of_numerators(const std::vector<const Rational*>& values, const Integer& scale) {
  Integer g = 0;
  for (const Rational* q : values) {
    Integer scaled = q->get_num() * (scale / q->get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
  }
  return g;
}

}  // namespace

SymExpr falling_factorial_expand(const SymExpr& e) { return e.substitute(expand_rule); }

Fraction falling_factorial_expand(const Fraction& f) {
  return {falling_factorial_expand(f.numerator), falling_factorial_expand(f.denominator)};
}

SymExpr to_expr(const SamplePoly& p) {
  SymExpr out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (p.coeffs()[k] == 0) continue;
    Term t = k == 0 ? Term{} : Term::of(Atom::sample_size(), static_cast<int>(k));
    out.add_term(t, p.coeffs()[k]);
  }
  return out;
}

std::map<Term, SamplePoly, TermOrder> collect_by_content(const SymExpr& e) {
  const SymExpr expanded = falling_factorial_expand(e);
  std::map<Term, std::vector<Rational>, TermOrder> dense;
  const Atom n = Atom::sample_size();
  for (const auto& [t, c] : expanded.terms()) {
    auto& coeffs = dense[t.content_part()];
    std::size_t k = static_cast<std::size_t>(t.power_of(n));
    if (coeffs.size() <= k) coeffs.resize(k + 1);
    coeffs[k] += c;
  }
  std::map<Term, SamplePoly, TermOrder> out;
  for (auto& [t, coeffs] : dense) {
    SamplePoly p(std::move(coeffs));
    if (!p.is_zero()) out.emplace(t, std::move(p));
  }
  return out;
}

SamplePoly to_sample_poly(const SymExpr& e) {
  auto groups = collect_by_content(e);
  if (groups.empty()) return {};
  if (groups.size() != 1 || !groups.begin()->first.is_unit()) {
    throw std::invalid_argument("expression is not a polynomial in n alone");
  }
  return groups.begin()->second;
}

SymExpr factor_sample_poly(const SamplePoly& p) {
  if (p.is_zero()) return SymExpr{};
  if (p.degree() == 0) return SymExpr(p.coeffs()[0]);

  // p = content * n^a * rest, with rest a primitive integer polynomial.
  std::size_t a = 0;
  while (p.coeffs()[a] == 0) ++a;
  std::vector<const Rational*> refs;
  for (const Rational& q : p.coeffs()) refs.push_back(&q);
  Integer l = lcm_of_denominators(refs);
  Integer g = gcd_of_numerators(refs, l);
  Rational content = Rational(g, l);
  if (p.leading() < 0) content = -content;
  content.canonicalize();

  std::vector<Rational> rest_coeffs(p.coeffs().begin() + static_cast<std::ptrdiff_t>(a), p.coeffs().end());
  for (Rational& q : rest_coeffs) q /= content;
  SamplePoly rest(std::move(rest_coeffs));

  // Peel integer roots j (each divides the constant coefficient).
  std::vector<std::pair<Atom, int>> factors;
  if (a > 0) factors.emplace_back(Atom::sample_size(), static_cast<int>(a));
  constexpr long kSearchLimit = 100000;
  for (long step = 1; rest.degree() > 0 && step <= 2 * kSearchLimit; ++step) {
    long j = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
    Integer c0 = abs(rest.coeffs()[0].get_num());
    if (Integer(j > 0 ? j : -j) > c0) break;
    int multiplicity = 0;
    while (rest.degree() > 0 && rest(Rational(j)) == 0) {
      rest = rest.divmod(SamplePoly::linear(j)).first;
      ++multiplicity;
    }
    if (multiplicity > 0) factors.emplace_back(Atom::shifted_sample_size(static_cast<int>(j)), multiplicity);
  }
  if (rest.degree() > 0) return to_expr(p);
  return SymExpr::monomial(Term(std::move(factors)), content * rest.coeffs()[0]);
}

Fraction normalize_over_common_denominator(const SymExpr& num, const SymExpr& den) {
  SamplePoly d = to_sample_poly(den);
  if (d.is_zero()) throw std::domain_error("zero denominator");

  auto groups = collect_by_content(num);
  if (groups.empty()) return {SymExpr{}, SymExpr(1)};

  // Cancel the common factor in n; low-degree coefficients first so the gcd
  // collapses to a constant early.
  std::vector<SamplePoly*> polys;
  for (auto& [t, p] : groups) polys.push_back(&p);
  std::stable_sort(polys.begin(), polys.end(),
                   [](const SamplePoly* x, const SamplePoly* y) { return x->degree() < y->degree(); });
  SamplePoly g = d.monic();
  for (const SamplePoly* p : polys) {
    if (g.degree() <= 0) break;
    g = gcd(g, *p);
  }
  if (g.degree() > 0) {
    d = d.divmod(g).first;
    for (SamplePoly* p : polys) *p = p->divmod(g).first;
  }

  // Integer, content-free numerator; positive leading denominator coefficient.
  std::vector<const Rational*> refs;
  for (const SamplePoly* p : polys) {
    for (const Rational& q : p->coeffs()) {
      if (q != 0) refs.push_back(&q);
    }
  }
  Integer l = lcm_of_denominators(refs);
  Integer content = gcd_of_numerators(refs, l);
  Rational scale(l, content);
  scale.canonicalize();
  if (d.leading() < 0) scale = -scale;

  SymExpr numerator;
  for (auto& [t, p] : groups) {
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
      if (p.coeffs()[k] == 0) continue;
      Term nk = k == 0 ? Term{} : Term::of(Atom::sample_size(), static_cast<int>(k));
      numerator.add_term(nk * t, p.coeffs()[k] * scale);
    }
  }
  return {numerator, factor_sample_poly(d * scale)};
}

SymExpr at_sample_size(const SymExpr& e, const Rational& n) {
  return e.substitute([&](const Atom& a) -> std::optional<SymExpr> {
    switch (a.kind()) {
      case AtomKind::SampleSize:
        return SymExpr(n);
      case AtomKind::FallingFactorial:
        return SymExpr(SamplePoly::falling_factorial(a.parameter())(n));
      case AtomKind::ShiftedSampleSize:
        return SymExpr(n - a.parameter());
      default:
        return std::nullopt;
    }
  });
}

SymExpr at_sample_size(const Fraction& f, const Rational& n) {
  auto den = at_sample_size(f.denominator, n).constant_value();
  if (!den) throw std::invalid_argument("denominator depends on data atoms");
  if (*den == 0) throw std::domain_error("denominator vanishes at n = " + n.get_str());
  return at_sample_size(f.numerator, n) * Rational(1 / *den);
}

}  // namespace umbral
