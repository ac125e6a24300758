#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "umbral/fraction.hpp"
#include "umbral/monomial.hpp"
#include "umbral/polynomial.hpp"

using namespace umbral;
using testing::S;
using testing::ff;
using testing::n;

namespace {

Rational q(int num, int den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

SymExpr random_expr(std::mt19937& rng) {
  std::uniform_int_distribution<int> terms(0, 4);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> pick(0, 5);
  std::uniform_int_distribution<int> small(1, 3);
  SymExpr out;
  for (int t = terms(rng); t > 0; --t) {
    SymExpr term(q(coeff(rng), small(rng)));
    for (int f = small(rng); f > 0; --f) {
      switch (pick(rng)) {
        case 0: term *= n(); break;
        case 1: term *= ff(small(rng)); break;
        case 2: term *= SymExpr::of(Atom::shifted_sample_size(small(rng))); break;
        case 3: term *= S(ExpVec{small(rng)}); break;
        case 4: term *= testing::aug({ExpVec{1}, ExpVec{small(rng)}}); break;
        default: term *= testing::m(ExpVec{small(rng)}); break;
      }
    }
    out += term;
  }
  return out;
}

SymExpr n_poly(std::vector<long> coeffs) {
  SymExpr out;
  SymExpr power(1L);
  for (long c : coeffs) {
    out += power * Rational(c);
    power *= n();
  }
  return out;
}

}  // namespace

TEST_CASE("merge_block sums exponents and drops labels") {
  const Monomial a(ExpVec{2, 0}, {1});
  const Monomial b(ExpVec{1, 1}, {2});
  const Monomial c(ExpVec{0, 1});
  auto merged = merge_block(Multiset<Monomial>{a, b, c});
  REQUIRE(merged.has_value());
  CHECK(merged->exponents() == ExpVec{3, 2});
  CHECK(!merged->labeled());
}

TEST_CASE("merge_block annihilates repeated labels") {
  const Monomial a(ExpVec{2, 0}, {1});
  const Monomial b(ExpVec{1, 0}, {1});
  CHECK(!merge_block(Multiset<Monomial>{a, b}).has_value());
  CHECK(!merge_block(Multiset<Monomial>{a, a}).has_value());
  CHECK(!merge_block(Multiset<Monomial>{Monomial(ExpVec{1}, {3, 3})}).has_value());
  CHECK(merge_block(Multiset<Monomial>{Monomial(ExpVec{1}, {1, 2})}).has_value());
}

TEST_CASE("merge_block is order independent") {
  std::vector<Monomial> items{Monomial(ExpVec{1, 0}, {1}), Monomial(ExpVec{0, 2}), Monomial(ExpVec{3, 1}, {2})};
  const auto first = merge_block(std::span<const Monomial>(items));
  std::sort(items.begin(), items.end());
  do {
    CHECK(merge_block(std::span<const Monomial>(items)) == first);
  } while (std::next_permutation(items.begin(), items.end()));
}

TEST_CASE("exponent vector order") {
  CHECK(ExpVec{1, 0} < ExpVec{0, 1});
  CHECK(ExpVec{0, 1} < ExpVec{2, 0});
  CHECK(ExpVec{2, 0} < ExpVec{1, 1});
  CHECK(ExpVec{3} < ExpVec{4});
  CHECK(ExpVec::unit(3, 1) == ExpVec{0, 1, 0});
  CHECK((ExpVec{1, 2} + ExpVec{3, 0}) == ExpVec{4, 2});
  CHECK(ExpVec{1, 2, 3}.permuted({2, 0, 1}) == ExpVec{2, 3, 1});
}

TEST_CASE("multiset canonical form and order") {
  Multiset<int> a{3, 1, 3};
  CHECK(a.entries() == std::vector<std::pair<int, std::size_t>>{{1, 1}, {3, 2}});
  CHECK(a.size() == 3);
  CHECK(a == Multiset<int>::from_items({3, 3, 1}));
  CHECK(Multiset<int>{5} < Multiset<int>{1, 1});
  CHECK(Multiset<int>{1, 1} < Multiset<int>{1, 2});
}

TEST_CASE("sym_expr ring laws on random expressions") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const SymExpr a = random_expr(rng);
    const SymExpr b = random_expr(rng);
    const SymExpr c = random_expr(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * SymExpr(1L) == a);
    CHECK((a * SymExpr(0L)).is_zero());
    CHECK(a.pow(2) == a * a);
    for (const auto& [t, coeff] : a.terms()) CHECK(coeff != 0);
  }
}

TEST_CASE("falling factorial atoms") {
  CHECK(falling_factorial(0) == SymExpr(1L));
  CHECK(falling_factorial(1) == n());
  CHECK(falling_factorial_expand(ff(3)) == n_poly({0, 2, -3, 1}));
  CHECK(falling_factorial_expand(SymExpr::of(Atom::shifted_sample_size(2))) == n_poly({-2, 1}));
  CHECK(falling_factorial_expand(ff(2) * S(ExpVec{1})) == n_poly({0, -1, 1}) * S(ExpVec{1}));
}

TEST_CASE("falling_factorial_expand is a ring homomorphism") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const SymExpr a = random_expr(rng);
    const SymExpr b = random_expr(rng);
    CHECK(falling_factorial_expand(a + b) == falling_factorial_expand(a) + falling_factorial_expand(b));
    CHECK(falling_factorial_expand(a * b) == falling_factorial_expand(a) * falling_factorial_expand(b));
    for (int value = 0; value <= 6; ++value) {
      CHECK(at_sample_size(a, value) == at_sample_size(falling_factorial_expand(a), value));
    }
  }
}

TEST_CASE("normalize keeps a reduced fraction") {
  const SymExpr num = n() * S(ExpVec{2}) - S(ExpVec{1}, 2);
  const SymExpr den = n() * (n() - SymExpr(1L));
  const Fraction f = normalize_over_common_denominator(num, den);
  CHECK(f.numerator == num);
  CHECK(falling_factorial_expand(f.denominator) == falling_factorial_expand(den));
}

TEST_CASE("normalize cancels scalars and common factors in n") {
  const SymExpr num = n_poly({0, 0, 1}) * S(ExpVec{3}) - n_poly({0, 3}) * S(ExpVec{1}) * S(ExpVec{2}) +
                      SymExpr(2L) * S(ExpVec{1}, 3);
  const SymExpr den = ff(3);
  const Fraction once = normalize_over_common_denominator(num, den);
  const Fraction twice = normalize_over_common_denominator(num * Rational(2), den * Rational(2));
  CHECK(once == twice);

  const Fraction scaled = normalize_over_common_denominator(num * Rational(6), den * Rational(4));
  CHECK(scaled.numerator == num);
  CHECK(at_sample_size(scaled, 5) == at_sample_size(Fraction{num, den}, 5) * Rational(3, 2));

  const Fraction cancelled = normalize_over_common_denominator(n() * S(ExpVec{1}), n() * n());
  CHECK(cancelled.numerator == S(ExpVec{1}));
  CHECK(cancelled.denominator == n());
}

TEST_CASE("normalize handles zero and rejects bad denominators") {
  const Fraction zero = normalize_over_common_denominator(SymExpr(), n());
  CHECK(zero.numerator.is_zero());
  CHECK(zero.denominator == SymExpr(1L));
  CHECK_THROWS_AS(normalize_over_common_denominator(S(ExpVec{1}), SymExpr()), std::domain_error);
  CHECK_THROWS_AS(normalize_over_common_denominator(S(ExpVec{1}), S(ExpVec{2})), std::invalid_argument);
}

TEST_CASE("normalize preserves the value at every sample size") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const SymExpr num = random_expr(rng).substitute([](const Atom& a) -> std::optional<SymExpr> {
      if (a.kind() == AtomKind::Moment) return S(a.index());
      return std::nullopt;
    });
    const SymExpr den = ff(2) * n_poly({3, 1});
    const Fraction f = normalize_over_common_denominator(num, den);
    for (int value = 2; value <= 6; ++value) {
      CHECK(at_sample_size(f, value) == at_sample_size(Fraction{num, den}, value));
    }
  }
}

TEST_CASE("sample polynomials") {
  const SamplePoly a = SamplePoly::falling_factorial(3);
  CHECK(a.coeffs() == std::vector<Rational>{0, 2, -3, 1});
  CHECK(SamplePoly::factorial_range(1, 3) == SamplePoly::linear(1) * SamplePoly::linear(2));
  CHECK(SamplePoly::factorial_range(3, 3) == SamplePoly::constant(1));
  CHECK(gcd(a, SamplePoly::falling_factorial(2) * SamplePoly::linear(7)) == SamplePoly::falling_factorial(2));
  const auto [quot, r] = a.divmod(SamplePoly::linear(2));
  CHECK(r.is_zero());
  CHECK(quot == SamplePoly::falling_factorial(2));
  CHECK(a(5) == 60);
}

TEST_CASE("rational spelling") {
  CHECK(to_string(q(-6, 4)) == "-3/2");
  CHECK(to_string(q(4, 2)) == "2");
  CHECK(parse_rational("-3/2") == q(-3, 2));
  CHECK(parse_rational("6/4") == q(3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(factorial(10) == 3628800);
  CHECK(singleton_factorial_moment(1) == 1);
  CHECK(singleton_factorial_moment(4) == -6);
}
