#include <doctest.h>

#include <functional>
#include <random>

#include "helpers.hpp"
#include "umbral/conversion.hpp"
#include "umbral/errors.hpp"
#include "umbral/oracle.hpp"

using namespace umbral;
using testing::S;
using testing::aug;
using testing::ff;
using testing::m;

namespace {

// Every multiset of non-zero vectors drawn from `pool` with total degree at
// most max_degree.
std::vector<std::vector<ExpVec>> multisets_up_to(const std::vector<ExpVec>& pool, int max_degree) {
  std::vector<std::vector<ExpVec>> out;
  std::vector<ExpVec> current;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int budget) {
    if (!current.empty()) out.push_back(current);
    for (std::size_t i = from; i < pool.size(); ++i) {
      if (pool[i].degree() > budget) continue;
      current.push_back(pool[i]);
      rec(i, budget - pool[i].degree());
      current.pop_back();
    }
  };
  rec(0, max_degree);
  return out;
}

std::vector<ExpVec> vectors_up_to(std::size_t arity, int max_degree) {
  std::vector<ExpVec> out;
  if (arity == 1) {
    for (int d = 1; d <= max_degree; ++d) out.push_back(ExpVec{d});
  } else {
    for (int a = 0; a <= max_degree; ++a) {
      for (int b = 0; a + b <= max_degree; ++b) {
        if (a + b > 0) out.push_back(ExpVec{a, b});
      }
    }
  }
  return out;
}

SymExpr power_sum_product(const std::vector<ExpVec>& parts) {
  SymExpr out(1L);
  for (const ExpVec& v : parts) out *= S(v);
  return out;
}

Multiset<Monomial> as_monomials(const std::vector<ExpVec>& parts) {
  Multiset<Monomial> out;
  for (const ExpVec& v : parts) out.insert(Monomial(v));
  return out;
}

}  // namespace

TEST_CASE("ps_to_aug examples") {
  CHECK(ps_to_aug(as_monomials({ExpVec{1}, ExpVec{1}})) == aug({ExpVec{1}, ExpVec{1}}) + aug({ExpVec{2}}));
  const SymExpr expected = aug({ExpVec{2, 1}}) + SymExpr(2L) * aug({ExpVec{1, 0}, ExpVec{1, 1}}) +
                           aug({ExpVec{0, 1}, ExpVec{2, 0}}) + aug({ExpVec{1, 0}, ExpVec{1, 0}, ExpVec{0, 1}});
  CHECK(ps_to_aug(as_monomials({ExpVec{1, 0}, ExpVec{1, 0}, ExpVec{0, 1}})) == expected);
}

TEST_CASE("aug_to_ps examples") {
  CHECK(aug_to_ps(Bracket(std::vector<ExpVec>{ExpVec{1}, ExpVec{1}})) == S(ExpVec{1}, 2) - S(ExpVec{2}));
  CHECK(aug_to_ps(Bracket(std::vector<ExpVec>{ExpVec{1}, ExpVec{2}})) == S(ExpVec{1}) * S(ExpVec{2}) - S(ExpVec{3}));
  CHECK(aug_to_ps(Bracket(std::vector<ExpVec>{ExpVec{1}, ExpVec{1}, ExpVec{1}})) ==
        S(ExpVec{1}, 3) - SymExpr(3L) * S(ExpVec{1}) * S(ExpVec{2}) + SymExpr(2L) * S(ExpVec{3}));
}

TEST_CASE("conversions round trip up to total degree 6") {
  for (std::size_t arity : {1u, 2u}) {
    for (const auto& parts : multisets_up_to(vectors_up_to(arity, 6), 6)) {
      const SymExpr product = power_sum_product(parts);
      const SymExpr brackets = ps_to_aug(as_monomials(parts));
      CHECK(brackets_to_power_sums(brackets) == product);
      const SymExpr bracket = aug(parts);
      CHECK(power_sums_to_brackets(aug_to_ps(Bracket(parts))) == bracket);
    }
  }
}

TEST_CASE("conversions agree with direct evaluation on data") {
  std::mt19937 rng(17);
  const auto inputs = multisets_up_to(vectors_up_to(2, 4), 5);
  for (std::size_t i = 0; i < inputs.size(); i += 3) {
    const auto& parts = inputs[i];
    for (std::size_t size = 3; size <= 5; ++size) {
      const auto data = testing::random_data(rng, size, 2);
      CHECK(testing::value_on(aug_to_ps(Bracket(parts)), data) == testing::bracket_value(parts, data));
      CHECK(testing::value_on(ps_to_aug(as_monomials(parts)), data) ==
            testing::value_on(power_sum_product(parts), data));
      CHECK(evaluate_on_data(aug(parts), data) == testing::bracket_value(parts, data));
    }
  }
}

TEST_CASE("aug_to_ps signs follow the part count") {
  for (const auto& parts : multisets_up_to(vectors_up_to(2, 5), 5)) {
    const SymExpr e = aug_to_ps(Bracket(parts));
    for (const auto& [t, c] : e.terms()) {
      int factors = 0;
      for (const auto& [a, p] : t.factors()) factors += p;
      const bool even = (parts.size() - static_cast<std::size_t>(factors)) % 2 == 0;
      CHECK((c > 0) == even);
    }
  }
}

TEST_CASE("bracket product against composition") {
  const auto inputs = multisets_up_to(vectors_up_to(1, 4), 4);
  for (const auto& a : inputs) {
    for (const auto& b : inputs) {
      int degree = 0;
      for (const auto& v : a) degree += v.degree();
      for (const auto& v : b) degree += v.degree();
      if (degree > 6) continue;
      const SymExpr product = aug_product({Bracket(a), Bracket(b)});
      CHECK(brackets_to_power_sums(product) == aug_to_ps(Bracket(a)) * aug_to_ps(Bracket(b)));
    }
  }
}

TEST_CASE("bracket product of three on data") {
  std::mt19937 rng(23);
  const std::vector<Bracket> factors{Bracket(std::vector<ExpVec>{ExpVec{2, 0}, ExpVec{1, 0}}), Bracket(std::vector<ExpVec>{ExpVec{2, 1}}),
                                     Bracket(std::vector<ExpVec>{ExpVec{2, 1}})};
  const SymExpr product = aug_product(factors);
  for (std::size_t size = 3; size <= 5; ++size) {
    const auto data = testing::random_data(rng, size, 2);
    Rational direct = 1;
    for (const Bracket& b : factors) direct *= testing::bracket_value(b.parts(), data);
    CHECK(testing::value_on(product, data) == direct);
  }
}

TEST_CASE("bracket product collects the labeled subdivisions") {
  const SymExpr product = aug_product({Bracket(std::vector<ExpVec>{ExpVec{2, 0}, ExpVec{1, 0}}), Bracket(std::vector<ExpVec>{ExpVec{2, 1}}),
                                       Bracket(std::vector<ExpVec>{ExpVec{2, 1}})});
  const SymExpr expected = aug({ExpVec{1, 0}, ExpVec{6, 2}}) + aug({ExpVec{2, 0}, ExpVec{5, 2}}) +
                           SymExpr(2L) * aug({ExpVec{3, 1}, ExpVec{4, 1}}) +
                           aug({ExpVec{1, 0}, ExpVec{2, 0}, ExpVec{4, 2}}) +
                           SymExpr(2L) * aug({ExpVec{1, 0}, ExpVec{2, 1}, ExpVec{4, 1}}) +
                           SymExpr(2L) * aug({ExpVec{2, 0}, ExpVec{2, 1}, ExpVec{3, 1}}) +
                           aug({ExpVec{1, 0}, ExpVec{2, 0}, ExpVec{2, 1}, ExpVec{2, 1}});
  CHECK(product == expected);
}

TEST_CASE("expectation of brackets") {
  const SymExpr e = expectation_of_brackets(ps_to_aug(as_monomials({ExpVec{1, 0}, ExpVec{1, 0}, ExpVec{0, 1}})));
  const SymExpr expected = testing::n() * m(ExpVec{2, 1}) +
                           SymExpr(2L) * ff(2) * m(ExpVec{1, 0}) * m(ExpVec{1, 1}) +
                           ff(2) * m(ExpVec{2, 0}) * m(ExpVec{0, 1}) + ff(3) * m(ExpVec{1, 0}, 2) * m(ExpVec{0, 1});
  CHECK(e == expected);
  CHECK_THROWS_AS(expectation_of_brackets(S(ExpVec{1})), std::invalid_argument);
}

TEST_CASE("conversion input checks") {
  CHECK_THROWS_AS(ps_to_aug(Multiset<Monomial>{}), std::invalid_argument);
  CHECK_THROWS_AS(ps_to_aug(Multiset<Monomial>{Monomial(ExpVec{1}, {1})}), std::invalid_argument);
  CHECK_THROWS_AS(ps_to_aug(Multiset<Monomial>{Monomial(ExpVec{0})}), std::invalid_argument);
  CHECK_THROWS_AS(aug_product({}), std::invalid_argument);
  CHECK_THROWS_AS(aug_product({Bracket(std::vector<ExpVec>{ExpVec{1}}), Bracket(std::vector<ExpVec>{ExpVec{1, 0}})}), std::invalid_argument);

  ComputeOptions tight;
  tight.max_order = 3;
  CHECK_THROWS_AS(ps_to_aug(as_monomials({ExpVec{1}, ExpVec{1}, ExpVec{1}, ExpVec{1}}), tight), GuardViolation);
  CHECK_THROWS_AS(aug_to_ps(Bracket(std::vector<ExpVec>{ExpVec{1}, ExpVec{1}, ExpVec{1}, ExpVec{1}}), tight), GuardViolation);
  CHECK_NOTHROW(aug_to_ps(Bracket(std::vector<ExpVec>{ExpVec{1}, ExpVec{1}, ExpVec{1}}), tight));
}

TEST_CASE("peak subdivision counter") {
  ComputeStats stats;
  ps_to_aug(as_monomials({ExpVec{1}, ExpVec{1}, ExpVec{2}}), {}, &stats);
  CHECK(stats.peak_subdivisions() == 4);
  aug_to_ps(Bracket(std::vector<ExpVec>{ExpVec{1}, ExpVec{2}, ExpVec{3}}), {}, &stats);
  CHECK(stats.peak_subdivisions() == 5);
}
