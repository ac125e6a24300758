#include "umbral/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace umbral {

Monomial::Monomial(ExpVec exponents, std::vector<SingletonLabel> labels)
    : exponents_(exponents), labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.exponents_ <=> b.exponents_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.labels_.begin(), a.labels_.end(),
                                                b.labels_.begin(), b.labels_.end());
}

std::optional<Monomial> merge_block(std::span<const Monomial> block) {
  if (block.empty()) throw std::invalid_argument("merge_block: empty block");
  std::vector<SingletonLabel> seen;
  ExpVec sum(block.front().arity());
  for (const Monomial& m : block) {
    sum += m.exponents();
    seen.insert(seen.end(), m.labels().begin(), m.labels().end());
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return std::nullopt;
  return Monomial(sum);
}

std::optional<Monomial> merge_block(const Multiset<Monomial>& block) {
  auto items = block.items();
  return merge_block(std::span<const Monomial>(items));
}

}  // namespace umbral
