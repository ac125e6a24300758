#include "umbral/sym_expr.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace umbral {

// ---------------------------------------------------------------- Bracket

Bracket::Bracket(std::vector<ExpVec> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("bracket needs at least one part");
  for (const ExpVec& v : parts_) {
    if (v.is_zero()) throw std::invalid_argument("bracket parts must be non-zero");
    if (v.arity() != parts_.front().arity()) throw std::invalid_argument("bracket parts differ in arity");
  }
  std::sort(parts_.begin(), parts_.end());
}

Bracket::Bracket(const Multiset<ExpVec>& parts) : Bracket(parts.items()) {}

int Bracket::degree() const {
  int d = 0;
  for (const ExpVec& v : parts_) d += v.degree();
  return d;
}

std::strong_ordering operator<=>(const Bracket& a, const Bracket& b) {
  if (auto c = a.parts_.size() <=> b.parts_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                                                b.parts_.end());
}

// ------------------------------------------------------------------- Atom

Atom Atom::sample_size() { return Atom{}; }

Atom Atom::falling_factorial(int depth) {
  if (depth < 1) throw std::invalid_argument("falling factorial depth must be >= 1");
  Atom a;
  a.kind_ = AtomKind::FallingFactorial;
  a.param_ = depth;
  return a;
}

Atom Atom::shifted_sample_size(int shift) {
  if (shift == 0) return sample_size();
  Atom a;
  a.kind_ = AtomKind::ShiftedSampleSize;
  a.param_ = shift;
  return a;
}

Atom Atom::moment(const ExpVec& index) {
  if (index.is_zero()) throw std::invalid_argument("moment index must be non-zero");
  Atom a;
  a.kind_ = AtomKind::Moment;
  a.index_ = index;
  return a;
}

Atom Atom::power_sum(const ExpVec& index) {
  if (index.is_zero()) throw std::invalid_argument("power-sum index must be non-zero");
  Atom a;
  a.kind_ = AtomKind::PowerSum;
  a.index_ = index;
  return a;
}

Atom Atom::bracket(Bracket b) {
  if (b.size() == 0) throw std::invalid_argument("empty bracket atom");
  Atom a;
  a.kind_ = AtomKind::Bracket;
  a.bracket_ = std::move(b);
  return a;
}

int Atom::sample_degree() const {
  switch (kind_) {
    case AtomKind::SampleSize:
    case AtomKind::ShiftedSampleSize:
      return 1;
    case AtomKind::FallingFactorial:
      return param_;
    default:
      return 0;
  }
}

std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  switch (a.kind_) {
    case AtomKind::SampleSize:
      return std::strong_ordering::equal;
    case AtomKind::FallingFactorial:
    case AtomKind::ShiftedSampleSize:
      return a.param_ <=> b.param_;
    case AtomKind::Moment:
    case AtomKind::PowerSum:
      return a.index_ <=> b.index_;
    case AtomKind::Bracket:
      return a.bracket_ <=> b.bracket_;
  }
  return std::strong_ordering::equal;
}

// ------------------------------------------------------------------- Term

Term::Term(std::vector<std::pair<Atom, int>> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  // Merge repeated atoms and drop zero powers.
  std::vector<std::pair<Atom, int>> merged;
  for (auto& f : factors_) {
    if (f.second < 0) throw std::invalid_argument("term powers must be non-negative");
    if (!merged.empty() && merged.back().first == f.first) {
      merged.back().second += f.second;
    } else {
      merged.push_back(std::move(f));
    }
  }
  std::erase_if(merged, [](const auto& f) { return f.second == 0; });
  factors_ = std::move(merged);
  refresh();
}

Term Term::of(const Atom& a, int power) { return Term({{a, power}}); }

void Term::refresh() {
  content_count_ = 0;
  sample_degree_ = 0;
  for (const auto& [atom, power] : factors_) {
    if (atom.is_content()) content_count_ += power;
    sample_degree_ += atom.sample_degree() * power;
  }
}

int Term::power_of(const Atom& a) const {
  for (const auto& [atom, power] : factors_) {
    if (atom == a) return power;
  }
  return 0;
}

Term Term::content_part() const {
  Term t;
  for (const auto& f : factors_) {
    if (f.first.is_content()) t.factors_.push_back(f);
  }
  t.refresh();
  return t;
}

Term operator*(const Term& a, const Term& b) {
  Term out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.refresh();
  return out;
}

bool TermOrder::operator()(const Term& a, const Term& b) const {
  if (a.content_count() != b.content_count()) return a.content_count() < b.content_count();

  // Compare the expanded ascending sequences of content atoms.
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto ia = std::find_if(fa.begin(), fa.end(), [](const auto& f) { return f.first.is_content(); });
  auto ib = std::find_if(fb.begin(), fb.end(), [](const auto& f) { return f.first.is_content(); });
  while (ia != fa.end() && ib != fb.end()) {
    if (auto c = ia->first <=> ib->first; c != 0) return c < 0;
    if (ia->second != ib->second) return ia->second > ib->second;
    ++ia;
    ++ib;
  }

  if (a.sample_degree() != b.sample_degree()) return a.sample_degree() > b.sample_degree();

  return std::lexicographical_compare(fa.begin(), fa.end(), fb.begin(), fb.end(),
                                      [](const auto& x, const auto& y) {
                                        if (auto c = x.first <=> y.first; c != 0) return c < 0;
                                        return x.second < y.second;
                                      });
}

// ---------------------------------------------------------------- SymExpr

SymExpr::SymExpr(const Rational& constant) {
  if (constant != 0) terms_.emplace(Term{}, constant);
}

SymExpr SymExpr::of(const Atom& a, int power) { return monomial(Term::of(a, power)); }

SymExpr SymExpr::monomial(const Term& t, const Rational& coeff) {
  SymExpr e;
  e.add_term(t, coeff);
  return e;
}

std::optional<Rational> SymExpr::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first.is_unit()) return terms_.begin()->second;
  return std::nullopt;
}

Rational SymExpr::coefficient(const Term& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymExpr::add_term(const Term& t, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(t, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

SymExpr& SymExpr::operator+=(const SymExpr& o) {
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

SymExpr& SymExpr::operator-=(const SymExpr& o) {
  for (const auto& [t, c] : o.terms_) add_term(t, -c);
  return *this;
}

SymExpr operator*(const SymExpr& a, const SymExpr& b) {
  SymExpr out;
  for (const auto& [ta, ca] : a.terms_) {
    for (const auto& [tb, cb] : b.terms_) out.add_term(ta * tb, ca * cb);
  }
  return out;
}

SymExpr& SymExpr::operator*=(const SymExpr& o) { return *this = *this * o; }

SymExpr& SymExpr::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, coeff] : terms_) coeff *= c;
  return *this;
}

SymExpr SymExpr::operator-() const {
  SymExpr out = *this;
  for (auto& [t, c] : out.terms_) c = -c;
  return out;
}

SymExpr SymExpr::pow(unsigned e) const {
  SymExpr result(1);
  SymExpr base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

SymExpr SymExpr::substitute(const std::function<std::optional<SymExpr>(const Atom&)>& rule) const {
  SymExpr out;
  for (const auto& [t, c] : terms_) {
    SymExpr product(c);
    std::vector<std::pair<Atom, int>> kept;
    for (const auto& [atom, power] : t.factors()) {
      if (auto replacement = rule(atom)) {
        product *= replacement->pow(static_cast<unsigned>(power));
      } else {
        kept.emplace_back(atom, power);
      }
    }
    out += product * SymExpr::monomial(Term(std::move(kept)));
  }
  return out;
}

std::size_t SymExpr::content_term_count() const {
  std::set<Term, TermOrder> distinct;
  for (const auto& [t, c] : terms_) distinct.insert(t.content_part());
  return distinct.size();
}

SymExpr sample_size() { return SymExpr::of(Atom::sample_size()); }

SymExpr falling_factorial(int depth) {
  if (depth < 0) throw std::invalid_argument("negative falling factorial depth");
  if (depth == 0) return SymExpr(1);
  if (depth == 1) return sample_size();
  return SymExpr::of(Atom::falling_factorial(depth));
}

}  // namespace umbral
