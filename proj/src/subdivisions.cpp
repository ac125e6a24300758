#include "umbral/subdivisions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace umbral {

std::size_t Subdivision::block_count() const {
  std::size_t n = 0;
  for (const auto& [block, rep] : blocks) n += rep;
  return n;
}

std::size_t SubdivisionPattern::block_count() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.repetition;
  return n;
}

namespace {

struct Problem {
  std::vector<std::size_t> multiplicity;
  // Largest count of element e that one block may hold.
  std::vector<std::size_t> cap;
  // conflict[j][i]: elements i and j share a singleton label.
  std::vector<std::vector<bool>> conflict;
};

// Builds subdivisions one distinct element at a time. Placing element j
// means choosing, for every existing block type with repetition c, a
// non-increasing c-tuple of counts (so identical blocks are never filled in
// two orders), and then splitting the remainder into fresh blocks by an
// integer partition. Removing element j from a result recovers the parent
// uniquely, so every subdivision appears exactly once.
class Enumerator {
 public:
  explicit Enumerator(const Problem& problem) : p_(problem), m_(problem.multiplicity.size()) {
    std::size_t largest = 0;
    for (std::size_t f : p_.multiplicity) largest = std::max(largest, f);
    for (std::size_t k = 0; k <= largest; ++k) fact_.push_back(factorial(k));
    numerator_ = 1;
    for (std::size_t f : p_.multiplicity) numerator_ *= fact_[f];
  }

  PatternList run() {
    std::vector<BlockPattern> none;
    place(0, none);
    return std::move(out_);
  }

 private:
  void place(std::size_t j, const std::vector<BlockPattern>& old) {
    std::vector<BlockPattern> next;
    next.reserve(old.size() + p_.multiplicity[j]);
    distribute(j, old, 0, p_.multiplicity[j], next);
  }

  bool accepts(const BlockPattern& block, std::size_t j) const {
    for (std::size_t i = 0; i < j; ++i) {
      if (block.counts[i] > 0 && p_.conflict[j][i]) return false;
    }
    return true;
  }

  void distribute(std::size_t j, const std::vector<BlockPattern>& old, std::size_t group,
                  std::size_t remaining, std::vector<BlockPattern>& next) {
    if (group == old.size()) {
      fresh_blocks(j, std::min(p_.cap[j], remaining), remaining, next);
      return;
    }
    const BlockPattern& g = old[group];
    if (remaining == 0 || !accepts(g, j)) {
      next.push_back(g);
      distribute(j, old, group + 1, remaining, next);
      next.pop_back();
      return;
    }
    tuple_counts(j, old, group, std::min(p_.cap[j], remaining), g.repetition, remaining, next);
  }

  // Chooses how many copies of old[group] receive exactly `value` copies of
  // element j, for value descending to zero.
  void tuple_counts(std::size_t j, const std::vector<BlockPattern>& old, std::size_t group,
                    std::size_t value, std::size_t slots, std::size_t remaining,
                    std::vector<BlockPattern>& next) {
    const BlockPattern& g = old[group];
    if (value == 0) {
      if (slots > 0) {
        next.push_back(BlockPattern{g.counts, slots});
        distribute(j, old, group + 1, remaining, next);
        next.pop_back();
      } else {
        distribute(j, old, group + 1, remaining, next);
      }
      return;
    }
    for (std::size_t k = std::min(slots, remaining / value) + 1; k-- > 0;) {
      if (k > 0) {
        BlockPattern b{g.counts, k};
        b.counts[j] = static_cast<std::uint16_t>(value);
        next.push_back(std::move(b));
      }
      tuple_counts(j, old, group, value - 1, slots - k, remaining - k * value, next);
      if (k > 0) next.pop_back();
    }
  }

  // Splits the remainder of element j into fresh blocks {e_j^part}, parts
  // taken from largest to smallest.
  void fresh_blocks(std::size_t j, std::size_t part, std::size_t remaining,
                    std::vector<BlockPattern>& next) {
    if (remaining == 0) {
      finish(j, next);
      return;
    }
    if (part == 0) return;
    for (std::size_t q = remaining / part + 1; q-- > 0;) {
      if (q > 0) {
        BlockPattern b{std::vector<std::uint16_t>(m_, 0), q};
        b.counts[j] = static_cast<std::uint16_t>(part);
        next.push_back(std::move(b));
      }
      fresh_blocks(j, part - 1, remaining - q * part, next);
      if (q > 0) next.pop_back();
    }
  }

  void finish(std::size_t j, const std::vector<BlockPattern>& blocks) {
    if (j + 1 < m_) {
      place(j + 1, blocks);
      return;
    }
    // Number of set partitions projecting onto this subdivision:
    // prod_e f_e! / prod_blocks (prod_e count_e!)^rep / prod_blocks rep!.
    Integer denom = 1;
    for (const BlockPattern& b : blocks) {
      Integer per_block = 1;
      for (std::uint16_t c : b.counts) per_block *= fact_[c];
      for (std::size_t r = 0; r < b.repetition; ++r) denom *= per_block;
      denom *= factorial(b.repetition);
    }
    out_.push_back(SubdivisionPattern{blocks, numerator_ / denom});
  }

  const Problem& p_;
  std::size_t m_;
  std::vector<Integer> fact_;
  Integer numerator_;
  PatternList out_;
};

Problem unlabeled_problem(const std::vector<std::size_t>& multiplicity) {
  Problem p;
  p.multiplicity = multiplicity;
  p.cap = multiplicity;
  p.conflict.assign(multiplicity.size(), std::vector<bool>(multiplicity.size(), false));
  return p;
}

void check_multiplicities(std::span<const std::size_t> multiplicities) {
  if (multiplicities.empty()) throw std::invalid_argument("empty multiset has no subdivisions");
  for (std::size_t f : multiplicities) {
    if (f == 0) throw std::invalid_argument("multiset multiplicities must be positive");
  }
}

struct PatternCache {
  std::mutex mutex;
  std::map<std::vector<std::size_t>, std::shared_ptr<const PatternList>> entries;
};

PatternCache& cache() {
  static PatternCache instance;
  return instance;
}

}  // namespace

PatternView unlabeled_patterns(std::span<const std::size_t> multiplicities) {
  check_multiplicities(multiplicities);
  std::vector<std::size_t> order(multiplicities.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return multiplicities[a] > multiplicities[b];
  });
  PatternView view;
  view.position.resize(multiplicities.size());
  std::vector<std::size_t> key;
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    view.position[order[rank]] = rank;
    key.push_back(multiplicities[order[rank]]);
  }

  PatternCache& c = cache();
  {
    std::lock_guard lock(c.mutex);
    if (auto it = c.entries.find(key); it != c.entries.end()) {
      view.patterns = it->second;
      return view;
    }
  }
  Problem problem = unlabeled_problem(key);
  auto computed = std::make_shared<const PatternList>(Enumerator(problem).run());
  std::lock_guard lock(c.mutex);
  auto [it, inserted] = c.entries.emplace(key, computed);
  view.patterns = it->second;
  return view;
}

PatternList labeled_patterns(std::span<const std::size_t> multiplicities,
                             std::span<const std::vector<SingletonLabel>> labels) {
  check_multiplicities(multiplicities);
  if (labels.size() != multiplicities.size()) {
    throw std::invalid_argument("labeled_patterns: one label list per element required");
  }
  const std::size_t m = multiplicities.size();
  Problem p;
  p.multiplicity.assign(multiplicities.begin(), multiplicities.end());
  p.cap.resize(m);
  p.conflict.assign(m, std::vector<bool>(m, false));
  for (std::size_t e = 0; e < m; ++e) {
    std::vector<SingletonLabel> own = labels[e];
    std::sort(own.begin(), own.end());
    // chi^2 inside a single monomial annihilates every subdivision.
    if (std::adjacent_find(own.begin(), own.end()) != own.end()) return {};
    p.cap[e] = own.empty() ? multiplicities[e] : 1;
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      for (SingletonLabel l : labels[a]) {
        if (std::find(labels[b].begin(), labels[b].end(), l) != labels[b].end()) {
          p.conflict[a][b] = true;
        }
      }
    }
  }
  return Enumerator(p).run();
}

std::size_t pattern_cache_size() {
  PatternCache& c = cache();
  std::lock_guard lock(c.mutex);
  return c.entries.size();
}

void clear_pattern_cache() {
  PatternCache& c = cache();
  std::lock_guard lock(c.mutex);
  c.entries.clear();
}

std::vector<Subdivision> subdivisions(const Multiset<Monomial>& m) {
  if (m.empty()) throw std::invalid_argument("empty multiset has no subdivisions");
  const auto& entries = m.entries();
  std::vector<std::size_t> mult;
  std::vector<std::vector<SingletonLabel>> labels;
  bool any_label = false;
  for (const auto& [mono, count] : entries) {
    mult.push_back(count);
    labels.push_back(mono.labels());
    any_label = any_label || mono.labeled();
  }

  std::vector<std::size_t> position(entries.size());
  std::shared_ptr<const PatternList> patterns;
  if (any_label) {
    patterns = std::make_shared<const PatternList>(labeled_patterns(mult, labels));
    std::iota(position.begin(), position.end(), 0);
  } else {
    PatternView view = unlabeled_patterns(mult);
    patterns = view.patterns;
    position = view.position;
  }

  std::vector<Subdivision> out;
  out.reserve(patterns->size());
  for (const SubdivisionPattern& pat : *patterns) {
    Subdivision s;
    s.multiplicity = pat.multiplicity;
    for (const BlockPattern& b : pat.blocks) {
      Multiset<Monomial> block;
      for (std::size_t e = 0; e < entries.size(); ++e) {
        block.insert(entries[e].first, b.counts[position[e]]);
      }
      s.blocks.emplace_back(std::move(block), b.repetition);
    }
    std::sort(s.blocks.begin(), s.blocks.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.push_back(std::move(s));
  }

  auto less = [](const Subdivision& a, const Subdivision& b) {
    std::size_t ca = a.block_count();
    std::size_t cb = b.block_count();
    if (ca != cb) return ca < cb;
    // Expanded block sequences, compared run by run.
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.blocks.size() && j < b.blocks.size()) {
      const auto& [x, rx] = a.blocks[i];
      const auto& [y, ry] = b.blocks[j];
      if (x < y) return true;
      if (y < x) return false;
      if (rx != ry) return rx > ry;
      ++i;
      ++j;
    }
    return false;
  };
  std::sort(out.begin(), out.end(), less);
  return out;
}

}  // namespace umbral
