#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "umbral/monomial.hpp"
#include "umbral/multiset.hpp"
#include "umbral/rational.hpp"

namespace umbral {

/// A subdivision S of a multiset M: blocks with their repetition g(M_i), and
/// the number of set partitions pi of a |M|-set whose projection S_pi is S.
struct Subdivision {
  std::vector<std::pair<Multiset<Monomial>, std::size_t>> blocks;
  Integer multiplicity;

  /// |S|: number of blocks counted with repetition.
  std::size_t block_count() const;
};

/// Every distinct subdivision of M exactly once with its multiplicity.
///
/// Blocks inside a subdivision are ordered by the Multiset order (size, then
/// elements). Subdivisions are ordered by block count, then by their block
/// sequence. Labeled monomials are honored: a block may never hold two
/// monomials sharing a singleton label, so annihilated subdivisions are
/// pruned during construction rather than emitted.
///
/// Throws std::invalid_argument for the empty multiset.
std::vector<Subdivision> subdivisions(const Multiset<Monomial>& m);

// ---------------------------------------------------------------------------
// Pattern-level engine. Callers that only need block contents in terms of
// element positions (basis conversion, estimators) use this directly and skip
// materializing Multiset objects.

/// One block type of a subdivision pattern: how many copies of each distinct
/// element it holds, and how many identical copies of the block occur.
struct BlockPattern {
  std::vector<std::uint16_t> counts;
  std::size_t repetition = 1;
};

struct SubdivisionPattern {
  std::vector<BlockPattern> blocks;
  Integer multiplicity;

  std::size_t block_count() const;
};

using PatternList = std::vector<SubdivisionPattern>;

/// Patterns for an unlabeled multiset given only its multiplicities, plus
/// the position map needed to read them: the count of original element e in
/// a block is `block.counts[position[e]]`.
struct PatternView {
  std::shared_ptr<const PatternList> patterns;
  std::vector<std::size_t> position;
};

/// Memoized by the sorted multiplicity signature; thread-safe.
PatternView unlabeled_patterns(std::span<const std::size_t> multiplicities);

/// Patterns for elements carrying singleton labels. labels[e] lists the labels
/// carried by element e (may be empty). Not memoized.
PatternList labeled_patterns(std::span<const std::size_t> multiplicities,
                             std::span<const std::vector<SingletonLabel>> labels);

/// Number of entries currently held by the shape memo (for diagnostics).
std::size_t pattern_cache_size();
/// Drops every memoized shape (benchmarks start cold).
void clear_pattern_cache();

}  // namespace umbral
