#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

/// lambda |- i as weakly decreasing parts.
class IntegerPartition {
 public:
  IntegerPartition() = default;
  /// Parts in any order; they are sorted into weakly decreasing order.
  explicit IntegerPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  /// nu_lambda.
  std::size_t length() const { return parts_.size(); }
  int weight() const;
  /// Multiplicity form (1^{r_1} 2^{r_2} ...): pairs (j, r_j) with r_j > 0, j ascending.
  std::vector<std::pair<int, std::size_t>> multiplicities() const;

  friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of i in decreasing-lexicographic order: (i), (i-1,1), ...,
/// (1^i). integer_partitions(0) is the single empty partition.
std::vector<IntegerPartition> integer_partitions(int i);

/// d_lambda = i! / (prod_j r_j! (j!)^{r_j}): the number of set partitions of an
/// i-set whose block sizes are lambda.
Integer d_lambda(const IntegerPartition& lambda);

/// Bell number B_k.
Integer bell_number(std::size_t k);

inline constexpr std::size_t kMaxSetPartitionSize = 13;

/// A set partition of {0, ..., k-1}; blocks are listed by their least element.
using SetPartition = std::vector<std::vector<std::size_t>>;

/// Streams every set partition of {0, ..., k-1} exactly once (restricted
/// growth strings). k must lie in [1, kMaxSetPartitionSize]; anything else
/// throws GuardViolation.
class SetPartitionStream {
 public:
  explicit SetPartitionStream(std::size_t k);

  /// Writes the next partition into `out`; returns false when exhausted.
  bool next(SetPartition& out);
  /// Block index of each element for the partition last returned.
  const std::vector<std::size_t>& block_of() const { return growth_; }

 private:
  std::size_t k_;
  std::vector<std::size_t> growth_;
  std::vector<std::size_t> prefix_max_;
  bool started_ = false;
  bool done_ = false;
};

/// Convenience: materializes SetPartitionStream(k).
std::vector<SetPartition> set_partitions(std::size_t k);

}  // namespace umbral
