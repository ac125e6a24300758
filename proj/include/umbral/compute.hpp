#pragma once

#include <atomic>
#include <cstddef>
#include <string>

namespace umbral {

struct ComputeOptions {
  /// Worker threads for the subdivision loops; 0 or 1 runs inline.
  unsigned threads = 1;
  /// Largest accepted order (k-statistic order, sum of polykay orders,
  /// number of parts of a converted multiset).
  int max_order = 20;
};

/// Counters filled in by library calls. Safe to update from worker threads.
class ComputeStats {
 public:
  /// Records that one multiset produced `count` subdivisions.
  void observe_subdivisions(std::size_t count);
  /// Largest subdivision list seen for a single multiset.
  std::size_t peak_subdivisions() const { return peak_.load(); }

 private:
  std::atomic<std::size_t> peak_{0};
};

/// Throws GuardViolation when order exceeds options.max_order.
void check_order(long order, const ComputeOptions& options, const std::string& what);

}  // namespace umbral
