#include "umbral/compute.hpp"

#include "umbral/errors.hpp"

namespace umbral {

void ComputeStats::observe_subdivisions(std::size_t count) {
  std::size_t seen = peak_.load();
  while (count > seen && !peak_.compare_exchange_weak(seen, count)) {
  }
}

void check_order(long order, const ComputeOptions& options, const std::string& what) {
  if (order > options.max_order) {
    throw GuardViolation(what + " " + std::to_string(order) + " exceeds the maximum order " +
                         std::to_string(options.max_order) + " (raise it with --max-order)");
  }
}

}  // namespace umbral
