#include "umbral/partitions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "umbral/errors.hpp"

namespace umbral {

IntegerPartition::IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int IntegerPartition::weight() const {
  int w = 0;
  for (int p : parts_) w += p;
  return w;
}

std::vector<std::pair<int, std::size_t>> IntegerPartition::multiplicities() const {
  std::vector<std::pair<int, std::size_t>> out;
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
    if (!out.empty() && out.back().first == *it) {
      ++out.back().second;
    } else {
      out.emplace_back(*it, 1);
    }
  }
  return out;
}

std::vector<IntegerPartition> integer_partitions(int i) {
  if (i < 0) throw std::invalid_argument("integer_partitions: negative argument");
  std::vector<IntegerPartition> out;
  std::vector<int> current;
  // Largest-first recursion yields decreasing-lexicographic order.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(i, i);
  return out;
}

Integer d_lambda(const IntegerPartition& lambda) {
  Integer denom = 1;
  for (const auto& [part, count] : lambda.multiplicities()) {
    denom *= factorial(count);
    Integer pf = factorial(static_cast<std::size_t>(part));
    for (std::size_t c = 0; c < count; ++c) denom *= pf;
  }
  return factorial(static_cast<std::size_t>(lambda.weight())) / denom;
}

Integer bell_number(std::size_t k) {
  // Bell triangle.
  std::vector<Integer> row{1};
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Integer> next{row.back()};
    for (const Integer& x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

SetPartitionStream::SetPartitionStream(std::size_t k) : k_(k) {
  if (k < 1 || k > kMaxSetPartitionSize) {
    throw GuardViolation("set partitions are enumerated only for 1 <= k <= " +
                         std::to_string(kMaxSetPartitionSize) + " (got " + std::to_string(k) + ")");
  }
  growth_.assign(k, 0);
  prefix_max_.assign(k, 0);
}

bool SetPartitionStream::next(SetPartition& out) {
  if (done_) return false;
  if (started_) {
    // Increment the restricted growth string from the right.
    std::size_t i = k_;
    while (i-- > 1) {
      if (growth_[i] <= prefix_max_[i - 1]) {
        ++growth_[i];
        prefix_max_[i] = std::max(prefix_max_[i - 1], growth_[i]);
        for (std::size_t j = i + 1; j < k_; ++j) {
          growth_[j] = 0;
          prefix_max_[j] = prefix_max_[i];
        }
        break;
      }
      if (i == 1) {
        done_ = true;
        return false;
      }
    }
    if (k_ == 1) {
      done_ = true;
      return false;
    }
  }
  started_ = true;
  std::size_t blocks = prefix_max_.back() + 1;
  out.assign(blocks, {});
  for (std::size_t e = 0; e < k_; ++e) out[growth_[e]].push_back(e);
  return true;
}

std::vector<SetPartition> set_partitions(std::size_t k) {
  SetPartitionStream stream(k);
  std::vector<SetPartition> out;
  SetPartition p;
  while (stream.next(p)) out.push_back(p);
  return out;
}

}  // namespace umbral
