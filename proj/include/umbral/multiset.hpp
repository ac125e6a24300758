#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace umbral {

/// A finite multiset kept in canonical form: distinct elements in ascending
/// order, each paired with a positive multiplicity.
///
/// Multisets compare by length |M| first and then by their expanded element
/// sequence, which is the block order used when printing subdivisions.
template <class T>
class Multiset {
 public:
  using Entry = std::pair<T, std::size_t>;

  Multiset() = default;
  Multiset(std::initializer_list<T> items) {
    for (const T& x : items) insert(x);
  }

  static Multiset from_items(const std::vector<T>& items) {
    Multiset m;
    for (const T& x : items) m.insert(x);
    return m;
  }

  static Multiset from_entries(const std::vector<Entry>& entries) {
    Multiset m;
    for (const auto& [x, count] : entries) m.insert(x, count);
    return m;
  }

  void insert(const T& x, std::size_t count = 1) {
    if (count == 0) return;
    auto it = std::lower_bound(entries_.begin(), entries_.end(), x,
                               [](const Entry& e, const T& v) { return e.first < v; });
    if (it != entries_.end() && it->first == x) {
      it->second += count;
    } else {
      entries_.insert(it, Entry{x, count});
    }
    size_ += count;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t distinct() const { return entries_.size(); }
  /// |M|: the sum of multiplicities.
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  std::size_t count(const T& x) const {
    for (const auto& [y, c] : entries_) {
      if (y == x) return c;
    }
    return 0;
  }

  std::vector<T> items() const {
    std::vector<T> out;
    out.reserve(size_);
    for (const auto& [x, c] : entries_) out.insert(out.end(), c, x);
    return out;
  }

  friend bool operator==(const Multiset& a, const Multiset& b) { return a.entries_ == b.entries_; }

  friend std::strong_ordering operator<=>(const Multiset& a, const Multiset& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    // Expanded-sequence comparison on the run-length form.
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.entries_.size() && j < b.entries_.size()) {
      const auto& [x, cx] = a.entries_[i];
      const auto& [y, cy] = b.entries_[j];
      if (x < y) return std::strong_ordering::less;
      if (y < x) return std::strong_ordering::greater;
      // Same element: the longer run puts a smaller element in the next slot.
      if (cx != cy) return cx > cy ? std::strong_ordering::less : std::strong_ordering::greater;
      ++i;
      ++j;
    }
    return std::strong_ordering::equal;
  }

 private:
  std::vector<Entry> entries_;
  std::size_t size_ = 0;
};

}  // namespace umbral
