#pragma once

// Enumeration of set partitions of {1..K} into exactly M nonempty blocks via
// restricted-growth strings, visited in lexicographic order. Stirling numbers
// of the second kind gate the search budgets.

#include <functional>

#include "wzbounds/common.hpp"
#include "wzbounds/model.hpp"

namespace wzb {

// S(K, M), saturating at uint64 max instead of overflowing.
inline std::uint64_t stirling2(int k, int m) {
  if (k < 0 || m < 0) throw std::invalid_argument("stirling2: negative argument");
  if (m > k) return 0;
  if (m == 0) return k == 0 ? 1 : 0;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> row(static_cast<std::size_t>(m) + 1, 0);
  row[0] = 1;  // S(0,0)
  for (int n = 1; n <= k; ++n) {
    for (int j = std::min(n, m); j >= 1; --j) {
      const std::uint64_t a = row[static_cast<std::size_t>(j)];
      const std::uint64_t b = row[static_cast<std::size_t>(j) - 1];
      std::uint64_t mul = (a > kMax / static_cast<std::uint64_t>(j)) ? kMax
                           : a * static_cast<std::uint64_t>(j);
      row[static_cast<std::size_t>(j)] = (mul > kMax - b) ? kMax : mul + b;
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(m)];
}

// Visits every restricted-growth string with exactly M blocks; labels are
// 0-based. visit may return false to stop early.
inline void for_each_partition(int k, int m, const std::function<bool(const std::vector<int>&)>& visit) {
  if (k < 1 || m < 1 || m > k)
    throw std::invalid_argument("for_each_partition: need 1 <= M <= K");
  std::vector<int> labels(static_cast<std::size_t>(k), 0);
  bool stopped = false;
  // recursive lexicographic generation with pruning on reachable block count
  std::function<void(int, int)> rec = [&](int i, int max_label) {
    if (stopped) return;
    if (i == k) {
      if (max_label == m - 1)
        if (!visit(labels)) stopped = true;
      return;
    }
    const int hi = std::min(max_label + 1, m - 1);
    for (int v = 0; v <= hi && !stopped; ++v) {
      const int new_max = std::max(max_label, v);
      // remaining positions must be able to introduce the missing labels
      if ((m - 1 - new_max) <= (k - i - 1)) {
        labels[static_cast<std::size_t>(i)] = v;
        rec(i + 1, new_max);
      }
    }
  };
  rec(0, -1);
}

inline DeterministicEncoder encoder_from_labels(const std::vector<int>& labels, int m) {
  return DeterministicEncoder(labels, m);
}

inline void check_partition_budget(int k, int m, std::uint64_t max_partitions,
                                   const std::string& who) {
  const std::uint64_t count = stirling2(k, m);
  if (count > max_partitions)
    throw BudgetError(who + ": S(" + std::to_string(k) + "," + std::to_string(m) + ") = " +
                          std::to_string(count) + " exceeds budget of " +
                          std::to_string(max_partitions) + " partitions",
                      count);
}

}  // namespace wzb
