#pragma once

// Reference computations that share no code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

// p(n) through Euler's pentagonal number recurrence.
inline std::vector<std::uint64_t> partition_counts(int max_n) {
  std::vector<std::int64_t> p(static_cast<std::size_t>(max_n) + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    std::int64_t total = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2;
      int g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      std::int64_t sign = (k % 2 == 1) ? 1 : -1;
      total += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) total += sign * p[static_cast<std::size_t>(n - g2)];
    }
    p[static_cast<std::size_t>(n)] = total;
  }
  return {p.begin(), p.end()};
}

// All partitions of n as non-increasing vectors, by recursion on the largest part.
inline std::vector<std::vector<int>> all_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rest, cap); part >= 1; --part) {
      cur.push_back(part);
      rec(rest - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// Transpose of the Young diagram, by filling a boolean grid.
inline std::vector<int> transpose(const std::vector<int>& parts) {
  int rows = static_cast<int>(parts.size());
  int cols = parts.empty() ? 0 : *std::max_element(parts.begin(), parts.end());
  std::vector<std::vector<bool>> cell(static_cast<std::size_t>(rows), std::vector<bool>(static_cast<std::size_t>(cols)));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < parts[static_cast<std::size_t>(r)]; ++c) cell[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = true;
  }
  std::vector<int> out;
  for (int c = 0; c < cols; ++c) {
    int h = 0;
    for (int r = 0; r < rows; ++r) h += cell[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] ? 1 : 0;
    out.push_back(h);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

// Nilpotent orbit with Jordan type P: dim = N^2 - dim centralizer, and the
// centralizer has dimension sum_{i,j} min(p_i, p_j).
inline std::int64_t orbit_dim(const std::vector<int>& parts) {
  std::int64_t n = 0;
  for (int p : parts) n += p;
  std::int64_t centralizer = 0;
  for (int p : parts) {
    for (int q : parts) centralizer += std::min(p, q);
  }
  return n * n - centralizer;
}

}  // namespace oracle
