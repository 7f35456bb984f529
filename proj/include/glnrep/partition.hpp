#pragma once

// Integer partitions as labels of nilpotent orbits in GL_N: dual partitions,
// the closure (dominance) order, orbit dimensions, and a splittable
// reverse-lexicographic enumeration.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace glnrep {

class Partition {
 public:
  // Sorts the parts into non-increasing order. Parts must be positive and the
  // list non-empty.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::domain_error("Partition: no parts");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    if (parts_.back() < 1) throw std::domain_error("Partition: parts must be positive");
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  // part^(count), e.g. uniform(1, N) is the zero orbit.
  static Partition uniform(int part, int count) {
    if (count < 1) throw std::domain_error("Partition: empty multiplicity");
    return Partition(std::vector<int>(static_cast<std::size_t>(count), part));
  }

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  std::size_t length() const { return parts_.size(); }
  int largest() const { return parts_.front(); }

  int multiplicity(int part) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
  }

  // "d1+d2+...".
  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += '+';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  // Lexicographic on the sorted parts.
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  friend class PartitionRange;
  struct sorted_tag {};
  Partition(std::vector<int> parts, int n, sorted_tag) : parts_(std::move(parts)), n_(n) {}

  std::vector<int> parts_;
  int n_ = 0;
};

// The j-th part of the dual is the number of parts of `p` that are >= j.
inline Partition dual_partition(const Partition& p) {
  std::vector<int> dual(static_cast<std::size_t>(p.largest()), 0);
  for (int part : p.parts()) {
    for (int j = 0; j < part; ++j) ++dual[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(dual));
}

// Closure order on nilpotent orbits: p1 <= p2 iff every prefix sum of p1 is
// at most the matching prefix sum of p2.
inline bool dominance_leq(const Partition& p1, const Partition& p2) {
  if (p1.n() != p2.n()) throw std::domain_error("dominance_leq: partitions of different integers");
  int s1 = 0;
  int s2 = 0;
  std::size_t len = std::max(p1.length(), p2.length());
  for (std::size_t i = 0; i < len; ++i) {
    s1 += i < p1.length() ? p1.parts()[i] : 0;
    s2 += i < p2.length() ? p2.parts()[i] : 0;
    if (s1 > s2) return false;
  }
  return true;
}

// Literal refinement: the parts of `fine` can be grouped into blocks whose
// sums are the parts of `coarse`. Strictly weaker than dominance_leq; not
// used by any invariant computation.
inline bool refines(const Partition& fine, const Partition& coarse) {
  if (fine.n() != coarse.n()) throw std::domain_error("refines: partitions of different integers");
  const auto& parts = fine.parts();
  std::vector<int> remaining = coarse.parts();
  // Place parts largest-first into bins; identical bins are tried once.
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == parts.size()) return true;
    for (std::size_t b = 0; b < remaining.size(); ++b) {
      if (remaining[b] < parts[i]) continue;
      bool seen = false;
      for (std::size_t c = 0; c < b; ++c) seen = seen || remaining[c] == remaining[b];
      if (seen) continue;
      remaining[b] -= parts[i];
      bool ok = place(i + 1);
      remaining[b] += parts[i];
      if (ok) return true;
    }
    return false;
  };
  return place(0);
}

// dim O_P = N^2 - sum of squared dual parts.
inline std::int64_t orbit_dim(const Partition& p) {
  std::int64_t n = p.n();
  std::int64_t total = n * n;
  const Partition dual = dual_partition(p);
  for (int part : dual.parts()) total -= static_cast<std::int64_t>(part) * part;
  return total;
}

// Partitions of n in reverse-lexicographic order ([n] first, [1^n] last),
// optionally restricted to those with a fixed largest part. The restricted
// ranges for largest parts n, n-1, ..., 1 concatenate to the full range, so
// a sweep can be split into independent chunks.
class PartitionRange {
 public:
  explicit PartitionRange(int n) : n_(n), first_part_(0) {
    if (n < 1) throw std::domain_error("enumerate_partitions: n must be positive");
  }
  PartitionRange(int n, int first_part) : n_(n), first_part_(first_part) {
    if (n < 1) throw std::domain_error("enumerate_partitions: n must be positive");
    if (first_part < 1 || first_part > n) throw std::domain_error("enumerate_partitions: bad largest part");
  }

  int n() const { return n_; }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Partition*;
    using reference = const Partition&;

    iterator() = default;

    const Partition& operator*() const { return current_; }
    const Partition* operator->() const { return &current_; }

    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }

    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    friend class PartitionRange;

    iterator(int n, int first_part)
        : current_(fill(n, first_part), n, Partition::sorted_tag{}), frozen_(first_part ? 1U : 0U), done_(false) {}

    static std::vector<int> fill(int n, int first_part) {
      std::vector<int> parts;
      int rest = n;
      int cap = n;
      if (first_part) {
        parts.push_back(first_part);
        rest -= first_part;
        cap = first_part;
      }
      while (rest > 0) {
        int part = std::min(cap, rest);
        parts.push_back(part);
        rest -= part;
      }
      return parts;
    }

    void advance() {
      auto& p = current_.parts_;
      // Strip trailing ones, then lower the last part above one and refill
      // greedily with parts no larger than it.
      int ones = 0;
      while (p.size() > frozen_ && p.back() == 1) {
        p.pop_back();
        ++ones;
      }
      if (p.size() == frozen_) {
        done_ = true;
        return;
      }
      int part = --p.back();
      int rest = ones + 1;
      while (rest > 0) {
        int next = std::min(part, rest);
        p.push_back(next);
        rest -= next;
      }
    }

    Partition current_{std::vector<int>{1}};
    std::size_t frozen_ = 0;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_, first_part_); }
  iterator end() const { return iterator(); }

  // Disjoint sub-ranges whose concatenation is this range, in order.
  std::vector<PartitionRange> split() const {
    if (first_part_) return {*this};
    std::vector<PartitionRange> chunks;
    for (int f = n_; f >= 1; --f) chunks.emplace_back(n_, f);
    return chunks;
  }

 private:
  int n_;
  int first_part_;
};

inline PartitionRange enumerate_partitions(int n) { return PartitionRange(n); }

}  // namespace glnrep
