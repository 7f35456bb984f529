#pragma once

#include "glnrep/rational.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace glnrep {

// The character Xi of a representation: a multiset of N rationals, stored in
// non-increasing order.
struct CharacterList {
  std::vector<Rat> values;

  CharacterList() = default;
  explicit CharacterList(std::vector<Rat> v) : values(std::move(v)) {
    std::sort(values.begin(), values.end(), std::greater<>());
  }

  std::size_t size() const { return values.size(); }

  // Invariant under x -> -x as a multiset.
  bool is_negation_symmetric() const {
    std::size_t n = values.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (values[i] != -values[n - 1 - i]) return false;
    }
    return true;
  }

  friend bool operator==(const CharacterList&, const CharacterList&) = default;
};

// An exponent as an ordered N-tuple; order is significant.
struct ExponentList {
  std::vector<Rat> values;

  std::size_t size() const { return values.size(); }

  friend bool operator==(const ExponentList&, const ExponentList&) = default;
};

// Action of the longest Weyl element: reverse the tuple.
inline ExponentList longest_weyl(const ExponentList& e) {
  return ExponentList{std::vector<Rat>(e.values.rbegin(), e.values.rend())};
}

inline ExponentList nondecreasing_rearrangement(const ExponentList& e) {
  ExponentList out = e;
  std::sort(out.values.begin(), out.values.end());
  return out;
}

inline ExponentList as_exponent(const CharacterList& xi) { return ExponentList{xi.values}; }

inline ExponentList negated(const ExponentList& e) {
  ExponentList out = e;
  for (auto& v : out.values) v = -v;
  return out;
}

}  // namespace glnrep
