#pragma once

// Unitarizable representations as sums of |.|^x rho[a][d], their Langlands
// and Zelevinsky data, the Aubert-Zelevinsky dual, Arthur-SL2 partitions and
// the characters Xi.

#include "glnrep/exponents.hpp"
#include "glnrep/multisegment.hpp"
#include "glnrep/partition.hpp"
#include "glnrep/rational.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace glnrep {

// |.|^x rho[a][d]: a is the Steinberg (tempered SL2) length, d the Speh
// (Arthur SL2) length.
struct ArthurSummand {
  SupercuspidalLabel rho;
  int a = 1;
  int d = 1;
  Rat x;

  int dim() const { return rho.dim * a * d; }

  friend bool operator==(const ArthurSummand&, const ArthurSummand&) = default;
};

namespace detail {

// (d desc, a desc, rho id, x desc).
inline bool summand_less(const ArthurSummand& s, const ArthurSummand& t) {
  if (s.d != t.d) return s.d > t.d;
  if (s.a != t.a) return s.a > t.a;
  if (s.rho.id != t.rho.id) return s.rho.id < t.rho.id;
  if (s.rho.dim != t.rho.dim) return s.rho.dim < t.rho.dim;
  return s.x > t.x;
}

inline const Rat& half() {
  static const Rat h(1, 2);
  return h;
}

}  // namespace detail

class UnitaryRep {
 public:
  // Checks the shape of the unitary dual: every twist lies in (-1/2, 1/2) and
  // twisted summands come in +-x pairs with the same (rho, a, d).
  explicit UnitaryRep(std::vector<ArthurSummand> summands) : UnitaryRep(std::move(summands), false) {
    for (std::size_t i = 0; i < summands_.size(); ++i) {
      const auto& s = summands_[i];
      if (s.a < 1 || s.d < 1) throw std::domain_error("UnitaryRep: a and d must be >= 1");
      if (s.x.abs() >= detail::half()) {
        throw std::domain_error("UnitaryRep: twist x must lie in the open interval (-1/2, 1/2)");
      }
    }
    using Key = std::tuple<std::string, int, int, int, std::string>;
    std::map<Key, int> balance;
    for (const auto& s : summands_) {
      if (s.x.is_zero()) continue;
      Rat y = s.x.abs();
      balance[Key{s.rho.id, s.rho.dim, s.a, s.d, y.str()}] += s.x.sign();
    }
    for (const auto& [key, count] : balance) {
      if (count != 0) {
        throw std::domain_error("UnitaryRep: twisted summands must occur in pairs |.|^y and |.|^-y with equal rho, a, d");
      }
    }
  }

  // Admits any list of summands with a, d >= 1 (used for decay computations
  // on arbitrary augmented data).
  static UnitaryRep unchecked(std::vector<ArthurSummand> summands) {
    for (const auto& s : summands) {
      if (s.a < 1 || s.d < 1) throw std::domain_error("UnitaryRep: a and d must be >= 1");
    }
    return UnitaryRep(std::move(summands), false);
  }

  const std::vector<ArthurSummand>& summands() const { return summands_; }
  int N() const { return n_; }

  bool is_arthur_type() const {
    return std::all_of(summands_.begin(), summands_.end(), [](const ArthurSummand& s) { return s.x.is_zero(); });
  }

  friend bool operator==(const UnitaryRep&, const UnitaryRep&) = default;

 private:
  UnitaryRep(std::vector<ArthurSummand> summands, bool) : summands_(std::move(summands)) {
    if (summands_.empty()) throw std::domain_error("UnitaryRep: no summands");
    std::stable_sort(summands_.begin(), summands_.end(), detail::summand_less);
    for (const auto& s : summands_) n_ += s.dim();
  }

  std::vector<ArthurSummand> summands_;
  int n_ = 0;
};

// Langlands data: for each summand and j = 1..d the segment
// <x + (d-2j+1)/2 + (1-a)/2, x + (d-2j+1)/2 + (a-1)/2>_rho.
inline Multisegment expand_to_langlands(const UnitaryRep& pi) {
  std::vector<Segment> segments;
  for (const auto& s : pi.summands()) {
    for (int j = 1; j <= s.d; ++j) {
      Rat centre = s.x + Rat(s.d - 2 * j + 1, 2);
      segments.emplace_back(s.rho, centre + Rat(1 - s.a, 2), centre + Rat(s.a - 1, 2));
    }
  }
  return Multisegment(std::move(segments));
}

// Swaps the two SL2 labels of every summand.
inline UnitaryRep az_dual(const UnitaryRep& pi) {
  std::vector<ArthurSummand> dual = pi.summands();
  for (auto& s : dual) std::swap(s.a, s.d);
  return UnitaryRep::unchecked(std::move(dual));
}

// The Zelevinsky data of pi is the Langlands data of its dual.
inline Multisegment zelevinsky_data(const UnitaryRep& pi) { return expand_to_langlands(az_dual(pi)); }

// A(pi) = [d_i^(N_i a_i)].
inline Partition arthur_sl2(const UnitaryRep& pi) {
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(pi.N()));
  for (const auto& s : pi.summands()) parts.insert(parts.end(), static_cast<std::size_t>(s.rho.dim * s.a), s.d);
  return Partition(std::move(parts));
}

struct AugmentedEntry {
  Rat x;
  int d = 1;

  friend bool operator==(const AugmentedEntry&, const AugmentedEntry&) = default;
};

// A^u(pi) = [(x_i, d_i)^(N_i a_i)], in summand order.
inline std::vector<AugmentedEntry> augmented_arthur_sl2(const UnitaryRep& pi) {
  std::vector<AugmentedEntry> out;
  out.reserve(static_cast<std::size_t>(pi.N()));
  for (const auto& s : pi.summands()) {
    out.insert(out.end(), static_cast<std::size_t>(s.rho.dim * s.a), AugmentedEntry{s.x, s.d});
  }
  return out;
}

// d_GK = (N^2 - sum over entries of A(pi) of d^2) / 2.
inline Rat gk_dim_arthur(const UnitaryRep& pi) {
  std::int64_t n = pi.N();
  std::int64_t total = n * n;
  for (const auto& s : pi.summands()) total -= static_cast<std::int64_t>(s.rho.dim) * s.a * s.d * s.d;
  return Rat(total, 2);
}

// Xi as the union of the strings x + (d-1)/2, x + (d-3)/2, ..., x + (1-d)/2.
inline CharacterList xi_from_augmented(const std::vector<AugmentedEntry>& entries) {
  std::vector<Rat> values;
  for (const auto& e : entries) {
    for (int k = 0; k < e.d; ++k) values.push_back(e.x + Rat(e.d - 1 - 2 * k, 2));
  }
  return CharacterList(std::move(values));
}

// Untwisted case: Xi of the Arthur-type representation with Arthur-SL2 `a`.
inline CharacterList xi_from_arthur_partition(const Partition& a) {
  std::vector<Rat> values;
  values.reserve(static_cast<std::size_t>(a.n()));
  for (int d : a.parts()) {
    for (int k = 0; k < d; ++k) values.emplace_back(d - 1 - 2 * k, 2);
  }
  return CharacterList(std::move(values));
}

inline CharacterList xi_arthur(const UnitaryRep& pi) { return xi_from_augmented(augmented_arthur_sl2(pi)); }

// g(pi) = 1 - d_GK / d_max = sum d_i(d_i - 1) / (N(N-1)) over A(pi).
inline Rat g_from_arthur_partition(const Partition& a) {
  std::int64_t n = a.n();
  if (n < 2) throw std::domain_error("g: undefined for N = 1 (d_max = 0)");
  std::int64_t total = 0;
  for (int d : a.parts()) total += static_cast<std::int64_t>(d) * (d - 1);
  return Rat(total, n * (n - 1));
}

inline Rat g_param(const UnitaryRep& pi) {
  std::int64_t n = pi.N();
  if (n < 2) throw std::domain_error("g: undefined for N = 1 (d_max = 0)");
  Rat d_max(n * (n - 1), 2);
  return Rat(1) - gk_dim_arthur(pi) / d_max;
}

// The exponent ((1-d)/2)^(ma), ..., ((d-1)/2)^(ma) of rho[a][d] with
// dim rho = m, in ascending blocks.
inline ExponentList simple_exponent(int m, int a, int d) {
  if (m < 1 || a < 1 || d < 1) throw std::domain_error("simple_exponent: m, a, d must be >= 1");
  ExponentList e;
  e.values.reserve(static_cast<std::size_t>(m) * a * d);
  for (int i = 1; i <= d; ++i) e.values.insert(e.values.end(), static_cast<std::size_t>(m) * a, Rat(-d - 1 + 2 * i, 2));
  return e;
}

}  // namespace glnrep
