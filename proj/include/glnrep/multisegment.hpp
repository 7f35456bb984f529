#pragma once

// Segments <a,b>_rho and multisegments, the data of the Langlands and
// Zelevinsky classifications, with the invariants read off from them.

#include "glnrep/exponents.hpp"
#include "glnrep/partition.hpp"
#include "glnrep/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace glnrep {

// A supercuspidal representation of GL_dim, known only by identity and
// dimension. Labels are always unitary; twists live in the segment ends.
struct SupercuspidalLabel {
  std::string id;
  int dim = 1;

  SupercuspidalLabel() = default;
  SupercuspidalLabel(std::string id_, int dim_) : id(std::move(id_)), dim(dim_) {
    if (dim < 1) throw std::domain_error("SupercuspidalLabel: dim must be >= 1");
  }

  friend bool operator==(const SupercuspidalLabel&, const SupercuspidalLabel&) = default;
  friend auto operator<=>(const SupercuspidalLabel&, const SupercuspidalLabel&) = default;
};

class Segment {
 public:
  // <a,b>_rho; b - a must be a non-negative integer.
  Segment(SupercuspidalLabel rho, Rat a, Rat b) : rho_(std::move(rho)), a_(std::move(a)), b_(std::move(b)) {
    Rat diff = b_ - a_;
    if (!diff.is_integer() || diff.sign() < 0) {
      throw std::domain_error("Segment: b - a must be a non-negative integer");
    }
    length_ = static_cast<int>(diff.num()) + 1;
  }

  // <a,b> over |.|^twist rho, renormalized so the label is unitary.
  static Segment twisted(SupercuspidalLabel rho, const Rat& a, const Rat& b, const Rat& twist) {
    return Segment(std::move(rho), a + twist, b + twist);
  }

  const SupercuspidalLabel& rho() const { return rho_; }
  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  int length() const { return length_; }
  int ambient_dim() const { return rho_.dim * length_; }
  Rat midpoint() const { return (a_ + b_) / Rat(2); }

  friend bool operator==(const Segment& x, const Segment& y) {
    return x.rho_ == y.rho_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  SupercuspidalLabel rho_;
  Rat a_;
  Rat b_;
  int length_ = 1;
};

// A multiset of segments. Equality ignores order.
class Multisegment {
 public:
  Multisegment() = default;
  explicit Multisegment(std::vector<Segment> segments) : segments_(std::move(segments)) {
    for (const auto& s : segments_) total_dim_ += s.ambient_dim();
  }

  const std::vector<Segment>& segments() const { return segments_; }
  int total_dim() const { return total_dim_; }
  std::size_t size() const { return segments_.size(); }
  bool empty() const { return segments_.empty(); }

  friend bool operator==(const Multisegment& x, const Multisegment& y);

 private:
  std::vector<Segment> segments_;
  int total_dim_ = 0;
};

namespace detail {

inline bool same_line(const Segment& s1, const Segment& s2) {
  return s1.rho().id == s2.rho().id && (s2.a() - s1.a()).is_integer();
}

// Canonical segment order: (rho id, a descending, b descending).
inline bool canonical_less(const Segment& x, const Segment& y) {
  if (x.rho().id != y.rho().id) return x.rho().id < y.rho().id;
  if (x.a() != y.a()) return x.a() > y.a();
  if (x.b() != y.b()) return x.b() > y.b();
  return x.rho().dim < y.rho().dim;
}

}  // namespace detail

inline bool operator==(const Multisegment& x, const Multisegment& y) {
  if (x.size() != y.size()) return false;
  auto xs = x.segments_;
  auto ys = y.segments_;
  std::stable_sort(xs.begin(), xs.end(), detail::canonical_less);
  std::stable_sort(ys.begin(), ys.end(), detail::canonical_less);
  return xs == ys;
}

// The union is a segment and neither contains the other.
inline bool is_linked(const Segment& s1, const Segment& s2) {
  if (!detail::same_line(s1, s2)) return false;
  bool union_is_segment = s2.a() <= s1.b() + 1 && s1.a() <= s2.b() + 1;
  if (!union_is_segment) return false;
  bool s1_contains_s2 = s1.a() <= s2.a() && s2.b() <= s1.b();
  bool s2_contains_s1 = s2.a() <= s1.a() && s1.b() <= s2.b();
  return !s1_contains_s2 && !s2_contains_s1;
}

// a1 < a2, b1 < b2, a2 <= b1 + 1, on a common cuspidal line.
inline bool precedes(const Segment& s1, const Segment& s2) {
  return detail::same_line(s1, s2) && s1.a() < s2.a() && s1.b() < s2.b() && s2.a() <= s1.b() + 1;
}

// No earlier segment precedes a later one. Deterministic: stable sort by
// (rho id, a descending, b descending).
inline std::vector<Segment> order_multisegment(const Multisegment& m) {
  std::vector<Segment> out = m.segments();
  std::stable_sort(out.begin(), out.end(), detail::canonical_less);
  return out;
}

// P(M): each segment contributes its length with multiplicity rho.dim.
inline Partition partition_of(const Multisegment& m) {
  if (m.empty()) throw std::domain_error("partition_of: empty multisegment");
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(m.total_dim()));
  for (const auto& s : m.segments()) parts.insert(parts.end(), static_cast<std::size_t>(s.rho().dim), s.length());
  return Partition(std::move(parts));
}

// Wavefront orbit of the representation with Zelevinsky data `m`.
inline Partition wavefront(const Multisegment& m_zelevinsky) { return dual_partition(partition_of(m_zelevinsky)); }

// GK-dimension from Zelevinsky data: (N^2 - sum N_i k_i^2) / 2.
inline Rat gk_dim(const Multisegment& m_zelevinsky) {
  std::int64_t n = m_zelevinsky.total_dim();
  std::int64_t total = n * n;
  for (const auto& s : m_zelevinsky.segments()) {
    total -= static_cast<std::int64_t>(s.rho().dim) * s.length() * s.length();
  }
  return Rat(total, 2);
}

// Xi from Langlands data: each midpoint (a+b)/2 repeated N_i (b - a + 1) times.
inline CharacterList xi_of(const Multisegment& m_langlands) {
  std::vector<Rat> values;
  values.reserve(static_cast<std::size_t>(m_langlands.total_dim()));
  for (const auto& s : m_langlands.segments()) {
    values.insert(values.end(), static_cast<std::size_t>(s.ambient_dim()), s.midpoint());
  }
  return CharacterList(std::move(values));
}

// All segment midpoints coincide.
inline bool is_tempered(const Multisegment& m_langlands) {
  const auto& segs = m_langlands.segments();
  return std::all_of(segs.begin(), segs.end(), [&](const Segment& s) { return s.midpoint() == segs.front().midpoint(); });
}

}  // namespace glnrep
