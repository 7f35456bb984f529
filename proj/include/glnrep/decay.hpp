#pragma once

// Matrix-coefficient decay. The decay is reported as t = 1 - 2/p(pi), which
// lies in [0, 1] and equals 1 exactly when p(pi) is infinite.

#include "glnrep/exponents.hpp"
#include "glnrep/partition.hpp"
#include "glnrep/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace glnrep {

// sigma_i(a) = a_1 + ... + a_i.
inline std::vector<Rat> prefix_sums(const ExponentList& a) {
  std::vector<Rat> out;
  out.reserve(a.size());
  Rat running;
  for (const auto& v : a.values) {
    running += v;
    out.push_back(running);
  }
  return out;
}

// True iff b is dominated by a, i.e. sigma_i(b) <= sigma_i(a) for all i.
inline bool dominates(const ExponentList& a, const ExponentList& b) {
  if (a.size() != b.size()) throw std::domain_error("dominates: exponent lists of different lengths");
  Rat sa;
  Rat sb;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sa += a.values[i];
    sb += b.values[i];
    if (sb > sa) return false;
  }
  return true;
}

struct DecayResult {
  Rat t;
  bool p_is_infinite = false;
  std::vector<int> maximizers;  // 1-based indices attaining t

  // p = 2 / (1 - t), or nullopt when infinite.
  std::optional<Rat> p() const {
    if (p_is_infinite) return std::nullopt;
    return Rat(2) / (Rat(1) - t);
  }
};

namespace detail {

inline void require_sorted(const CharacterList& xi) {
  for (std::size_t i = 1; i < xi.size(); ++i) {
    if (xi.values[i - 1] < xi.values[i]) throw std::domain_error("decay: character must be sorted non-increasingly");
  }
}

}  // namespace detail

// t = max over 1 <= i <= N-1 of 2 sigma_i(Xi) / (i (N - i)), scanning every i.
inline DecayResult decay_t(const CharacterList& xi) {
  const std::int64_t n = static_cast<std::int64_t>(xi.size());
  if (n < 2) throw std::domain_error("decay_t: N must be at least 2");
  detail::require_sorted(xi);
  DecayResult result;
  Rat sigma;
  bool first = true;
  for (std::int64_t i = 1; i < n; ++i) {
    sigma += xi.values[static_cast<std::size_t>(i - 1)];
    Rat ratio = Rat(2) * sigma / Rat(i * (n - i));
    if (first || ratio > result.t) {
      result.t = ratio;
      result.maximizers.assign(1, static_cast<int>(i));
      first = false;
    } else if (ratio == result.t) {
      result.maximizers.push_back(static_cast<int>(i));
    }
  }
  result.p_is_infinite = result.t == Rat(1);
  return result;
}

// Indices s_j = a_1 + ... + a_j closing the blocks of distinct positive
// values d_1 > ... > d_r of a sorted character.
inline std::vector<int> block_boundaries(const CharacterList& xi) {
  std::vector<int> out;
  for (std::size_t i = 0; i < xi.size() && xi.values[i].sign() > 0; ++i) {
    bool last_of_block = i + 1 == xi.size() || xi.values[i + 1] != xi.values[i];
    if (last_of_block) out.push_back(static_cast<int>(i + 1));
  }
  return out;
}

// Same t as decay_t for negation-symmetric characters, evaluated only at the
// block boundaries. Fast path; always cross-check against decay_t.
inline Rat decay_t_block_boundaries(const CharacterList& xi) {
  const std::int64_t n = static_cast<std::int64_t>(xi.size());
  if (n < 2) throw std::domain_error("decay_t: N must be at least 2");
  detail::require_sorted(xi);
  Rat best;
  Rat sigma;
  std::size_t consumed = 0;
  for (int s : block_boundaries(xi)) {
    for (; consumed < static_cast<std::size_t>(s); ++consumed) sigma += xi.values[consumed];
    Rat ratio = Rat(2) * sigma / Rat(static_cast<std::int64_t>(s) * (n - s));
    if (ratio > best) best = ratio;
  }
  return best;
}

// Closed form for Arthur type: t = (d_1 - 1)/(N - a_1) where d_1 is the
// largest part of A(pi) and a_1 its multiplicity.
inline Rat decay_t_arthur(const Partition& a) {
  const std::int64_t n = a.n();
  if (n < 2) throw std::domain_error("decay_t_arthur: N must be at least 2");
  const int d1 = a.largest();
  if (d1 == 1) return Rat(0);
  if (d1 == n) return Rat(1);
  return Rat(d1 - 1, n - a.multiplicity(d1));
}

struct MaximizerCertificate {
  std::vector<int> argmax;      // brute-force maximizers of sigma_i / (i(N-i)), i <= N/2
  std::vector<int> boundaries;  // block boundaries s_j
  bool degenerate = false;      // Xi = 0: every index ties at 0
  bool contained = false;       // argmax is a subset of boundaries
};

// Checks that the maximum of sigma_i(Xi) / (i(N-i)) over i <= N/2 is attained
// only at block boundaries.
inline MaximizerCertificate maximizer_certificate(const CharacterList& xi) {
  const std::int64_t n = static_cast<std::int64_t>(xi.size());
  if (n < 2) throw std::domain_error("maximizer_certificate: N must be at least 2");
  detail::require_sorted(xi);
  MaximizerCertificate cert;
  cert.boundaries = block_boundaries(xi);
  Rat best;
  Rat sigma;
  for (std::int64_t i = 1; 2 * i <= n; ++i) {
    sigma += xi.values[static_cast<std::size_t>(i - 1)];
    Rat ratio = sigma / Rat(i * (n - i));
    if (cert.argmax.empty() || ratio > best) {
      best = ratio;
      cert.argmax.assign(1, static_cast<int>(i));
    } else if (ratio == best) {
      cert.argmax.push_back(static_cast<int>(i));
    }
  }
  cert.degenerate = cert.boundaries.empty();
  if (cert.degenerate) {
    cert.contained = true;
    return cert;
  }
  cert.contained = std::all_of(cert.argmax.begin(), cert.argmax.end(), [&](int i) {
    return std::find(cert.boundaries.begin(), cert.boundaries.end(), i) != cert.boundaries.end();
  });
  return cert;
}

}  // namespace glnrep
