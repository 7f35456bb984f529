#pragma once

// Exponents of q^l in the uniform bounds on fixed vectors and
// Harish-Chandra-Howe coefficients. Only the exponents are computed; the
// constants in front of the bounds are not constructive.

#include "glnrep/arthur.hpp"
#include "glnrep/multisegment.hpp"
#include "glnrep/partition.hpp"
#include "glnrep/rational.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace glnrep {

struct BoundExponent {
  Rat coeff_of_ell;            // exponent of q per unit of level
  bool epsilon_slack = false;  // bound holds with exponent coeff + epsilon for every epsilon > 0
  std::string description;
};

// q^(l * coeff) as a double, for display. The slack epsilon is not applied.
inline double evaluate_bound(const BoundExponent& e, double q, double level) {
  double coeff = static_cast<double>(e.coeff_of_ell.num()) / static_cast<double>(e.coeff_of_ell.den());
  return std::pow(q, level * coeff);
}

// dim pi^{K_l} << q^{l (N^2 - sum N_i k_i^2)/2 + eps}, from Zelevinsky data.
inline BoundExponent fixed_vector_exponent(const Multisegment& m_zelevinsky) {
  return BoundExponent{gk_dim(m_zelevinsky), true, "fixed-vector growth"};
}

enum class SpehVariant { absolute, relative };

// Speh(k, rho) with dim rho = n_rho. The relative variant is the exponent in
// front of dim(rho^{K_l})^k.
inline BoundExponent speh_exponent(int k, int n_rho, SpehVariant variant) {
  if (k < 1 || n_rho < 1) throw std::domain_error("speh_exponent: k and n_rho must be >= 1");
  std::int64_t base = static_cast<std::int64_t>(n_rho) * (n_rho - 1);
  if (variant == SpehVariant::absolute) {
    return BoundExponent{Rat(static_cast<std::int64_t>(k) * k * base, 2), true, "Speh fixed vectors"};
  }
  return BoundExponent{Rat(static_cast<std::int64_t>(k) * (k - 1) * base, 2), false,
                       "Speh fixed vectors relative to dim(rho^K)^k"};
}

// (d_GK - sum_i d_GK(rho_i), d_GK - sum_i k_i d_GK(rho_i)): the bounds
// relative to prod dim(rho_i^K) and prod dim(rho_i^K)^{k_i}.
inline std::pair<BoundExponent, BoundExponent> relative_exponents(const Multisegment& m_zelevinsky) {
  Rat d = gk_dim(m_zelevinsky);
  Rat once;
  Rat with_multiplicity;
  for (const auto& s : m_zelevinsky.segments()) {
    Rat rho_gk(static_cast<std::int64_t>(s.rho().dim) * (s.rho().dim - 1), 2);
    once += rho_gk;
    with_multiplicity += Rat(s.length()) * rho_gk;
  }
  return {BoundExponent{d - once, true, "fixed vectors relative to prod dim(rho_i^K)"},
          BoundExponent{d - with_multiplicity, true, "fixed vectors relative to prod dim(rho_i^K)^k_i"}};
}

// |c_O(pi)| << q^{l(pi)(d_GK - dim O / 2) + eps}. Negative values are kept.
inline BoundExponent hch_coefficient_exponent(const Multisegment& m_zelevinsky, const Partition& orbit) {
  if (orbit.n() != m_zelevinsky.total_dim()) {
    throw std::domain_error("hch_coefficient_exponent: orbit and representation have different N");
  }
  return BoundExponent{gk_dim(m_zelevinsky) - Rat(orbit_dim(orbit), 2), true, "HCH coefficient"};
}

struct GenSummand {
  int n = 1;  // GL_n of the generic unitary constituent sigma_i
  int d = 1;  // Arthur SL2 length

  friend bool operator==(const GenSummand&, const GenSummand&) = default;
};

// psi = sum phi_i[d_i] with phi_i the parameter of a generic unitary sigma_i.
struct GenArthurParam {
  std::vector<GenSummand> summands;

  int N() const {
    int total = 0;
    for (const auto& s : summands) total += s.n * s.d;
    return total;
  }

  // A(pi) = [d_i^(n_i)].
  Partition arthur_sl2() const {
    if (summands.empty()) throw std::domain_error("GenArthurParam: no summands");
    std::vector<int> parts;
    for (const auto& s : summands) {
      if (s.n < 1 || s.d < 1) throw std::domain_error("GenArthurParam: n and d must be >= 1");
      parts.insert(parts.end(), static_cast<std::size_t>(s.n), s.d);
    }
    return Partition(std::move(parts));
  }

  friend bool operator==(const GenArthurParam&, const GenArthurParam&) = default;
};

// d_GK(pi) - sum_i d_GK(sigma_i), with d_GK(sigma_i) = n_i(n_i - 1)/2.
inline BoundExponent genbound_exponent(const GenArthurParam& p) {
  Partition a = p.arthur_sl2();
  std::int64_t n = a.n();
  std::int64_t twice_gk = n * n;
  for (int d : a.parts()) twice_gk -= static_cast<std::int64_t>(d) * d;
  Rat coeff(twice_gk, 2);
  for (const auto& s : p.summands) coeff -= Rat(static_cast<std::int64_t>(s.n) * (s.n - 1), 2);
  return BoundExponent{coeff, true, "fixed vectors relative to prod dim(sigma_i^K)"};
}

// Exponent for representations with p(pi) >= p0:
// N(N-1)(1 - (1 - 2/p0 - s)^2) - dim O / 2, with s = 0 for Arthur type and
// s = 2/N otherwise. The squared term is zero when its base is negative.
inline BoundExponent p0_exponents(int N, const Rat& p0, const std::optional<Partition>& orbit, bool arthur_type) {
  if (N < 1) throw std::domain_error("p0_exponents: N must be positive");
  if (p0 < Rat(2)) throw std::domain_error("p0_exponents: p0 must be >= 2");
  if (orbit && orbit->n() != N) throw std::domain_error("p0_exponents: orbit is not a partition of N");
  Rat base = Rat(1) - Rat(2) / p0;
  if (!arthur_type) base -= Rat(2, N);
  Rat squared = base.sign() > 0 ? base.square() : Rat(0);
  Rat coeff = Rat(static_cast<std::int64_t>(N) * (N - 1)) * (Rat(1) - squared);
  std::string what = orbit ? "HCH coefficient given p(pi) >= p0" : "fixed vectors given p(pi) >= p0";
  if (orbit) coeff -= Rat(orbit_dim(*orbit), 2);
  return BoundExponent{coeff, true, what};
}

}  // namespace glnrep
