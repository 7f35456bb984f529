#pragma once

// Exhaustive checks of the decay / GK-dimension relations and of the
// cross-classification identities, plus the data behind the bound-tightness
// scatter plot.

#include "glnrep/arthur.hpp"
#include "glnrep/bounds.hpp"
#include "glnrep/decay.hpp"
#include "glnrep/multisegment.hpp"
#include "glnrep/parallel.hpp"
#include "glnrep/partition.hpp"
#include "glnrep/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace glnrep {

struct InvariantReport {
  Partition A{std::vector<int>{1}};
  Partition wavefront{std::vector<int>{1}};
  Rat d_gk;
  std::optional<Rat> g;  // undefined for N = 1
  std::optional<Rat> t;
  bool arthur_type = true;
  bool lower_ok = true;    // g <= t
  bool upper_ok = true;    // t^2 <= g for Arthur type, t <= sqrt(g) + 2/N otherwise
  bool formula_ok = true;  // independent routes to t agree
  std::vector<int> maximizers;

  bool ok() const { return lower_ok && upper_ok && formula_ok; }
};

namespace detail {

inline Rat twice_gk_from_partition(const Partition& a) {
  std::int64_t n = a.n();
  std::int64_t total = n * n;
  for (int d : a.parts()) total -= static_cast<std::int64_t>(d) * d;
  return Rat(total);
}

// t <= sqrt(g) + slack, exactly: either t <= slack or (t - slack)^2 <= g.
inline bool within_sqrt_bound(const Rat& t, const Rat& g, const Rat& slack) {
  Rat excess = t - slack;
  return excess.sign() <= 0 || excess.square() <= g;
}

}  // namespace detail

// Report for the Arthur-type representation with Arthur-SL2 `a`. t comes from
// the closed form and is checked against the full scan over Xi.
inline InvariantReport arthur_partition_report(const Partition& a) {
  InvariantReport r;
  r.A = a;
  r.wavefront = dual_partition(a);
  r.d_gk = detail::twice_gk_from_partition(a) / Rat(2);
  if (a.n() < 2) return r;
  Rat g = g_from_arthur_partition(a);
  Rat t = decay_t_arthur(a);
  DecayResult scan = decay_t(xi_from_arthur_partition(a));
  r.formula_ok = scan.t == t;
  r.lower_ok = g <= t;
  r.upper_ok = t.square() <= g;
  r.maximizers = std::move(scan.maximizers);
  r.g = std::move(g);
  r.t = std::move(t);
  return r;
}

// Report for any unitarizable representation, via Xi and the general decay
// formula. The upper bound checked is the one for the class of pi.
inline InvariantReport invariant_report(const UnitaryRep& pi) {
  InvariantReport r;
  r.A = arthur_sl2(pi);
  r.wavefront = dual_partition(r.A);
  r.d_gk = gk_dim_arthur(pi);
  r.arthur_type = pi.is_arthur_type();
  if (pi.N() < 2) return r;
  Rat g = g_param(pi);
  CharacterList xi = xi_arthur(pi);
  DecayResult scan = decay_t(xi);
  Rat t = scan.t;
  r.lower_ok = g <= t;
  if (r.arthur_type) {
    r.upper_ok = t.square() <= g;
    r.formula_ok = decay_t_arthur(r.A) == t;
  } else {
    r.upper_ok = detail::within_sqrt_bound(t, g, Rat(2, pi.N()));
    r.formula_ok = !xi.is_negation_symmetric() || decay_t_block_boundaries(xi) == t;
  }
  r.maximizers = std::move(scan.maximizers);
  r.g = std::move(g);
  r.t = std::move(t);
  return r;
}

struct SweepSummary {
  int N = 0;
  std::uint64_t count = 0;
  std::vector<InvariantReport> failures;
  std::optional<Rat> min_gap_lower;  // min of t - g
  std::optional<Rat> min_gap_upper;  // min of g - t^2 (Arthur) or g - (t - 2/N)_+^2

  void add(const InvariantReport& r, const Rat& gap_lower, const Rat& gap_upper) {
    ++count;
    if (!r.ok()) failures.push_back(r);
    if (!min_gap_lower || gap_lower < *min_gap_lower) min_gap_lower = gap_lower;
    if (!min_gap_upper || gap_upper < *min_gap_upper) min_gap_upper = gap_upper;
  }

  // Associative and commutative up to the order of `failures`, which follows
  // the order of merging.
  void merge(const SweepSummary& other) {
    count += other.count;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    if (other.min_gap_lower && (!min_gap_lower || *other.min_gap_lower < *min_gap_lower)) {
      min_gap_lower = other.min_gap_lower;
    }
    if (other.min_gap_upper && (!min_gap_upper || *other.min_gap_upper < *min_gap_upper)) {
      min_gap_upper = other.min_gap_upper;
    }
  }
};

// Every Arthur-type representation of GL_N up to its Arthur-SL2: checks
// g <= t <= sqrt(g) exactly for all partitions of N.
inline SweepSummary verify_uncertainty_arthur(int N, unsigned threads = 1) {
  if (N < 2) throw std::domain_error("verify_uncertainty_arthur: N must be at least 2");
  auto chunks = enumerate_partitions(N).split();
  auto partials = parallel_map(chunks.size(), threads, [&](std::size_t i) {
    SweepSummary s;
    s.N = N;
    for (const Partition& a : chunks[i]) {
      InvariantReport r = arthur_partition_report(a);
      s.add(r, *r.t - *r.g, *r.g - r.t->square());
    }
    return s;
  });
  SweepSummary total;
  total.N = N;
  for (const auto& p : partials) total.merge(p);
  return total;
}

namespace detail {

struct UnitaryGroup {
  int a = 1;
  int d = 1;
  std::optional<Rat> twist;  // set for a +-twist pair

  int dim() const { return twist ? 2 * a * d : a * d; }
};

inline UnitaryRep build_unitary(const std::vector<UnitaryGroup>& groups) {
  SupercuspidalLabel rho("rho", 1);
  std::vector<ArthurSummand> summands;
  for (const auto& grp : groups) {
    if (grp.twist) {
      summands.push_back(ArthurSummand{rho, grp.a, grp.d, *grp.twist});
      summands.push_back(ArthurSummand{rho, grp.a, grp.d, -*grp.twist});
    } else {
      summands.push_back(ArthurSummand{rho, grp.a, grp.d, Rat(0)});
    }
  }
  return UnitaryRep(std::move(summands));
}

// Calls fn on every multiset of at most `max_size` elements of `types`
// (given by non-decreasing index sequences) whose weights sum to `target`.
template <typename Fn>
void for_each_multiset(const std::vector<int>& weights, int target, int max_size, Fn&& fn) {
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int remaining) {
    if (remaining == 0 && !chosen.empty()) {
      fn(chosen);
      return;
    }
    if (static_cast<int>(chosen.size()) == max_size) return;
    for (std::size_t i = start; i < weights.size(); ++i) {
      if (weights[i] > remaining) continue;
      chosen.push_back(i);
      rec(i, remaining - weights[i]);
      chosen.pop_back();
    }
  };
  rec(0, target);
}

}  // namespace detail

// Unitarizable representations of GL_N over dim-1 labels built from at most
// `max_summands` groups, each an untwisted rho[a][d] or a pair
// |.|^{+-y} rho[a][d] with y from `twist_grid`. Checks g <= t <= sqrt(g) + 2/N.
inline SweepSummary verify_uncertainty_unitary(int N, const std::vector<Rat>& twist_grid, int max_summands) {
  if (N < 2) throw std::domain_error("verify_uncertainty_unitary: N must be at least 2");
  for (const auto& y : twist_grid) {
    if (y.sign() <= 0 || y >= Rat(1, 2)) {
      throw std::domain_error("verify_uncertainty_unitary: twist " + y.str() + " is not in the open interval (0, 1/2)");
    }
  }
  std::vector<detail::UnitaryGroup> types;
  for (int a = 1; a <= N; ++a) {
    for (int d = 1; a * d <= N; ++d) {
      types.push_back({a, d, std::nullopt});
      for (const auto& y : twist_grid) {
        if (2 * a * d <= N) types.push_back({a, d, y});
      }
    }
  }
  std::vector<int> weights;
  for (const auto& t : types) weights.push_back(t.dim());

  SweepSummary summary;
  summary.N = N;
  const Rat slack(2, N);
  detail::for_each_multiset(weights, N, max_summands, [&](const std::vector<std::size_t>& idx) {
    std::vector<detail::UnitaryGroup> groups;
    for (auto i : idx) groups.push_back(types[i]);
    UnitaryRep pi = detail::build_unitary(groups);
    InvariantReport r = invariant_report(pi);
    // The unitary upper bound applies to every member of the sweep.
    r.upper_ok = detail::within_sqrt_bound(*r.t, *r.g, slack);
    Rat excess = *r.t - slack;
    Rat gap_upper = excess.sign() > 0 ? *r.g - excess.square() : *r.g;
    summary.add(r, *r.t - *r.g, gap_upper);
  });
  return summary;
}

struct ConsistencyBudget {
  int max_summands = 4;
  int max_dim = 3;
  int max_a = 4;
  int max_d = 4;
  std::size_t random_cases = 10000;
  std::uint64_t seed = 0x5eed'2024ULL;
};

struct ConsistencyFailure {
  UnitaryRep pi;
  std::string identity;
};

struct ConsistencySummary {
  int max_N = 0;
  std::uint64_t exhaustive_count = 0;
  std::uint64_t random_count = 0;
  std::vector<ConsistencyFailure> failures;

  std::uint64_t count() const { return exhaustive_count + random_count; }
};

// Checks the Arthur-route invariants against the Zelevinsky/Langlands route
// for one representation. Returns the names of the identities that fail.
inline std::vector<std::string> check_two_routes(const UnitaryRep& pi) {
  std::vector<std::string> failed;
  Multisegment zel = zelevinsky_data(pi);
  Multisegment lang = expand_to_langlands(pi);
  if (zel.total_dim() != pi.N() || lang.total_dim() != pi.N()) failed.emplace_back("total dimension");
  if (gk_dim_arthur(pi) != gk_dim(zel)) failed.emplace_back("GK-dimension");
  if (Rat(orbit_dim(wavefront(zel)), 2) != gk_dim(zel)) failed.emplace_back("GK-dimension via orbit dimension");
  if (dual_partition(arthur_sl2(pi)) != wavefront(zel)) failed.emplace_back("wavefront");
  if (xi_arthur(pi) != xi_of(lang)) failed.emplace_back("character Xi");
  if (fixed_vector_exponent(zel).coeff_of_ell != gk_dim(zel)) failed.emplace_back("fixed-vector exponent");
  if (!hch_coefficient_exponent(zel, wavefront(zel)).coeff_of_ell.is_zero()) failed.emplace_back("HCH exponent at wavefront");
  if (az_dual(az_dual(pi)) != pi) failed.emplace_back("duality involution");
  return failed;
}

// Exhaustive sweep over sums of at most budget.max_summands Arthur-type
// summands rho[a][d] (dim rho <= max_dim, a <= max_a, d <= max_d) with total
// dimension at most max_N, followed by random Arthur-type and unitarizable
// cases of the same shape.
inline ConsistencySummary verify_consistency(int max_N, const ConsistencyBudget& budget = {}) {
  if (max_N < 1) throw std::domain_error("verify_consistency: N must be positive");
  ConsistencySummary summary;
  summary.max_N = max_N;
  auto label = [](int dim) { return SupercuspidalLabel("c" + std::to_string(dim), dim); };

  auto check = [&](const UnitaryRep& pi) {
    for (auto& what : check_two_routes(pi)) summary.failures.push_back({pi, std::move(what)});
  };

  std::vector<ArthurSummand> types;
  std::vector<int> weights;
  for (int m = 1; m <= budget.max_dim; ++m) {
    for (int a = 1; a <= budget.max_a; ++a) {
      for (int d = 1; d <= budget.max_d; ++d) {
        types.push_back(ArthurSummand{label(m), a, d, Rat(0)});
        weights.push_back(m * a * d);
      }
    }
  }
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int used) {
    if (!chosen.empty()) {
      std::vector<ArthurSummand> summands;
      for (auto i : chosen) summands.push_back(types[i]);
      check(UnitaryRep(std::move(summands)));
      ++summary.exhaustive_count;
    }
    if (static_cast<int>(chosen.size()) == budget.max_summands) return;
    for (std::size_t i = start; i < types.size(); ++i) {
      if (used + weights[i] > max_N) continue;
      chosen.push_back(i);
      rec(i, used + weights[i]);
      chosen.pop_back();
    }
  };
  rec(0, 0);

  std::mt19937_64 rng(budget.seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const std::vector<Rat> twists{Rat(1, 10), Rat(1, 4), Rat(1, 3), Rat(2, 5), Rat(3, 7)};
  for (std::size_t c = 0; c < budget.random_cases; ++c) {
    // Rejection-sample until the total dimension fits.
    for (;;) {
      std::vector<ArthurSummand> summands;
      int groups = uniform(1, budget.max_summands);
      bool twisted_case = c % 2 == 1;
      for (int k = 0; k < groups; ++k) {
        int m = uniform(1, budget.max_dim);
        SupercuspidalLabel rho("r" + std::to_string(uniform(0, 2)) + "_" + std::to_string(m), m);
        ArthurSummand s{rho, uniform(1, budget.max_a), uniform(1, budget.max_d), Rat(0)};
        if (twisted_case && uniform(0, 1) == 1) {
          s.x = twists[static_cast<std::size_t>(uniform(0, static_cast<int>(twists.size()) - 1))];
          summands.push_back(s);
          s.x = -s.x;
        }
        summands.push_back(s);
      }
      UnitaryRep pi(std::move(summands));
      if (pi.N() > max_N) continue;
      check(pi);
      ++summary.random_count;
      break;
    }
  }
  return summary;
}

struct FigureRow {
  Partition A{std::vector<int>{1}};
  Rat d_gk;
  Rat g;
  Rat t;
  bool lower_ok = false;
  bool upper_ok = false;
};

// One row per Arthur-SL2 partition of N, sorted by d_GK and then by
// enumeration order.
inline std::vector<FigureRow> figure_data(int N, unsigned threads = 1) {
  if (N < 2) throw std::domain_error("figure_data: N must be at least 2");
  auto chunks = enumerate_partitions(N).split();
  auto partials = parallel_map(chunks.size(), threads, [&](std::size_t i) {
    std::vector<FigureRow> rows;
    for (const Partition& a : chunks[i]) {
      InvariantReport r = arthur_partition_report(a);
      rows.push_back(FigureRow{a, r.d_gk, *r.g, *r.t, r.lower_ok, r.upper_ok && r.formula_ok});
    }
    return rows;
  });
  std::vector<FigureRow> rows;
  for (auto& p : partials) rows.insert(rows.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  std::stable_sort(rows.begin(), rows.end(), [](const FigureRow& x, const FigureRow& y) { return x.d_gk < y.d_gk; });
  return rows;
}

inline constexpr const char* kFigureCsvHeader =
    "partition,d_gk,g_num,g_den,t_num,t_den,g_float,t_float,sqrt_g_float,lower_ok,upper_ok";

inline void write_figure_csv(std::ostream& os, const std::vector<FigureRow>& rows) {
  os << kFigureCsvHeader << '\n';
  for (const auto& r : rows) {
    os << r.A.str() << ',' << r.d_gk.str() << ',' << r.g.num() << ',' << r.g.den() << ',' << r.t.num() << ','
       << r.t.den() << ',' << r.g.decimal(12) << ',' << r.t.decimal(12) << ',' << decimal_sqrt(r.g, 12) << ','
       << (r.lower_ok ? "true" : "false") << ',' << (r.upper_ok ? "true" : "false") << '\n';
  }
}

}  // namespace glnrep
