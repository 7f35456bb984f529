// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "glnrep/glnrep.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace glnrep;

namespace {

// Pinned limits. Every comparison below is exact; the only tolerance is time.
constexpr double kFigureSecondsLimit = 10.0;
constexpr int kFigureN = 50;
constexpr std::uint64_t kFigureRows = 204226;
constexpr int kSweepMaxN = 50;
constexpr int kUnitaryMaxN = 8;
constexpr int kUnitaryGroups = 3;
constexpr int kFormulaMaxN = 30;
constexpr int kMaximizerMaxN = 20;
constexpr int kConsistencyMaxN = 4 * 3 * 4 * 4;  // no cap within the summand budget
constexpr int kAnchorMaxN = 24;
constexpr int kSpehMaxKN = 10;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::printf("[%s] %d. %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs);
  std::fflush(stdout);
}

Partition from_parts(std::vector<int> parts) { return Partition(std::move(parts)); }

// pi = sum of rho_i[1][d] over the parts d of A, dim-1 labels.
UnitaryRep untwisted_over_characters(const Partition& a) {
  std::vector<ArthurSummand> s;
  int i = 0;
  for (int d : a.parts()) s.push_back(ArthurSummand{SupercuspidalLabel("c" + std::to_string(i++), 1), 1, d, Rat(0)});
  return UnitaryRep(std::move(s));
}

}  // namespace

int main() {
  const unsigned threads = resolve_threads(0);
  std::printf("workers: %u\n", threads);
  const auto p = oracle::partition_counts(60);

  criterion(1, "figure reproduction", [&] {
    auto start = std::chrono::steady_clock::now();
    auto rows = figure_data(kFigureN, threads);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::uint64_t bad = 0;
    for (const auto& r : rows) {
      if (!(r.g <= r.t) || !(r.t.square() <= r.g)) ++bad;
    }
    bool count_ok = rows.size() == p[kFigureN] && rows.size() == kFigureRows;
    return Outcome{count_ok && bad == 0 && secs <= kFigureSecondsLimit,
                   std::to_string(rows.size()) + " rows (oracle " + std::to_string(p[kFigureN]) + "), " +
                       std::to_string(bad) + " rows violating g <= t, t^2 <= g; generated in " + std::to_string(secs) +
                       " s (limit " + std::to_string(kFigureSecondsLimit) + ")"};
  });

  criterion(2, "uncertainty theorem sweep, Arthur type", [&] {
    std::uint64_t checked = 0;
    std::uint64_t bad = 0;
    bool counts_ok = true;
    for (int n = 2; n <= kSweepMaxN; ++n) {
      auto s = verify_uncertainty_arthur(n, threads);
      checked += s.count;
      bad += s.failures.size();
      counts_ok = counts_ok && s.count == p[static_cast<std::size_t>(n)];
    }
    return Outcome{bad == 0 && counts_ok,
                   std::to_string(checked) + " partitions for 2 <= N <= 50, " + std::to_string(bad) + " failures"};
  });

  criterion(3, "uncertainty theorem, unitarizable", [&] {
    const std::vector<Rat> grid{Rat(1, 10), Rat(2, 10), Rat(3, 10), Rat(4, 10)};
    std::uint64_t checked = 0;
    std::uint64_t bad = 0;
    for (int n = 2; n <= kUnitaryMaxN; ++n) {
      auto s = verify_uncertainty_unitary(n, grid, kUnitaryGroups);
      checked += s.count;
      bad += s.failures.size();
    }
    return Outcome{bad == 0 && checked > 0,
                   std::to_string(checked) + " representations, " + std::to_string(bad) + " failures of g <= t <= sqrt(g) + 2/N"};
  });

  criterion(4, "closed form equals full decay scan", [&] {
    std::uint64_t checked = 0;
    std::uint64_t bad = 0;
    for (int n = 2; n <= kFormulaMaxN; ++n) {
      for (const Partition& a : enumerate_partitions(n)) {
        ++checked;
        if (decay_t(xi_arthur(untwisted_over_characters(a))).t != decay_t_arthur(a)) ++bad;
      }
    }
    return Outcome{bad == 0, std::to_string(checked) + " partitions with N <= 30, " + std::to_string(bad) + " mismatches"};
  });

  criterion(5, "maximizers lie on block boundaries", [&] {
    std::uint64_t checked = 0;
    std::uint64_t bad = 0;
    for (int n = 2; n <= kMaximizerMaxN; ++n) {
      for (const Partition& a : enumerate_partitions(n)) {
        ++checked;
        if (!maximizer_certificate(xi_from_arthur_partition(a)).contained) ++bad;
      }
    }
    return Outcome{bad == 0, std::to_string(checked) + " partitions with N <= 20, " + std::to_string(bad) + " exceptions"};
  });

  criterion(6, "Arthur route equals Zelevinsky/Langlands route", [&] {
    ConsistencyBudget budget;  // <= 4 summands, dims <= 3, a, d <= 4, 10000 random
    auto s = verify_consistency(kConsistencyMaxN, budget);
    std::uint64_t speh_bad = 0;
    for (int n = 1; n <= 12; ++n) {
      for (int d = 1; d <= n; ++d) {
        if (n % d == 0) {
          UnitaryRep speh({ArthurSummand{SupercuspidalLabel("r", n / d), 1, d, Rat(0)}});
          speh_bad += check_two_routes(speh).size();
        }
      }
    }
    bool ok = s.failures.empty() && speh_bad == 0 && s.random_count == budget.random_cases;
    std::string detail = std::to_string(s.exhaustive_count) + " exhaustive + " + std::to_string(s.random_count) +
                         " random, " + std::to_string(s.failures.size() + speh_bad) + " failures";
    if (!s.failures.empty()) detail += " (first: " + s.failures.front().identity + ")";
    return Outcome{ok, detail};
  });

  criterion(7, "anchor values", [&] {
    int bad = 0;
    int checked = 0;
    for (int n = 2; n <= kAnchorMaxN; ++n) {
      for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        ++checked;
        UnitaryRep speh({ArthurSummand{SupercuspidalLabel("r", n / d), 1, d, Rat(0)}});
        Multisegment z = zelevinsky_data(speh);
        if (wavefront(z) != Partition::uniform(n / d, d)) ++bad;
        if (gk_dim(z) != Rat(n * (n - d), 2) || gk_dim_arthur(speh) != Rat(n * (n - d), 2)) ++bad;
      }
      ++checked;
      auto generic = invariant_report(untwisted_over_characters(Partition::uniform(1, n)));
      if (*generic.t != Rat(0) || generic.d_gk != Rat(n * (n - 1), 2)) ++bad;
      if (!is_tempered(expand_to_langlands(untwisted_over_characters(Partition::uniform(1, n))))) ++bad;
      ++checked;
      auto character = invariant_report(untwisted_over_characters(from_parts({n})));
      if (*character.g != Rat(1) || *character.t != Rat(1)) ++bad;
    }
    return Outcome{bad == 0, std::to_string(checked) + " anchors for N <= 24, " + std::to_string(bad) + " mismatches"};
  });

  criterion(8, "fixed-vector and HCH exponent identities", [&] {
    std::uint64_t checked = 0;
    std::uint64_t bad = 0;
    auto check_multisegment = [&](const Multisegment& m) {
      ++checked;
      if (fixed_vector_exponent(m).coeff_of_ell != gk_dim(m)) ++bad;
      if (!hch_coefficient_exponent(m, wavefront(m)).coeff_of_ell.is_zero()) ++bad;
    };
    // Zelevinsky data of every Arthur-type representation up to N = 20, over dim-1 labels.
    for (int n = 1; n <= 20; ++n) {
      for (const Partition& a : enumerate_partitions(n)) check_multisegment(zelevinsky_data(untwisted_over_characters(a)));
    }
    // The two-route consistency sweep includes both identities per representation.
    ConsistencyBudget budget;
    auto s = verify_consistency(kConsistencyMaxN, budget);
    checked += s.count();
    bad += s.failures.size();
    for (int k = 1; k <= kSpehMaxKN; ++k) {
      for (int n = 1; n <= kSpehMaxKN; ++n) {
        ++checked;
        Rat diff = speh_exponent(k, n, SpehVariant::absolute).coeff_of_ell -
                   speh_exponent(k, n, SpehVariant::relative).coeff_of_ell;
        if (diff != Rat(k * n * (n - 1), 2)) ++bad;
      }
    }
    return Outcome{bad == 0, std::to_string(checked) + " cases, " + std::to_string(bad) + " failures"};
  });

  std::printf("%s: %d of 8 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
