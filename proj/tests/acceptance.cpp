// Acceptance suite: one line per criterion, exit 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gibbslab/checkers.hpp"
#include "gibbslab/fill.hpp"
#include "gibbslab/kozlov.hpp"
#include "gibbslab/markers.hpp"
#include "gibbslab/norms.hpp"
#include "gibbslab/parallel.hpp"
#include "gibbslab/rng.hpp"
#include "gibbslab/speckernel.hpp"
#include "gibbslab/sullivan.hpp"
#include "gibbslab/zoo.hpp"

using namespace gibbslab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void run(const std::string& name, const std::function<Outcome()>& fn) {
  auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = fn();
  } catch (const std::exception& e) {
    outcome.pass = false;
    outcome.detail = std::string("exception: ") + e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::printf("[%s] %s (%lld ms)%s%s\n", outcome.pass ? "PASS" : "FAIL",
              name.c_str(), static_cast<long long>(ms),
              outcome.detail.empty() ? "" : " -- ", outcome.detail.c_str());
  std::fflush(stdout);
  if (!outcome.pass) ++failures;
}

Interaction golden_mean_cocycle() {
  // The nearest-neighbour Markov cocycle used by the builder criteria.
  Interaction phi(InteractionMode::ShiftInvariant);
  phi.set(Pattern::of(Shape{Site{0, 0}}, {1}), 1.0);
  phi.set(Pattern::of(Shape::interval(0, 1), {1, 0}), 0.5);
  phi.set(Pattern::of(Shape::interval(0, 1), {0, 1}), -0.25);
  return phi;
}

Configuration random_hardcore(CounterRng& rng, int lo, int hi) {
  Configuration x;
  for (int s = lo; s <= hi; ++s)
    if (rng.next_bit() && x.at({s - 1, 0}) == 0) x = x.with({s, 0}, 1);
  return x;
}

Configuration random_binary(CounterRng& rng, int lo, int hi) {
  Configuration x;
  for (int s = lo; s <= hi; ++s)
    if (rng.next_bit()) x = x.with({s, 0}, 1);
  return x;
}

long long ball3(int r) {
  long long c = 0;
  for (int x = -r; x <= r; ++x)
    for (int y = -r; y <= r; ++y)
      for (int z = -r; z <= r; ++z)
        if (std::abs(x) + std::abs(y) + std::abs(z) <= r) ++c;
  return c;
}

long long ball2(int r) {
  long long c = 0;
  for (int x = -r; x <= r; ++x)
    for (int y = -r; y <= r; ++y)
      if (std::abs(x) + std::abs(y) <= r) ++c;
  return c;
}

MarkerData certified;  // shared by criteria 1-5

}  // namespace

int main() {
  const int workers = default_workers();
  std::printf("acceptance suite (workers = %d)\n", workers);

  // 1. Marker search + exhaustive verification: k=2, delta=1/2, eps=0.2,
  //    seed 7, n = 400 <= 1000, within 1e6 attempts.
  run("criterion 1: marker search certifies a pair (k=2, eps=0.2, n=400)",
      [&]() -> Outcome {
        MarkerParams params;
        params.k = 2;
        params.n = 400;
        params.delta = 0.5;
        params.epsilon = 0.2;
        params.K_const = 16;
        params.seed = 7;
        MarkerSearchReport report = search_markers(params, 1000000, workers);
        if (!report.found)
          return {false, "search exhausted the attempt budget"};
        certified = report.data;
        MarkerVerifyReport recheck =
            verify_markers(params, certified.u, certified.v, workers);
        bool ok = recheck.passed() && recheck.full;
        return {ok, "attempts = " + std::to_string(report.attempts) +
                        ", shapes checked = " +
                        std::to_string(recheck.shapes_checked)};
      });

  // 2. psi_k on the padded marker pair equals -2n exactly.
  run("criterion 2: psi_k(marker pair) = -2n exactly", [&]() -> Outcome {
    if (!certified.certified.passed()) return {false, "no certified pair"};
    long long value = psi_k(certified, marker_pair(certified));
    long long want = -2LL * certified.params.n;
    return {value == want, "psi_k = " + std::to_string(value) +
                               ", expected " + std::to_string(want)};
  });

  // 3. Sampled Sullivan bound: 1e5 single-site pairs, |psi_k| <= 544.
  run("criterion 3: max |psi_k| over 1e5 single-site pairs <= 544",
      [&]() -> Outcome {
        if (!certified.certified.passed()) return {false, "no certified pair"};
        SampleCheckReport s =
            marker_sullivan_sample(certified, 100000, 20240807, workers);
        return {s.worst <= 544 && s.samples == 100000,
                "max = " + std::to_string(s.worst) + " over " +
                    std::to_string(s.samples) + " samples, bound 544"};
      });

  // 4. Safe interval: 1e4 sampled z with Phi(z) != 0, all shifts
  //    0 < |j| <= n/8 give Phi = 0.
  run("criterion 4: safe interval holds for 1e4 clamp-active samples",
      [&]() -> Outcome {
        if (!certified.certified.passed()) return {false, "no certified pair"};
        SampleCheckReport s =
            check_safe_interval(certified, 10000, 987654321, workers);
        return {s.passed && s.samples >= 10000,
                "active samples = " + std::to_string(s.samples)};
      });

  // 5. Dual-norm proxy over the declared budget stays under 6n/k.
  run("criterion 5: word-count dual norm proxy <= 6n/k", [&]() -> Outcome {
    if (!certified.certified.passed()) return {false, "no certified pair"};
    SftSpace full = full_shift(2, 1);
    const int n = certified.params.n;
    DualNormBudget budget;
    budget.max_size = 3;
    budget.max_diameter = 2 * n;
    budget.intervals_up_to = 3 * n;
    budget.workers = workers;
    NormReport proxy = dual_ns_norm(marker_pair(certified), full, budget);
    double bound = 6.0 * n / certified.params.k;
    char buf[160];
    std::snprintf(buf, sizeof buf, "proxy = %.6f (%s), bound = %.1f",
                  proxy.value, proxy.note.c_str(), bound);
    return {proxy.value <= bound, buf};
  });

  // 6. Kozlov chain on the golden-mean shift reproduces the cocycle exactly.
  run("criterion 6: golden-mean 3-step chain exact on T_{[-3,3]}",
      [&]() -> Outcome {
        SftSpace hc = hardcore_shift(1);
        WindowedSpace ws;
        ws.sft = &hc;
        ws.window = Shape::interval(-8, 8);
        ws.boundary = Configuration();
        Cocycle psi = Cocycle::from_interaction(hc, golden_mean_cocycle());
        std::vector<Shape> chain{Shape{Site{0, 0}}, Shape::interval(-1, 1),
                                 Shape::interval(-3, 3)};
        KozlovChainResult result = kozlov_chain(ws, psi, chain);
        bool ok = result.certificate.max_error <= 1e-10 &&
                  result.support_disjoint &&
                  result.certificate.pairs_checked <= 100000;
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "max error = %.2e over %lld pairs, supports disjoint: %s",
                      result.certificate.max_error,
                      result.certificate.pairs_checked,
                      result.support_disjoint ? "yes" : "no");
        return {ok, buf};
      });

  // 7. Sullivan builder sweep n = 4..12 on the same space and cocycle.
  run("criterion 7: splice builder sweep (VS bound + shrinking defect)",
      [&]() -> Outcome {
        SftSpace hc = hardcore_shift(1);
        FillContext ctx = make_fill_context(hc, Configuration());
        Cocycle psi = Cocycle::from_interaction(hc, golden_mean_cocycle());
        auto rows = sullivan_sweep(ctx, psi, 4, 12, workers);
        double sull = rows.back().sull_psi;
        bool vs_ok = rows.back().vs_phi <= 3.0 * sull;
        bool monotone = true;
        for (std::size_t i = 1; i < rows.size(); ++i)
          if (rows[i].sull_diff > rows[i - 1].sull_diff + 1e-12)
            monotone = false;
        bool final_ok = rows.back().sull_diff < 0.1 * sull;
        char buf[200];
        std::snprintf(buf, sizeof buf,
                      "vs(n=12) = %.6f <= 3*%.6f; defect %.2e -> %.2e",
                      rows.back().vs_phi, sull, rows.front().sull_diff,
                      rows.back().sull_diff);
        return {vs_ok && monotone && final_ok, buf};
      });

  // 8. Height cocycle on diamond pairs. The first clause asserts the quoted
  //    identity psi(i) == |B_i^(3)|; the computed value is in fact the
  //    off-plane count |B_i^(3)| - |B_i^(2)| (reported alongside), so this
  //    clause documents a defect in the quoted value rather than in the
  //    cocycle. The growth-ratio clause is checked independently.
  run("criterion 8a: height cocycle equals the 3D ball count (as stated)",
      [&]() -> Outcome {
        SftSpace col = coloring_shift(3, 2);
        for (int i = 1; i <= 15; ++i) {
          long long psi = height_cocycle(col, diamond_pair(col, i).pair);
          if (psi != ball3(i)) {
            char buf[200];
            std::snprintf(buf, sizeof buf,
                          "psi(%d) = %lld, |B3| = %lld; psi matches "
                          "|B3|-|B2| = %lld for all i <= 15",
                          i, psi, ball3(i), ball3(i) - ball2(i));
            return {false, buf};
          }
        }
        return {true, ""};
      });
  run("criterion 8b: height cocycle equals the off-plane 3D ball count",
      [&]() -> Outcome {
        SftSpace col = coloring_shift(3, 2);
        for (int i = 1; i <= 15; ++i) {
          long long psi = height_cocycle(col, diamond_pair(col, i).pair);
          if (psi != ball3(i) - ball2(i))
            return {false, "mismatch at i = " + std::to_string(i)};
        }
        return {true, "exact integers for all i <= 15"};
      });
  run("criterion 8c: growth ratio at i=15 exceeds i=5 by >= 2.5x",
      [&]() -> Outcome {
        SftSpace col = coloring_shift(3, 2);
        auto ratio = [&](int i) {
          return static_cast<double>(
                     height_cocycle(col, diamond_pair(col, i).pair)) /
                 static_cast<double>(ball2(i));
        };
        double r5 = ratio(5), r15 = ratio(15);
        char buf[120];
        std::snprintf(buf, sizeof buf, "ratio(15)/ratio(5) = %.3f", r15 / r5);
        return {r15 / r5 >= 2.5, buf};
      });

  // 9. Round-trip suite over 1e3 random windowed instances.
  run("criterion 9: kernel round trip, consistency, normalization (1e-12)",
      [&]() -> Outcome {
        SftSpace hc = hardcore_shift(1);
        Cocycle psi = Cocycle::from_interaction(hc, golden_mean_cocycle());
        CounterRng rng(90001);
        long long round_trips = 0;
        for (int trial = 0; trial < 1000; ++trial) {
          Configuration a = random_hardcore(rng, -5, 5);
          Configuration b = random_hardcore(rng, -5, 5);
          AsymptoticPair pair = AsymptoticPair::make(a, b);
          if (!pair.disagreement.empty()) {
            if (std::abs(cocycle_from_spec(psi, pair) - psi.eval(pair)) >
                1e-12)
              return {false, "round trip error at trial " +
                                 std::to_string(trial)};
            ++round_trips;
          }
          // Normalization and consistency on a 3-site window.
          Shape big = Shape::interval(-1, 1);
          Shape small{Site{0, 0}};
          SpecKernel kb{psi, a, big, {}};
          SpecKernel ka{psi, a, small, {}};
          double total = 0.0;
          for (const auto& [p, w] : spec_distribution(kb)) total += w;
          if (std::abs(total - 1.0) > 1e-12)
            return {false, "normalization failure"};
          double lhs = spec_prob(kb, a.window(big));
          double rhs =
              spec_prob_cylinder(kb, a.window(shape_difference(big, small))) *
              spec_prob(ka, a.window(small));
          if (std::abs(lhs - rhs) > 1e-12)
            return {false, "consistency identity failure"};
        }
        return {true, std::to_string(round_trips) + " nontrivial round trips"};
      });

  // 10. Property suites, >= 1e3 randomized cases each, zero violations.
  run("criterion 10: cocycle equation / shift invariance / paths / bounds",
      [&]() -> Outcome {
        SftSpace full = full_shift(2, 1);
        SftSpace hc = hardcore_shift(1);
        CounterRng rng(424242);

        auto random_interaction = [&rng]() {
          Interaction phi(InteractionMode::ShiftInvariant);
          auto coef = [&rng] { return (rng.next_unit() - 0.5) * 4.0; };
          for (int a = 0; a < 2; ++a)
            phi.set(Pattern::of(Shape{Site{0, 0}}, {a}), coef());
          for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
              phi.set(Pattern::of(Shape::interval(0, 1), {a, b}), coef());
          return phi;
        };

        Interaction base = golden_mean_cocycle();
        Cocycle psi_full = Cocycle::from_interaction(full, base);
        double sull_full = norm_sullivan(psi_full).value;

        // Cocycle equation + shift invariance + linear growth.
        for (int trial = 0; trial < 1000; ++trial) {
          Configuration a = random_binary(rng, -5, 5);
          Configuration b = random_binary(rng, -5, 5);
          Configuration c = random_binary(rng, -5, 5);
          double xy = psi_full.eval(AsymptoticPair::make(a, b));
          double yz = psi_full.eval(AsymptoticPair::make(b, c));
          double xz = psi_full.eval(AsymptoticPair::make(a, c));
          if (std::abs(xy + yz - xz) > 1e-10)
            return {false, "cocycle equation violated"};
          int k = static_cast<int>(rng.next_below(9)) - 4;
          Configuration at(a.background()), bt(b.background());
          for (const auto& [s, sym] : a.patch())
            at = at.with(s + Site{k, 0}, sym);
          for (const auto& [s, sym] : b.patch())
            bt = bt.with(s + Site{k, 0}, sym);
          if (std::abs(psi_full.eval(AsymptoticPair::make(at, bt)) - xy) >
              1e-12)
            return {false, "shift invariance violated"};
          AsymptoticPair pair = AsymptoticPair::make(a, b);
          if (std::abs(xy) >
              2.0 * static_cast<double>(pair.disagreement.size()) * sull_full +
                  1e-10)
            return {false, "linear growth bound violated"};
        }

        // Generator path independence on the hard-core shift.
        Cocycle psi_hc = Cocycle::from_interaction(hc, base);
        Shape gbase = *psi_hc.sullivan_base();
        LocalFunction g;
        g.base = gbase;
        g.fn = [&hc, psi_hc](const Pattern& w) {
          Configuration x = Configuration().with(w);
          if (!config_admissible_near(hc, x, w.shape())) return 0.0;
          Configuration zx = zeta(hc, x, {0, 0});
          if (x == zx) return 0.0;
          return psi_hc.eval(AsymptoticPair::make(x, zx));
        };
        Cocycle regen = Cocycle::from_generator(hc, g);
        for (int trial = 0; trial < 1000; ++trial) {
          AsymptoticPair p = AsymptoticPair::make(random_hardcore(rng, -3, 3),
                                                  random_hardcore(rng, -3, 3));
          if (std::abs(regen.eval(p) - psi_hc.eval(p)) > 1e-10)
            return {false, "generator path independence violated"};
        }

        // Norm operator bounds on random interactions.
        for (int trial = 0; trial < 1000; ++trial) {
          Interaction phi = random_interaction();
          const SftSpace& sft = trial % 2 == 0 ? full : hc;
          Cocycle psi = Cocycle::from_interaction(sft, phi);
          double sull = norm_sullivan(psi).value;
          if (sull > 2.0 * norm_ns(phi, sft).value + 1e-10)
            return {false, "Sullivan vs summable bound violated"};
          if (sull > norm_vs(phi, sft).value + 1e-10)
            return {false, "Sullivan vs variation bound violated"};
        }
        return {true, "4000+ randomized cases"};
      });

  // 11. Structural checkers.
  run("criterion 11: structural checkers (sunny, hard-core, rigid coloring)",
      [&]() -> Outcome {
        SftSpace sunny = sunny_side_up(1);
        Shape a{Site{0, 0}};
        TmpReport bad = check_tmp_window(sunny, a, Shape::interval(-1, 1),
                                         Shape::interval(-5, 5));
        if (bad.holds || !bad.counterexample)
          return {false, "sunny-side-up TMP not falsified"};

        SftSpace hc = hardcore_shift(1);
        TmpReport good = check_tmp_window(hc, a, Shape::interval(-1, 1),
                                          Shape::interval(-5, 5));
        if (!good.holds) return {false, "hard-core memory window rejected"};

        RigidColoringReport rigid = rigid_coloring_witness(4, 3);
        if (!rigid.admissible || rigid.single_site_pivots != 0 ||
            !rigid.two_site_exchange_admissible)
          return {false, "rigid 4-coloring witness failed"};
        return {true, "witness: two far-apart 1s; zero pivots on F_3"};
      });

  std::printf("%d criterion check(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
