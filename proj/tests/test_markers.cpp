#include "doctest.h"

#include <cmath>

#include "gibbslab/markers.hpp"
#include "gibbslab/norms.hpp"
#include "gibbslab/zoo.hpp"

using namespace gibbslab;

namespace {

int naive_ham_shifted(const BitWord& a, int j, const BitWord& b) {
  int n = a.length();
  int c = 0;
  for (int i = 0; i < n; ++i) {
    bool ai = (i + j >= 0 && i + j < n) && a.get(i + j);
    if (ai != b.get(i)) ++c;
  }
  return c;
}

MarkerData tiny_marker(int n, const std::string& u, const std::string& v) {
  MarkerData data;
  data.params.k = 2;
  data.params.n = n;
  data.params.epsilon = 0.5;
  data.u = BitWord::parse(u);
  data.v = BitWord::parse(v);
  return data;
}

}  // namespace

TEST_CASE("bit words") {
  CounterRng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng.next_below(150));
    BitWord a = BitWord::random(n, rng);
    BitWord b = BitWord::random(n, rng);
    CHECK(BitWord::parse(a.str()) == a);
    int pop = 0;
    for (int i = 0; i < n; ++i) pop += a.get(i);
    CHECK(a.popcount() == pop);
    for (int j = -n - 2; j <= n + 2; j += 3)
      CHECK(ham_shifted(a, j, b) == naive_ham_shifted(a, j, b));
    // Sliding one step equals the shifted window at offset 1.
    BitWord slid = a;
    slid.slide(false);
    CHECK(slid == a.window_from(1));
  }
}

TEST_CASE("delta counts and the prefix-sum oracle") {
  SftSpace full = full_shift(2, 1);
  CounterRng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 12;
    BitWord u = BitWord::random(n, rng);
    BitWord v = BitWord::random(n, rng);
    MarkerData data = tiny_marker(n, u.str(), v.str());
    AsymptoticPair pair = marker_pair(data);

    // delta over the whole line: (#1s in v) − (#1s in u) for w = "1".
    Pattern w1 = Pattern::of(Shape{Site{0, 0}}, {1});
    CHECK(delta_count(w1, pair) == v.popcount() - u.popcount());
    CHECK(delta_count(w1, pair) == 0 - delta_count(w1, AsymptoticPair::make(
                                            pair.right, pair.left)));

    // Max over intervals equals the brute-force maximum over all O(n²)
    // intervals, for every small shape and word.
    for (const std::vector<int>& offs :
         std::vector<std::vector<int>>{{0}, {0, 1}, {0, 3}}) {
      std::vector<Site> sites;
      for (int o : offs) sites.push_back({o, 0});
      Shape d{std::vector<Site>(sites)};
      for (int bits = 0; bits < (1 << offs.size()); ++bits) {
        std::vector<Symbol> syms;
        for (std::size_t t = 0; t < offs.size(); ++t)
          syms.push_back((bits >> t) & 1);
        Pattern w(d, syms);
        long long brute = 0;
        for (int lo = -2 * n; lo <= 2 * n; ++lo)
          for (int hi = lo; hi <= 2 * n; ++hi)
            brute = std::max(brute,
                             std::llabs(delta_count(w, lo, hi, pair)));
        // Oracle equality: the scan inside verify_markers reports the same
        // extremum via prefix sums; reproduce it through delta_count on the
        // full range plus cumulative tracking.
        long long prefix = 0, lo_p = 0, hi_p = 0;
        for (int i = -2 * n; i <= 2 * n; ++i) {
          prefix += delta_count(w, i, i, pair);
          lo_p = std::min(lo_p, prefix);
          hi_p = std::max(hi_p, prefix);
        }
        CHECK(brute == hi_p - lo_p);
      }
    }

    // Δ_w over the full line is a cocycle (exact integers).
    BitWord z = BitWord::random(n, rng);
    MarkerData dz = tiny_marker(n, u.str(), z.str());
    MarkerData dvz = tiny_marker(n, v.str(), z.str());
    Pattern w10 = Pattern::of(Shape::interval(0, 1), {1, 0});
    CHECK(delta_count(w10, pair) + delta_count(w10, marker_pair(dvz)) ==
          delta_count(w10, marker_pair(dz)));
  }
}

TEST_CASE("verify rejects the canonical bad pairs") {
  // u = v fails the Hamming condition immediately.
  MarkerParams p;
  p.k = 2;
  p.n = 16;
  p.epsilon = 0.5;
  BitWord u = BitWord::parse("1010110010110100");
  MarkerVerifyReport same = verify_markers(p, u, u);
  CHECK_FALSE(same.condition_a);
  CHECK(same.failure.find("Ham(u,v) = 0") != std::string::npos);

  // u = 0^n, v = 1^n: fails the count condition for w = "1" (|Δ| = n).
  MarkerParams q = p;
  q.delta = 0.9;  // let the Hamming side pass: need Ham > 0.05 n... all-ones
  BitWord zeros(16), ones(16);
  for (int i = 0; i < 16; ++i) ones.set(i, true);
  MarkerVerifyReport extreme = verify_markers(q, zeros, ones);
  CHECK_FALSE(extreme.passed());

  // Monotonicity: passing at (ε, δ) implies passing at larger slacks.
  MarkerParams loose;
  loose.k = 2;
  loose.n = 64;
  loose.delta = 0.5;
  loose.epsilon = 0.45;
  MarkerSearchReport found = search_markers(loose, 2000);
  REQUIRE(found.found);
  for (double eps2 : {0.6, 0.9}) {
    for (double delta2 : {0.5, 0.8}) {
      MarkerParams relaxed = loose;
      relaxed.epsilon = eps2;
      relaxed.delta = delta2;
      CHECK(verify_markers(relaxed, found.data.u, found.data.v).passed());
    }
  }
}

TEST_CASE("search finds certified pairs and is deterministic") {
  MarkerParams p;
  p.k = 2;
  p.n = 96;
  p.epsilon = 0.4;
  p.seed = 7;
  MarkerSearchReport a = search_markers(p, 50000, 1);
  REQUIRE(a.found);
  CHECK(a.data.certified.passed());
  CHECK(a.data.certified.full);

  // Same seed, different worker count: identical winner.
  MarkerSearchReport b = search_markers(p, 50000, 4);
  REQUIRE(b.found);
  CHECK(a.attempts == b.attempts);
  CHECK(a.data.u == b.data.u);
  CHECK(a.data.v == b.data.v);

  // Impossible target exhausts the budget: |Δ| >= 1 whenever nonzero.
  MarkerParams hopeless;
  hopeless.k = 2;
  hopeless.n = 4;
  hopeless.epsilon = 0.001;
  MarkerSearchReport fail = search_markers(hopeless, 300);
  CHECK_FALSE(fail.found);
}

TEST_CASE("clamp interaction and psi_k") {
  MarkerParams p;
  p.k = 2;
  p.n = 64;
  p.epsilon = 0.45;
  p.seed = 3;
  MarkerSearchReport found = search_markers(p, 20000);
  REQUIRE(found.found);
  const MarkerData& data = found.data;
  const int n = p.n;

  // Φ at the markers themselves.
  CHECK(marker_phi(data, data.u) == n);
  CHECK(marker_phi(data, data.v) == -n);
  // Far from both (random words are at distance ~ n/2).
  CounterRng rng(77);
  BitWord far = BitWord::random(n, rng);
  if (ham(far, data.u) > n / 16 && ham(far, data.v) > n / 16)
    CHECK(marker_phi(data, far) == 0);

  AsymptoticPair pair = marker_pair(data);
  CHECK(psi_k(data, pair) == -2 * n);
  CHECK(psi_k(data, AsymptoticPair::make(pair.left, pair.left)) == 0);

  // Cross-check against the generic local-sum evaluation, exact integers.
  SftSpace full = full_shift(2, 1);
  Cocycle generic = psi_k_cocycle(full, data);
  CHECK(*generic.eval_int(pair) == -2 * n);
  for (int trial = 0; trial < 20; ++trial) {
    Configuration a, b;
    for (int s = -8; s < n + 8; ++s) {
      if (rng.next_bit()) a = a.with({s, 0}, 1);
      if (rng.next_bit()) b = b.with({s, 0}, 1);
    }
    AsymptoticPair q = AsymptoticPair::make(a, b);
    CHECK(psi_k(data, q) == *generic.eval_int(q));
  }

  // Shift invariance of psi_k, exact.
  for (int trial = 0; trial < 20; ++trial) {
    Configuration a, b;
    for (int s = 0; s < n; ++s) {
      if (rng.next_bit()) a = a.with({s, 0}, 1);
      if (rng.next_bit()) b = b.with({s, 0}, 1);
    }
    int k = static_cast<int>(rng.next_below(17)) - 8;
    Configuration at, bt;
    for (const auto& [s, sym] : a.patch()) at = at.with(s + Site{k, 0}, sym);
    for (const auto& [s, sym] : b.patch()) bt = bt.with(s + Site{k, 0}, sym);
    CHECK(psi_k(data, AsymptoticPair::make(a, b)) ==
          psi_k(data, AsymptoticPair::make(at, bt)));
  }

  // Single-site pairs stay far below the structural bound.
  SampleCheckReport sull = marker_sullivan_sample(data, 2000, 11);
  CHECK(sull.passed);
  CHECK(sull.worst <= 68 * p.K_const);

  // ci1 and the safe interval.
  CHECK(check_ci1(data, 2000, 5).passed);
  SampleCheckReport safe = check_safe_interval(data, 500, 6);
  CHECK(safe.passed);
  CHECK(safe.samples > 0);
}

TEST_CASE("generic sampled Sullivan bound for the marker cocycle") {
  MarkerParams p;
  p.k = 2;
  p.n = 48;
  p.epsilon = 0.45;
  p.seed = 3;
  MarkerSearchReport found = search_markers(p, 20000);
  REQUIRE(found.found);
  SftSpace full = full_shift(2, 1);
  Cocycle psi = psi_k_cocycle(full, found.data);
  SullivanOptions opts;
  opts.exact = false;  // the dependence window is 2n-1 sites: sample
  opts.samples = 200;
  opts.seed = 99;
  NormReport report = norm_sullivan(psi, opts);
  CHECK(report.mode == NormMode::LowerBound);
  CHECK(report.value <= 544.0);
  // The fast bit-level sampler agrees on the bound.
  SampleCheckReport fast = marker_sullivan_sample(found.data, 200, 99);
  CHECK(fast.worst <= 544);
}

TEST_CASE("nonsurjectivity trend rows") {
  MarkerParams p;
  p.k = 2;
  p.n = 96;
  p.epsilon = 0.4;
  p.seed = 7;
  NonsurjectivityBudgets budgets;
  budgets.attempts = 50000;
  budgets.sull_samples = 3000;
  budgets.safe_samples = 500;
  auto rows = nonsurjectivity_report({p}, budgets);
  REQUIRE(rows.size() == 1);
  const auto& row = rows[0];
  REQUIRE(row.found);
  CHECK(row.psi_value == -2 * p.n);
  CHECK(row.dual_lower <= row.dual_bound);
  CHECK(row.sull_sample_max <= row.sull_bound);
  CHECK(row.safe_ok);
  CHECK(row.ok);
}
