#include "doctest.h"

#include <cmath>

#include "gibbslab/cocycle.hpp"
#include "gibbslab/rng.hpp"
#include "gibbslab/speckernel.hpp"
#include "gibbslab/zoo.hpp"

using namespace gibbslab;

namespace {

// Independent oracle: sum Φ(y_C) − Φ(x_C) over every placement of every entry
// shape anchored in a wide window, by direct window extraction.
double brute_interaction_eval(const Interaction& phi, const AsymptoticPair& p,
                              int radius) {
  double sum = 0.0;
  for (const auto& [shape, table] : phi.entries()) {
    if (phi.mode() == InteractionMode::SiteIndexed) {
      sum += phi.value(p.right.window(shape)) - phi.value(p.left.window(shape));
      continue;
    }
    for (int t = -radius; t <= radius; ++t) {
      Shape c = shape.translated({t, 0});
      sum += phi.value(p.right.window(c)) - phi.value(p.left.window(c));
    }
  }
  return sum;
}

Configuration random_binary(CounterRng& rng, int lo, int hi) {
  Configuration x;
  for (int s = lo; s <= hi; ++s)
    if (rng.next_bit()) x = x.with({s, 0}, 1);
  return x;
}

Configuration random_hardcore(CounterRng& rng, int lo, int hi) {
  Configuration x;
  for (int s = lo; s <= hi; ++s)
    if (rng.next_bit() && x.at({s - 1, 0}) == 0) x = x.with({s, 0}, 1);
  return x;
}

Configuration translate(const Configuration& x, Site t) {
  Configuration out(x.background());  // uniform backgrounds only
  for (const auto& [s, a] : x.patch()) out = out.with(s + t, a);
  return out;
}

Interaction nn_field(double h, double j10, double j01) {
  Interaction phi(InteractionMode::ShiftInvariant);
  phi.set(Pattern::of(Shape{Site{0, 0}}, {1}), h);
  phi.set(Pattern::of(Shape::interval(0, 1), {1, 0}), j10);
  phi.set(Pattern::of(Shape::interval(0, 1), {0, 1}), j01);
  return phi;
}

}  // namespace

TEST_CASE("interaction cocycle evaluation") {
  SftSpace full = full_shift(2, 1);
  Cocycle zero = Cocycle::zero(full);
  Configuration x;
  Configuration y = x.with({0, 0}, 1);
  AsymptoticPair pair = AsymptoticPair::make(x, y);
  CHECK(zero.eval(pair) == 0.0);

  // Single-site field: flipping one 0 -> 1 costs h.
  Interaction field(InteractionMode::ShiftInvariant);
  field.set(Pattern::of(Shape{Site{0, 0}}, {1}), 0.75);
  Cocycle psi = Cocycle::from_interaction(full, field);
  CHECK(psi.eval(pair) == doctest::Approx(0.75).epsilon(1e-14));

  // Hard-core nearest-neighbour interaction vs the brute-force oracle.
  SftSpace hc = hardcore_shift(1);
  Interaction nn = nn_field(1.0, 0.5, -0.25);
  Cocycle pnn = Cocycle::from_interaction(hc, nn);
  Configuration hx = Configuration().with({1, 0}, 1);
  AsymptoticPair hpair = AsymptoticPair::make(hx, Configuration());
  CHECK(pnn.eval(hpair) ==
        doctest::Approx(brute_interaction_eval(nn, hpair, 8)).epsilon(1e-12));

  CounterRng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    AsymptoticPair p = AsymptoticPair::make(random_hardcore(rng, -4, 4),
                                            random_hardcore(rng, -4, 4));
    CHECK(pnn.eval(p) ==
          doctest::Approx(brute_interaction_eval(nn, p, 10)).epsilon(1e-12));
  }
}

TEST_CASE("cocycle equation and shift invariance") {
  SftSpace full = full_shift(2, 1);
  Interaction nn = nn_field(0.3, -1.2, 0.7);
  Cocycle psi = Cocycle::from_interaction(full, nn);
  CounterRng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    Configuration a = random_binary(rng, -4, 4);
    Configuration b = random_binary(rng, -4, 4);
    Configuration c = random_binary(rng, -4, 4);
    double xy = psi.eval(AsymptoticPair::make(a, b));
    double yz = psi.eval(AsymptoticPair::make(b, c));
    double xz = psi.eval(AsymptoticPair::make(a, c));
    CHECK(std::abs(xy + yz - xz) <= 1e-10);

    int k = static_cast<int>(rng.next_below(9)) - 4;
    double shifted = psi.eval(AsymptoticPair::make(translate(a, {k, 0}),
                                                   translate(b, {k, 0})));
    CHECK(shifted == doctest::Approx(xy).epsilon(1e-12));
  }
}

TEST_CASE("generator cocycles agree with their source") {
  // g(x) = psi(x, zeta_0 x) regenerates psi along pivot paths.
  SftSpace hc = hardcore_shift(1);
  Interaction nn = nn_field(1.0, 0.5, -0.25);
  Cocycle psi = Cocycle::from_interaction(hc, nn);

  Shape base = *psi.sullivan_base();
  LocalFunction g;
  g.base = base;
  g.fn = [&hc, psi](const Pattern& w) {
    Configuration x = Configuration().with(w);
    if (!config_admissible_near(hc, x, w.shape())) return 0.0;
    Configuration zx = zeta(hc, x, {0, 0});
    if (x == zx) return 0.0;
    return psi.eval(AsymptoticPair::make(x, zx));
  };
  Cocycle regen = Cocycle::from_generator(hc, g);

  CounterRng rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    AsymptoticPair p = AsymptoticPair::make(random_hardcore(rng, -3, 3),
                                            random_hardcore(rng, -3, 3));
    CHECK(std::abs(regen.eval(p) - psi.eval(p)) <= 1e-10);
  }

  // Path independence: evaluate along a second, manually built path.
  for (int trial = 0; trial < 100; ++trial) {
    AsymptoticPair p = AsymptoticPair::make(random_hardcore(rng, -3, 3),
                                            random_hardcore(rng, -3, 3));
    double via_impl = regen.eval(p);
    // Reverse-order safe sweep.
    double via_manual = 0.0;
    Configuration z = p.left;
    std::vector<std::pair<Site, Symbol>> moves;
    auto sites = p.disagreement.sites();
    for (auto it = sites.rbegin(); it != sites.rend(); ++it)
      if (p.left.at(*it) != 0) moves.push_back({*it, 0});
    for (auto it = sites.rbegin(); it != sites.rend(); ++it)
      if (p.right.at(*it) != 0) moves.push_back({*it, p.right.at(*it)});
    for (auto [site, symbol] : moves) {
      Configuration next = z.with(site, symbol);
      auto window = [&](const Configuration& c) {
        return c.window(g.base.translated(site)).translated(-site);
      };
      via_manual += g.fn(window(z)) - g.fn(window(next));
      z = next;
    }
    CHECK(std::abs(via_impl - via_manual) <= 1e-10);
  }
}

TEST_CASE("pattern count cocycle") {
  SftSpace full = full_shift(2, 1);
  Pattern w = Pattern::of(Shape::interval(0, 1), {1, 0});
  Cocycle delta = Cocycle::pattern_count(full, w);

  auto brute = [&](const AsymptoticPair& p) {
    long long count = 0;
    for (int i = -12; i <= 12; ++i) {
      bool in_y = p.right.at({i, 0}) == 1 && p.right.at({i + 1, 0}) == 0;
      bool in_x = p.left.at({i, 0}) == 1 && p.left.at({i + 1, 0}) == 0;
      count += (in_y ? 1 : 0) - (in_x ? 1 : 0);
    }
    return count;
  };

  CounterRng rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    Configuration a = random_binary(rng, -5, 5);
    Configuration b = random_binary(rng, -5, 5);
    Configuration c = random_binary(rng, -5, 5);
    AsymptoticPair ab = AsymptoticPair::make(a, b);
    CHECK(*delta.eval_int(ab) == brute(ab));
    // Exact integer cocycle equation.
    CHECK(*delta.eval_int(ab) + *delta.eval_int(AsymptoticPair::make(b, c)) ==
          *delta.eval_int(AsymptoticPair::make(a, c)));
  }
}

TEST_CASE("specification kernels") {
  SftSpace hc = hardcore_shift(1);
  Cocycle zero = Cocycle::zero(hc);
  Shape site0{Site{0, 0}};

  // Boundary 0.0: both symbols admissible, uniform 1/2 each.
  SpecKernel k1{zero, Configuration(), site0, {}};
  auto dist1 = spec_distribution(k1);
  REQUIRE(dist1.size() == 2);
  for (const auto& [p, w] : dist1) CHECK(w == doctest::Approx(0.5));

  // Boundary 1.1: only the safe symbol remains.
  SpecKernel k2{
      zero, Configuration().with({-1, 0}, 1).with({1, 0}, 1), site0, {}};
  auto dist2 = spec_distribution(k2);
  REQUIRE(dist2.size() == 1);
  CHECK(dist2[0].first.at({0, 0}) == 0);
  CHECK(dist2[0].second == doctest::Approx(1.0));

  // Ising-type field on the full shift: hand-computed Z.
  SftSpace full = full_shift(2, 1);
  Interaction field(InteractionMode::ShiftInvariant);
  field.set(Pattern::of(Shape{Site{0, 0}}, {1}), 1.5);
  Cocycle psi = Cocycle::from_interaction(full, field);
  SpecKernel k3{psi, Configuration(), site0, {}};
  double z = 1.0 + std::exp(-1.5);
  CHECK(spec_prob(k3, Pattern::of(site0, {0})) == doctest::Approx(1.0 / z));
  CHECK(spec_prob(k3, Pattern::of(site0, {1})) ==
        doctest::Approx(std::exp(-1.5) / z));

  // Normalization and positivity across random boundaries.
  Interaction nn = nn_field(0.8, -0.3, 0.45);
  Cocycle pnn = Cocycle::from_interaction(hc, nn);
  CounterRng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    Configuration boundary = random_hardcore(rng, -5, 5);
    SpecKernel k{pnn, boundary, Shape::interval(0, 1), {}};
    double total = 0.0;
    for (const auto& [p, w] : spec_distribution(k)) {
      CHECK(w > 0.0);
      total += w;
    }
    CHECK(std::abs(total - 1.0) <= 1e-12);
  }
}

TEST_CASE("cocycle -> specification -> cocycle round trip") {
  SftSpace hc = hardcore_shift(1);
  Cocycle zero = Cocycle::zero(hc);
  CounterRng rng(13);
  Configuration x = random_hardcore(rng, -4, 4);
  Configuration y = zeta(hc, x.with({0, 0}, 0), {2, 0});
  if (x == y) y = x.with({0, 0}, x.at({0, 0}) == 1 ? 0 : x.at({1, 0}) ? 0 : 1);
  AsymptoticPair pair = AsymptoticPair::make(x, y);
  if (!pair.disagreement.empty())
    CHECK(std::abs(cocycle_from_spec(zero, pair)) <= 1e-12);

  Interaction nn = nn_field(1.0, 0.5, -0.25);
  Cocycle psi = Cocycle::from_interaction(hc, nn);
  int checked = 0;
  for (int trial = 0; trial < 250; ++trial) {
    Configuration a = random_hardcore(rng, -4, 4);
    Configuration b = random_hardcore(rng, -4, 4);
    AsymptoticPair p = AsymptoticPair::make(a, b);
    if (p.disagreement.empty()) continue;
    CHECK(std::abs(cocycle_from_spec(psi, p) - psi.eval(p)) <= 1e-12);
    ++checked;
  }
  CHECK(checked > 150);

  // Consistency identity (iv) on a 3-site window.
  Shape big = Shape::interval(-1, 1);
  Shape small{Site{0, 0}};
  for (int trial = 0; trial < 100; ++trial) {
    Configuration x0 = random_hardcore(rng, -5, 5);
    SpecKernel kb{psi, x0, big, {}};
    SpecKernel ka{psi, x0, small, {}};
    double lhs = spec_prob(kb, x0.window(big));
    double rhs =
        spec_prob_cylinder(kb, x0.window(shape_difference(big, small))) *
        spec_prob(ka, x0.window(small));
    CHECK(std::abs(lhs - rhs) <= 1e-12);
  }

  // Annulus too small to decide admissibility.
  Pattern thin_annulus(Shape{Site{1, 0}}, {0});
  CHECK_THROWS_AS(make_kernel(psi, small, thin_annulus, Configuration()),
                  InputError);
  Pattern annulus(Shape{Site{-1, 0}, Site{1, 0}}, {0, 0});
  CHECK_NOTHROW(make_kernel(psi, small, annulus, Configuration()));
}

TEST_CASE("generator cocycles without a safe symbol") {
  // 1D 3-colorings: single-site pairs are direct pivot moves.
  SftSpace col = coloring_shift(3, 1);
  // The alternating 0-1 coloring leaves single-site slack (0 <-> 2).
  Background alt;
  alt.period = {2, 1};
  alt.cell = Pattern(Shape::interval(0, 1), {0, 1});
  Configuration base{alt};
  REQUIRE(configuration_admissible(col, base));

  Interaction phi(InteractionMode::ShiftInvariant);
  for (int a = 0; a < 3; ++a)
    phi.set(Pattern::of(Shape{Site{0, 0}}, {a}), 0.3 * a);
  Cocycle psi = Cocycle::from_interaction(col, phi);

  // g(x) = psi(x, zeta_0 x) written directly in window terms: zeta writes
  // the least color distinct from both neighbours.
  LocalFunction g;
  g.base = shape_union(*psi.sullivan_base(), Shape::interval(-1, 1));
  g.fn = [](const Pattern& w) {
    Symbol left = w.at({-1, 0}), mid = w.at({0, 0}), right = w.at({1, 0});
    Symbol least = 0;
    while (least == left || least == right) ++least;
    return 0.3 * (static_cast<double>(least) - static_cast<double>(mid));
  };
  Cocycle regen = Cocycle::from_generator(col, g);

  // Pairs produced by a single admissible change.
  CounterRng rng(61);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    int site = static_cast<int>(rng.next_below(5)) - 2;
    Symbol a = static_cast<Symbol>(rng.next_below(3));
    Configuration y = base.with({site, 0}, a).compacted();
    if (!config_admissible_near(col, y, Shape{Site{site, 0}})) continue;
    if (y == base) continue;
    AsymptoticPair p = AsymptoticPair::make(base, y);
    CHECK(std::abs(regen.eval(p) - psi.eval(p)) <= 1e-10);
    ++checked;
  }
  CHECK(checked > 0);

  // The frozen 4-coloring pair admits no pivot path: NoPath propagates.
  SftSpace col4 = coloring_shift(4, 2);
  Background frozen;
  frozen.period = {4, 4};
  Shape cell_box = Shape::box({0, 0}, {3, 3});
  std::vector<Symbol> cell;
  for (Site s : cell_box.sites())
    cell.push_back(static_cast<Symbol>(((s.x + 2 * s.y) % 4 + 4) % 4));
  frozen.cell = Pattern(cell_box, std::move(cell));
  Configuration rx{frozen};
  Configuration ry = rx.with({0, 0}, rx.at({1, 0})).with({1, 0}, rx.at({0, 0}));
  LocalFunction g4;
  g4.base = Shape::box({-1, -1}, {1, 1});
  g4.fn = [](const Pattern&) { return 0.0; };
  Cocycle gen4 = Cocycle::from_generator(col4, g4);
  CHECK_THROWS_AS(gen4.eval(AsymptoticPair::make(rx, ry)), NoPathError);
}
