#include "gibbslab/cocycle.hpp"

#include <cmath>

namespace gibbslab {

namespace {

Shape origin_shape() { return Shape{Site{0, 0}}; }

struct ZeroCocycle final : CocycleImpl {
  double eval(const SftSpace&, const AsymptoticPair&) const override {
    return 0.0;
  }
  std::optional<long long> eval_int(const SftSpace&,
                                    const AsymptoticPair&) const override {
    return 0;
  }
  std::optional<Shape> markov_offsets() const override {
    return origin_shape();
  }
  std::optional<Shape> sullivan_base(const SftSpace&) const override {
    return origin_shape();
  }
};

struct InteractionCocycle final : CocycleImpl {
  Interaction phi;
  explicit InteractionCocycle(Interaction p) : phi(std::move(p)) {}

  double eval(const SftSpace&, const AsymptoticPair& pair) const override {
    return interaction_cocycle_eval(phi, pair);
  }
  bool shift_invariant() const override {
    return phi.mode() == InteractionMode::ShiftInvariant;
  }
  std::optional<Shape> markov_offsets() const override {
    Shape offsets = origin_shape();
    for (const auto& [shape, table] : phi.entries())
      offsets = shape_union(offsets, minkowski_diff(shape, shape));
    return offsets;
  }
  std::optional<Shape> reads(const Shape& region) const override {
    Shape out = region;
    for (const Shape& c : placements_meeting(phi, region))
      out = shape_union(out, c);
    return out;
  }
  std::optional<Shape> sullivan_base(const SftSpace& sft) const override {
    if (phi.mode() != InteractionMode::ShiftInvariant) return std::nullopt;
    Shape base = shape_union(origin_shape(), sft.memory_offsets());
    for (const auto& [shape, table] : phi.entries())
      base = shape_union(base, minkowski_diff(shape, shape));
    return base;
  }
};

struct LocalSumCocycle final : CocycleImpl {
  LocalFunction g;
  explicit LocalSumCocycle(LocalFunction f) : g(std::move(f)) {}

  // Shifts j with (base + j) meeting the disagreement.
  Shape shifts(const AsymptoticPair& pair) const {
    return minkowski_diff(pair.disagreement, g.base);
  }
  double eval(const SftSpace&, const AsymptoticPair& pair) const override {
    double sum = 0.0;
    Shape window = shifts(pair);
    for (Site j : window.sites())
      sum += g.at(pair.right, j) - g.at(pair.left, j);
    return sum;
  }
  std::optional<long long> eval_int(const SftSpace&,
                                    const AsymptoticPair& pair) const override {
    if (!g.fn_int) return std::nullopt;
    long long sum = 0;
    Shape window = shifts(pair);
    for (Site j : window.sites())
      sum += g.at_int(pair.right, j) - g.at_int(pair.left, j);
    return sum;
  }
  std::optional<Shape> markov_offsets() const override {
    return shape_union(origin_shape(), minkowski_diff(g.base, g.base));
  }
  std::optional<Shape> sullivan_base(const SftSpace& sft) const override {
    return shape_union(
        shape_union(origin_shape(), sft.memory_offsets()),
        minkowski_diff(g.base, g.base));
  }
};

struct GeneratorCocycle final : CocycleImpl {
  LocalFunction g;
  int search_margin;
  GeneratorCocycle(LocalFunction f, int margin)
      : g(std::move(f)), search_margin(margin) {}

  std::vector<std::pair<Site, Symbol>> path(const SftSpace& sft,
                                            const AsymptoticPair& pair) const {
    std::vector<std::pair<Site, Symbol>> moves;
    if (sft.asserted().safe_symbol) {
      Symbol safe = *sft.asserted().safe_symbol;
      for (Site s : pair.disagreement.sites())
        if (pair.left.at(s) != safe) moves.push_back({s, safe});
      for (Site s : pair.disagreement.sites())
        if (pair.right.at(s) != safe) moves.push_back({s, pair.right.at(s)});
      return moves;
    }
    int margin = search_margin >= 0 ? search_margin
                                    : sft.constraint_radius() + 1;
    Shape box = Shape::box(pair.disagreement.bound_lo() - Site{margin, margin},
                           pair.disagreement.bound_hi() + Site{margin, margin});
    if (sft.dimension() == 1)
      box = Shape::interval(pair.disagreement.bound_lo().x - margin,
                            pair.disagreement.bound_hi().x + margin);
    for (const PivotMove& m : pivot_path(sft, pair, box))
      moves.push_back({m.site, m.symbol});
    return moves;
  }

  double eval(const SftSpace& sft, const AsymptoticPair& pair) const override {
    double sum = 0.0;
    Configuration z = pair.left;
    for (auto [site, symbol] : path(sft, pair)) {
      Configuration next = z.with(site, symbol);
      sum += g.at(z, site) - g.at(next, site);
      z = std::move(next);
    }
    return sum;
  }
  std::optional<Shape> sullivan_base(const SftSpace& sft) const override {
    return shape_union(shape_union(origin_shape(), sft.memory_offsets()),
                       g.base);
  }
};

struct PatternCountCocycle final : CocycleImpl {
  Pattern w;
  explicit PatternCountCocycle(Pattern p) : w(std::move(p)) {}

  long long count_diff(const AsymptoticPair& pair) const {
    long long sum = 0;
    Shape anchors = minkowski_diff(pair.disagreement, w.shape());
    for (Site j : anchors.sites()) {
      Shape window = w.shape().translated(j);
      bool in_y = pair.right.window(window).translated(-j) == w;
      bool in_x = pair.left.window(window).translated(-j) == w;
      sum += (in_y ? 1 : 0) - (in_x ? 1 : 0);
    }
    return sum;
  }
  double eval(const SftSpace&, const AsymptoticPair& pair) const override {
    return static_cast<double>(count_diff(pair));
  }
  std::optional<long long> eval_int(const SftSpace&,
                                    const AsymptoticPair& pair) const override {
    return count_diff(pair);
  }
  std::optional<Shape> markov_offsets() const override {
    return shape_union(origin_shape(),
                       minkowski_diff(w.shape(), w.shape()));
  }
  std::optional<Shape> sullivan_base(const SftSpace& sft) const override {
    return shape_union(shape_union(origin_shape(), sft.memory_offsets()),
                       minkowski_diff(w.shape(), w.shape()));
  }
};

struct CombinationCocycle final : CocycleImpl {
  std::vector<std::pair<double, Cocycle>> terms;

  double eval(const SftSpace&, const AsymptoticPair& pair) const override {
    double sum = 0.0;
    for (const auto& [c, psi] : terms) sum += c * psi.eval(pair);
    return sum;
  }
  bool shift_invariant() const override {
    for (const auto& [c, psi] : terms)
      if (!psi.shift_invariant()) return false;
    return true;
  }
  std::optional<Shape> markov_offsets() const override {
    Shape offsets = origin_shape();
    for (const auto& [c, psi] : terms) {
      auto o = psi.markov_offsets();
      if (!o) return std::nullopt;
      offsets = shape_union(offsets, *o);
    }
    return offsets;
  }
  std::optional<Shape> reads(const Shape& region) const override {
    Shape out = region;
    for (const auto& [c, psi] : terms) {
      auto r = psi.reads_for(region);
      if (!r) return std::nullopt;
      out = shape_union(out, *r);
    }
    return out;
  }
  std::optional<Shape> sullivan_base(const SftSpace&) const override {
    Shape base = origin_shape();
    for (const auto& [c, psi] : terms) {
      auto b = psi.sullivan_base();
      if (!b) return std::nullopt;
      base = shape_union(base, *b);
    }
    return base;
  }
};

}  // namespace

Cocycle Cocycle::from_impl(const SftSpace& sft,
                           std::shared_ptr<const CocycleImpl> impl) {
  Cocycle c;
  c.sft_ = &sft;
  c.impl_ = std::move(impl);
  return c;
}

Cocycle Cocycle::zero(const SftSpace& sft) {
  return from_impl(sft, std::make_shared<ZeroCocycle>());
}

Cocycle Cocycle::from_interaction(const SftSpace& sft, Interaction phi) {
  return from_impl(sft, std::make_shared<InteractionCocycle>(std::move(phi)));
}

Cocycle Cocycle::from_generator(const SftSpace& sft, LocalFunction g,
                                int search_margin) {
  return from_impl(
      sft, std::make_shared<GeneratorCocycle>(std::move(g), search_margin));
}

Cocycle Cocycle::local_sum(const SftSpace& sft, LocalFunction phi) {
  return from_impl(sft, std::make_shared<LocalSumCocycle>(std::move(phi)));
}

Cocycle Cocycle::pattern_count(const SftSpace& sft, Pattern w) {
  if (sft.dimension() != 1)
    throw InputError("pattern_count: one-dimensional only");
  return from_impl(sft, std::make_shared<PatternCountCocycle>(std::move(w)));
}

double Cocycle::eval(const AsymptoticPair& pair) const {
  return impl_->eval(*sft_, pair);
}

std::optional<long long> Cocycle::eval_int(const AsymptoticPair& pair) const {
  return impl_->eval_int(*sft_, pair);
}

bool Cocycle::shift_invariant() const { return impl_->shift_invariant(); }

std::optional<Shape> Cocycle::markov_offsets() const {
  return impl_->markov_offsets();
}

std::optional<Shape> Cocycle::reads_for(const Shape& region) const {
  return impl_->reads(region);
}

std::optional<Shape> Cocycle::sullivan_base() const {
  return impl_->sullivan_base(*sft_);
}

Cocycle Cocycle::scaled(double factor) const {
  auto combo = std::make_shared<CombinationCocycle>();
  combo->terms.push_back({factor, *this});
  Cocycle out = from_impl(*sft_, combo);
  if (modulus) {
    double f = std::abs(factor);
    auto m = modulus;
    out.modulus = [f, m](int r) { return f * m(r); };
  }
  return out;
}

Cocycle operator+(const Cocycle& a, const Cocycle& b) {
  auto combo = std::make_shared<CombinationCocycle>();
  combo->terms.push_back({1.0, a});
  combo->terms.push_back({1.0, b});
  Cocycle out = Cocycle::from_impl(a.space(), combo);
  if (a.modulus && b.modulus) {
    auto ma = a.modulus, mb = b.modulus;
    out.modulus = [ma, mb](int r) { return ma(r) + mb(r); };
  }
  return out;
}

Cocycle operator-(const Cocycle& a, const Cocycle& b) {
  auto combo = std::make_shared<CombinationCocycle>();
  combo->terms.push_back({1.0, a});
  combo->terms.push_back({-1.0, b});
  Cocycle out = Cocycle::from_impl(a.space(), combo);
  if (a.modulus && b.modulus) {
    auto ma = a.modulus, mb = b.modulus;
    out.modulus = [ma, mb](int r) { return ma(r) + mb(r); };
  }
  return out;
}

}  // namespace gibbslab
