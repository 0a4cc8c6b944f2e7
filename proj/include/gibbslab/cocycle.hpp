// Cocycles on the asymptotic relation: interaction-backed, generator-backed
// (pivot-path evaluation), pattern-count, and linear combinations.
#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "gibbslab/checkers.hpp"
#include "gibbslab/interaction.hpp"
#include "gibbslab/sft.hpp"

namespace gibbslab {

// A local observable: reads the pattern on `base` (translated windows for
// shifted evaluation). fn_int, when set, is the exact integer path.
struct LocalFunction {
  Shape base;
  std::function<double(const Pattern&)> fn;
  std::function<long long(const Pattern&)> fn_int;

  double at(const Configuration& x, Site shift) const {
    return fn(x.window(base.translated(shift)).translated(-shift));
  }
  long long at_int(const Configuration& x, Site shift) const {
    return fn_int(x.window(base.translated(shift)).translated(-shift));
  }
};

struct CocycleImpl {
  virtual ~CocycleImpl() = default;
  virtual double eval(const SftSpace& sft, const AsymptoticPair& pair) const = 0;
  virtual std::optional<long long> eval_int(const SftSpace&,
                                            const AsymptoticPair&) const {
    return std::nullopt;
  }
  virtual bool shift_invariant() const { return true; }
  virtual std::optional<Shape> markov_offsets() const { return std::nullopt; }
  // Exact dependence: sites whose symbols can influence ψ on T_region pairs.
  // Defaults to region ⊕ markov_offsets; interaction-backed cocycles return
  // the union of placements meeting the region.
  virtual std::optional<Shape> reads(const Shape& region) const {
    auto offsets = markov_offsets();
    if (!offsets) return std::nullopt;
    return minkowski_sum(region, *offsets);
  }
  virtual std::optional<Shape> sullivan_base(const SftSpace&) const {
    return std::nullopt;
  }
};

class Cocycle {
 public:
  Cocycle() = default;

  static Cocycle zero(const SftSpace& sft);
  static Cocycle from_interaction(const SftSpace& sft, Interaction phi);
  // ψ(x,y) = Σ_i [g(σ^{k_i} z^{(i-1)}) − g(σ^{k_i} z^{(i)})] along a pivot
  // path; safe-symbol spaces use the canonical two-sweep path, others BFS
  // within the disagreement hull dilated by `search_margin`.
  static Cocycle from_generator(const SftSpace& sft, LocalFunction g,
                                int search_margin = -1);
  // ψ_Φ for a single shift-invariant function-valued entry:
  // ψ(x,y) = Σ_j [Φ(σ^j y) − Φ(σ^j x)].
  static Cocycle local_sum(const SftSpace& sft, LocalFunction phi);
  // Δ_w: difference in the number of occurrences of w.
  static Cocycle pattern_count(const SftSpace& sft, Pattern w);
  static Cocycle from_impl(const SftSpace& sft,
                           std::shared_ptr<const CocycleImpl> impl);

  bool valid() const { return impl_ != nullptr; }
  const SftSpace& space() const { return *sft_; }

  double eval(const AsymptoticPair& pair) const;
  double operator()(const AsymptoticPair& pair) const { return eval(pair); }
  std::optional<long long> eval_int(const AsymptoticPair& pair) const;

  bool shift_invariant() const;
  std::optional<Shape> markov_offsets() const;
  // Exact window needed to evaluate ψ on pairs moving inside `region`.
  std::optional<Shape> reads_for(const Shape& region) const;
  std::optional<Shape> sullivan_base() const;

  Cocycle scaled(double factor) const;
  friend Cocycle operator+(const Cocycle& a, const Cocycle& b);
  friend Cocycle operator-(const Cocycle& a, const Cocycle& b);

  // Declared modulus of continuity: radius r -> bound on how much ψ can move
  // between pairs agreeing on the disagreement dilated by r. Used by the
  // approximate extension builder; absent means only Markov data is known.
  std::function<double(int)> modulus;

 private:
  const SftSpace* sft_ = nullptr;
  std::shared_ptr<const CocycleImpl> impl_;
};

}  // namespace gibbslab
