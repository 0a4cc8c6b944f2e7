// Interactions: finitely many pattern-energy tables, shift-invariant (keyed by
// translation-class representative) or site-indexed (absolute shapes).
#pragma once

#include <map>
#include <string>

#include "gibbslab/config.hpp"
#include "gibbslab/pattern.hpp"

namespace gibbslab {

enum class InteractionMode { ShiftInvariant, SiteIndexed };

class Interaction {
 public:
  Interaction() = default;
  explicit Interaction(InteractionMode mode) : mode_(mode) {}

  InteractionMode mode() const { return mode_; }
  bool empty() const { return entries_.empty(); }
  // shape -> (pattern key -> value); shapes normalized in shift-invariant mode.
  const std::map<Shape, std::map<std::string, double>>& entries() const {
    return entries_;
  }

  void set(const Pattern& w, double value);
  // Φ(w); zero when no table entry matches.
  double value(const Pattern& w) const;
  // Φ_C(x) = Φ(x_C).
  double value_at(const Configuration& x, const Shape& c) const {
    return value(x.window(c));
  }

  int range() const;  // max entry-shape diameter
  Interaction& operator+=(const Interaction& other);
  Interaction scaled(double factor) const;

 private:
  InteractionMode mode_ = InteractionMode::ShiftInvariant;
  std::map<Shape, std::map<std::string, double>> entries_;
};

// Placements C (with multiplicity one each) of the interaction's entry shapes
// that intersect `region`.
std::vector<Shape> placements_meeting(const Interaction& phi,
                                      const Shape& region);

// ψ_Φ over an asymptotic pair: Σ_C [Φ(y_C) − Φ(x_C)], summed over placements
// meeting the disagreement.
double interaction_cocycle_eval(const Interaction& phi,
                                const AsymptoticPair& pair);

}  // namespace gibbslab
