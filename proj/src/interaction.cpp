#include "gibbslab/interaction.hpp"

#include <set>

#include "gibbslab/errors.hpp"

namespace gibbslab {

void Interaction::set(const Pattern& w, double value) {
  if (w.empty()) throw InputError("Interaction::set: empty pattern");
  Pattern rep = mode_ == InteractionMode::ShiftInvariant ? w.normalized() : w;
  entries_[rep.shape()][rep.key()] = value;
}

double Interaction::value(const Pattern& w) const {
  if (w.empty()) return 0.0;
  Pattern rep = mode_ == InteractionMode::ShiftInvariant ? w.normalized() : w;
  auto it = entries_.find(rep.shape());
  if (it == entries_.end()) return 0.0;
  auto jt = it->second.find(rep.key());
  return jt == it->second.end() ? 0.0 : jt->second;
}

int Interaction::range() const {
  int r = 0;
  for (const auto& [shape, table] : entries_) r = std::max(r, shape.diameter());
  return r;
}

Interaction& Interaction::operator+=(const Interaction& other) {
  if (other.mode_ != mode_ && !other.empty() && !empty())
    throw InputError("Interaction: mixing shift-invariant and site-indexed");
  if (empty()) mode_ = other.mode_;
  for (const auto& [shape, table] : other.entries_)
    for (const auto& [key, v] : table) entries_[shape][key] += v;
  return *this;
}

Interaction Interaction::scaled(double factor) const {
  Interaction out(mode_);
  for (const auto& [shape, table] : entries_)
    for (const auto& [key, v] : table) out.entries_[shape][key] = v * factor;
  return out;
}

std::vector<Shape> placements_meeting(const Interaction& phi,
                                      const Shape& region) {
  // Divergence guard: range times disagreement must stay enumerable.
  constexpr std::size_t kMaxPlacements = 1u << 22;
  std::set<Shape> placements;
  for (const auto& [shape, table] : phi.entries()) {
    if (phi.mode() == InteractionMode::SiteIndexed) {
      if (!shape_intersection(shape, region).empty()) placements.insert(shape);
      continue;
    }
    Shape anchors = minkowski_diff(region, shape);
    for (Site t : anchors.sites()) {
      Shape c = shape.translated(t);
      if (!shape_intersection(c, region).empty()) placements.insert(c);
      if (placements.size() > kMaxPlacements)
        throw BudgetError("interaction evaluation: placement budget exceeded");
    }
  }
  return {placements.begin(), placements.end()};
}

double interaction_cocycle_eval(const Interaction& phi,
                                const AsymptoticPair& pair) {
  double sum = 0.0;
  for (const Shape& c : placements_meeting(phi, pair.disagreement))
    sum += phi.value(pair.right.window(c)) - phi.value(pair.left.window(c));
  return sum;
}

}  // namespace gibbslab
