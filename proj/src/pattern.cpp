#include "gibbslab/pattern.hpp"

#include <stdexcept>

namespace gibbslab {

Pattern::Pattern(Shape shape, std::vector<Symbol> symbols)
    : shape_(std::move(shape)), symbols_(std::move(symbols)) {
  if (shape_.size() != symbols_.size())
    throw std::invalid_argument("Pattern: shape/symbol size mismatch");
}

Pattern Pattern::constant(const Shape& shape, Symbol a) {
  return Pattern(shape, std::vector<Symbol>(shape.size(), a));
}

Pattern Pattern::of(const Shape& shape, std::initializer_list<int> symbols) {
  std::vector<Symbol> s;
  s.reserve(symbols.size());
  for (int v : symbols) s.push_back(static_cast<Symbol>(v));
  return Pattern(shape, std::move(s));
}

Pattern Pattern::restricted(const Shape& sub) const {
  std::vector<Symbol> s;
  s.reserve(sub.size());
  for (Site p : sub.sites()) s.push_back(at(p));
  return Pattern(sub, std::move(s));
}

Pattern Pattern::translated(Site t) const {
  return Pattern(shape_.translated(t), symbols_);
}

std::optional<Pattern> join(const Pattern& u, const Pattern& v) {
  Shape common = shape_intersection(u.shape(), v.shape());
  for (Site s : common.sites())
    if (u.at(s) != v.at(s)) return std::nullopt;
  Shape whole = shape_union(u.shape(), v.shape());
  std::vector<Symbol> joined;
  joined.reserve(whole.size());
  for (Site s : whole.sites())
    joined.push_back(u.shape().contains(s) ? u.at(s) : v.at(s));
  return Pattern(whole, std::move(joined));
}

}  // namespace gibbslab
