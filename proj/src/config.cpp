#include "gibbslab/config.hpp"

#include <set>

#include "gibbslab/errors.hpp"

namespace gibbslab {

namespace {
int mod_floor(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}
}  // namespace

Background Background::uniform(Symbol a) {
  Background bg;
  bg.period = {1, 1};
  bg.cell = Pattern(Shape{{0, 0}}, {a});
  return bg;
}

Symbol Background::at(Site s) const {
  return cell.at({mod_floor(s.x, period.x), mod_floor(s.y, period.y)});
}

Symbol Configuration::at(Site s) const {
  auto it = patch_.find(s);
  return it != patch_.end() ? it->second : background_.at(s);
}

Pattern Configuration::window(const Shape& shape) const {
  std::vector<Symbol> symbols;
  symbols.reserve(shape.size());
  for (Site s : shape.sites()) symbols.push_back(at(s));
  return Pattern(shape, std::move(symbols));
}

Shape Configuration::patch_support() const {
  std::vector<Site> sites;
  sites.reserve(patch_.size());
  for (const auto& [s, a] : patch_) sites.push_back(s);
  return Shape(std::move(sites));
}

Configuration Configuration::with(Site s, Symbol a) const {
  Configuration out = *this;
  out.patch_[s] = a;
  return out;
}

Configuration Configuration::with(const Pattern& p) const {
  Configuration out = *this;
  for (Site s : p.shape().sites()) out.patch_[s] = p.at(s);
  return out;
}

Configuration Configuration::compacted() const {
  Configuration out(background_);
  for (const auto& [s, a] : patch_)
    if (a != background_.at(s)) out.patch_[s] = a;
  return out;
}

AsymptoticPair AsymptoticPair::make(Configuration l, Configuration r) {
  if (!(l.background() == r.background()))
    throw InputError("AsymptoticPair: backgrounds differ");
  std::set<Site> support;
  for (const auto& [s, a] : l.patch()) support.insert(s);
  for (const auto& [s, a] : r.patch()) support.insert(s);
  std::vector<Site> differ;
  for (Site s : support)
    if (l.at(s) != r.at(s)) differ.push_back(s);
  return AsymptoticPair{std::move(l), std::move(r), Shape(std::move(differ))};
}

}  // namespace gibbslab
