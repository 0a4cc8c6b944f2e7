// Configurations: periodic background plus a finite override patch.
#pragma once

#include <map>

#include "gibbslab/pattern.hpp"

namespace gibbslab {

// Axis-periodic background: the cell covers the box [0,px) x [0,py).
struct Background {
  Site period{1, 1};
  Pattern cell;

  static Background uniform(Symbol a);
  Symbol at(Site s) const;
  friend bool operator==(const Background&, const Background&) = default;
};

class Configuration {
 public:
  Configuration() : background_(Background::uniform(0)) {}
  explicit Configuration(Background bg) : background_(std::move(bg)) {}

  const Background& background() const { return background_; }
  const std::map<Site, Symbol>& patch() const { return patch_; }

  Symbol at(Site s) const;
  Pattern window(const Shape& shape) const;
  Shape patch_support() const;

  Configuration with(Site s, Symbol a) const;
  Configuration with(const Pattern& p) const;
  // Drop patch entries that merely repeat the background.
  Configuration compacted() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  Background background_;
  std::map<Site, Symbol> patch_;
};

struct AsymptoticPair {
  Configuration left;
  Configuration right;
  Shape disagreement;

  static AsymptoticPair make(Configuration l, Configuration r);
};

}  // namespace gibbslab
