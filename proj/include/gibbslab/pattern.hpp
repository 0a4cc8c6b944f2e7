// Finite patterns: symbol assignments on finite shapes, with restrict/join.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gibbslab/geometry.hpp"

namespace gibbslab {

using Symbol = std::uint8_t;

class Pattern {
 public:
  Pattern() = default;
  Pattern(Shape shape, std::vector<Symbol> symbols);

  static Pattern constant(const Shape& shape, Symbol a);
  // Symbols listed in the shape's canonical (sorted) site order.
  static Pattern of(const Shape& shape, std::initializer_list<int> symbols);

  const Shape& shape() const { return shape_; }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }

  Symbol at(Site s) const { return symbols_[shape_.index_of(s)]; }
  void set(Site s, Symbol a) { symbols_[shape_.index_of(s)] = a; }

  Pattern restricted(const Shape& sub) const;
  Pattern translated(Site t) const;
  // Translation class representative: min site at the origin.
  Pattern normalized() const { return translated(-shape_.min_site()); }

  // Symbols in canonical site order, as raw bytes. Used as a map key.
  std::string key() const { return std::string(symbols_.begin(), symbols_.end()); }

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  Shape shape_;
  std::vector<Symbol> symbols_;
};

// u ∨ v; empty optional when the overlap disagrees.
std::optional<Pattern> join(const Pattern& u, const Pattern& v);

}  // namespace gibbslab
