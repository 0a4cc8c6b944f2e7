// Integer lattice geometry: sites, finite shapes and their set arithmetic.
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace gibbslab {

// A lattice site. Dimension 1 uses y == 0 throughout.
struct Site {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Site&, const Site&) = default;
};

inline Site operator+(Site a, Site b) { return {a.x + b.x, a.y + b.y}; }
inline Site operator-(Site a, Site b) { return {a.x - b.x, a.y - b.y}; }
inline Site operator-(Site a) { return {-a.x, -a.y}; }

inline int norm1(Site a) { return std::abs(a.x) + std::abs(a.y); }

std::string to_string(Site s, int dimension);

// A finite set of sites, kept sorted and duplicate-free (lexicographic order).
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<Site> sites);
  Shape(std::initializer_list<Site> sites) : Shape(std::vector<Site>(sites)) {}

  static Shape interval(int lo, int hi);          // 1D [lo, hi]
  static Shape box(Site lo, Site hi);             // 2D product of intervals
  static Shape ball1(int radius, int dimension);  // {s : ||s||_1 <= radius}

  const std::vector<Site>& sites() const { return sites_; }
  std::size_t size() const { return sites_.size(); }
  bool empty() const { return sites_.empty(); }
  bool contains(Site s) const;
  // Index of s in the sorted site list; caller must ensure membership.
  std::size_t index_of(Site s) const;

  Shape translated(Site t) const;
  // Translate so the lexicographically minimal site sits at the origin.
  Shape normalized(Site* shift = nullptr) const;

  Site min_site() const { return sites_.front(); }
  Site max_site() const { return sites_.back(); }
  // Bounding box corners and L-infinity diameter.
  Site bound_lo() const;
  Site bound_hi() const;
  int diameter() const;

  bool subset_of(const Shape& other) const;
  friend auto operator<=>(const Shape&, const Shape&) = default;

 private:
  std::vector<Site> sites_;
};

Shape shape_union(const Shape& a, const Shape& b);
Shape shape_difference(const Shape& a, const Shape& b);
Shape shape_intersection(const Shape& a, const Shape& b);
// Minkowski operations: a + b and a + (-b).
Shape minkowski_sum(const Shape& a, const Shape& b);
Shape minkowski_diff(const Shape& a, const Shape& b);
// shape + box of L-infinity radius `r` (restricted to the lattice dimension).
Shape dilate(const Shape& a, int r, int dimension);

}  // namespace gibbslab
