#include "gibbslab/geometry.hpp"

#include <cstdlib>
#include <set>
#include <stdexcept>

namespace gibbslab {

std::string to_string(Site s, int dimension) {
  if (dimension == 1) return "(" + std::to_string(s.x) + ")";
  return "(" + std::to_string(s.x) + "," + std::to_string(s.y) + ")";
}

Shape::Shape(std::vector<Site> sites) : sites_(std::move(sites)) {
  std::sort(sites_.begin(), sites_.end());
  sites_.erase(std::unique(sites_.begin(), sites_.end()), sites_.end());
}

Shape Shape::interval(int lo, int hi) {
  std::vector<Site> s;
  for (int i = lo; i <= hi; ++i) s.push_back({i, 0});
  return Shape(std::move(s));
}

Shape Shape::box(Site lo, Site hi) {
  std::vector<Site> s;
  for (int x = lo.x; x <= hi.x; ++x)
    for (int y = lo.y; y <= hi.y; ++y) s.push_back({x, y});
  return Shape(std::move(s));
}

Shape Shape::ball1(int radius, int dimension) {
  std::vector<Site> s;
  if (dimension == 1) {
    for (int x = -radius; x <= radius; ++x) s.push_back({x, 0});
  } else {
    for (int x = -radius; x <= radius; ++x)
      for (int y = -radius + std::abs(x); y <= radius - std::abs(x); ++y)
        s.push_back({x, y});
  }
  return Shape(std::move(s));
}

bool Shape::contains(Site s) const {
  return std::binary_search(sites_.begin(), sites_.end(), s);
}

std::size_t Shape::index_of(Site s) const {
  auto it = std::lower_bound(sites_.begin(), sites_.end(), s);
  return static_cast<std::size_t>(it - sites_.begin());
}

Shape Shape::translated(Site t) const {
  std::vector<Site> s;
  s.reserve(sites_.size());
  for (Site p : sites_) s.push_back(p + t);
  Shape out;
  out.sites_ = std::move(s);  // order preserved under translation
  return out;
}

Shape Shape::normalized(Site* shift) const {
  if (empty()) {
    if (shift) *shift = {0, 0};
    return *this;
  }
  Site t = -min_site();
  if (shift) *shift = t;
  return translated(t);
}

Site Shape::bound_lo() const {
  Site lo = sites_.front();
  for (Site s : sites_) {
    lo.x = std::min(lo.x, s.x);
    lo.y = std::min(lo.y, s.y);
  }
  return lo;
}

Site Shape::bound_hi() const {
  Site hi = sites_.front();
  for (Site s : sites_) {
    hi.x = std::max(hi.x, s.x);
    hi.y = std::max(hi.y, s.y);
  }
  return hi;
}

int Shape::diameter() const {
  if (empty()) return 0;
  Site lo = bound_lo(), hi = bound_hi();
  return std::max(hi.x - lo.x, hi.y - lo.y);
}

bool Shape::subset_of(const Shape& other) const {
  return std::includes(other.sites().begin(), other.sites().end(),
                       sites_.begin(), sites_.end());
}

Shape shape_union(const Shape& a, const Shape& b) {
  std::vector<Site> s;
  std::set_union(a.sites().begin(), a.sites().end(), b.sites().begin(),
                 b.sites().end(), std::back_inserter(s));
  return Shape(std::move(s));
}

Shape shape_difference(const Shape& a, const Shape& b) {
  std::vector<Site> s;
  std::set_difference(a.sites().begin(), a.sites().end(), b.sites().begin(),
                      b.sites().end(), std::back_inserter(s));
  return Shape(std::move(s));
}

Shape shape_intersection(const Shape& a, const Shape& b) {
  std::vector<Site> s;
  std::set_intersection(a.sites().begin(), a.sites().end(), b.sites().begin(),
                        b.sites().end(), std::back_inserter(s));
  return Shape(std::move(s));
}

Shape minkowski_sum(const Shape& a, const Shape& b) {
  std::set<Site> s;
  for (Site p : a.sites())
    for (Site q : b.sites()) s.insert(p + q);
  return Shape(std::vector<Site>(s.begin(), s.end()));
}

Shape minkowski_diff(const Shape& a, const Shape& b) {
  std::set<Site> s;
  for (Site p : a.sites())
    for (Site q : b.sites()) s.insert(p - q);
  return Shape(std::vector<Site>(s.begin(), s.end()));
}

Shape dilate(const Shape& a, int r, int dimension) {
  if (r == 0) return a;
  if (r < 0) throw std::invalid_argument("dilate: negative radius");
  Shape ball = (dimension == 1) ? Shape::interval(-r, r)
                                : Shape::box({-r, -r}, {r, r});
  return minkowski_sum(a, ball);
}

}  // namespace gibbslab
