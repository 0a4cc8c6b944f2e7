#include "gibbslab/sft.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace gibbslab {

SftSpace::SftSpace(int dimension, std::vector<std::string> alphabet,
                   std::vector<Pattern> forbidden, Asserted asserted,
                   Family family)
    : dimension_(dimension),
      alphabet_(std::move(alphabet)),
      asserted_(asserted),
      family_(family) {
  if (dimension_ != 1 && dimension_ != 2)
    throw InputError("SftSpace: dimension must be 1 or 2");
  if (alphabet_.empty()) throw InputError("SftSpace: empty alphabet");
  forbidden_.reserve(forbidden.size());
  for (const Pattern& f : forbidden) {
    if (f.empty()) throw InputError("SftSpace: empty forbidden pattern");
    forbidden_.push_back(f.normalized());
  }
  std::vector<Site> all;
  for (const Pattern& f : forbidden_)
    for (Site s : f.shape().sites()) all.push_back(s);
  forbidden_union_ = Shape(std::move(all));
  if (!forbidden_union_.empty()) {
    memory_offsets_ = minkowski_diff(forbidden_union_, forbidden_union_);
    Site lo = memory_offsets_.bound_lo(), hi = memory_offsets_.bound_hi();
    constraint_radius_ = std::max({-lo.x, -lo.y, hi.x, hi.y});
  }
}

Symbol SftSpace::symbol_index(const std::string& name) const {
  for (std::size_t i = 0; i < alphabet_.size(); ++i)
    if (alphabet_[i] == name) return static_cast<Symbol>(i);
  throw InputError("unknown symbol '" + name + "'");
}

namespace {

bool sunny_count_ok(const Pattern& p) {
  int ones = 0;
  for (Symbol a : p.symbols())
    if (a == 1) ++ones;
  return ones <= 1;
}

// Placement of forbidden pattern f translated by t, checked against lookup.
// Violation only when every site is known and matches.
template <typename Lookup>
bool placement_clear(const Pattern& f, Site t, Lookup&& lookup) {
  for (Site o : f.shape().sites()) {
    std::optional<Symbol> got = lookup(o + t);
    if (!got || *got != f.at(o)) return true;
  }
  return false;
}

template <typename Lookup>
bool placements_through_clear(const SftSpace& sft, Site s, Lookup&& lookup) {
  for (const Pattern& f : sft.forbidden())
    for (Site o : f.shape().sites())
      if (!placement_clear(f, s - o, lookup)) return false;
  return true;
}

}  // namespace

bool local_admissible(const Pattern& p, const SftSpace& sft) {
  for (Symbol a : p.symbols())
    if (a >= sft.num_symbols()) throw InputError("symbol index out of range");
  if (sft.family() == Family::SunnySideUp) return sunny_count_ok(p);
  auto lookup = [&p](Site s) -> std::optional<Symbol> {
    if (!p.shape().contains(s)) return std::nullopt;
    return p.at(s);
  };
  for (const Pattern& f : sft.forbidden())
    for (Site s : p.shape().sites())
      if (!placement_clear(f, s, lookup)) return false;
  return true;
}

bool config_admissible_near(const SftSpace& sft, const Configuration& x,
                            const Shape& region) {
  if (sft.family() == Family::SunnySideUp) {
    int ones = 0;
    for (const auto& [s, a] : x.patch())
      if (a == 1) ++ones;
    // Background ones would make the count infinite.
    Shape cell_box = Shape::box({0, 0}, x.background().period - Site{1, 1});
    for (Site s : cell_box.sites())
      if (x.background().at(s) == 1) return false;
    return ones <= 1;
  }
  auto lookup = [&x](Site s) -> std::optional<Symbol> { return x.at(s); };
  std::set<Site> anchors;
  for (const Pattern& f : sft.forbidden())
    for (Site s : region.sites())
      for (Site o : f.shape().sites()) anchors.insert(s - o);
  for (const Pattern& f : sft.forbidden())
    for (Site t : anchors)
      if (!placement_clear(f, t, lookup)) return false;
  return true;
}

bool configuration_admissible(const SftSpace& sft, const Configuration& x) {
  if (sft.family() == Family::SunnySideUp)
    return config_admissible_near(sft, x, Shape{});
  Site p = x.background().period;
  Shape cell_box = (sft.dimension() == 1)
                       ? Shape::interval(0, p.x - 1)
                       : Shape::box({0, 0}, {p.x - 1, p.y - 1});
  if (!config_admissible_near(sft, Configuration(x.background()), cell_box))
    return false;
  Shape support = x.patch_support();
  if (support.empty()) return true;
  return config_admissible_near(sft, x, support);
}

namespace {

// DFS enumeration over `sites` in sorted order. `exterior` resolves sites
// outside the enumerated set (nullopt = no knowledge). When a site is
// assigned, every forbidden placement whose enumerated sites are all already
// assigned and end at that site is checked.
struct Enumerator {
  const SftSpace& sft;
  const Shape& region;
  std::function<std::optional<Symbol>(Site)> exterior;
  long long nodes = 0;
  long long max_nodes;
  std::vector<Symbol> current;
  std::vector<Pattern> out;

  Enumerator(const SftSpace& s, const Shape& r,
             std::function<std::optional<Symbol>(Site)> ext, long long budget)
      : sft(s), region(r), exterior(std::move(ext)), max_nodes(budget) {
    current.assign(region.size(), 0);
  }

  std::optional<Symbol> lookup_upto(std::size_t assigned, Site s) const {
    if (region.contains(s)) {
      std::size_t i = region.index_of(s);
      if (i > assigned) return std::nullopt;
      return current[i];
    }
    return exterior(s);
  }

  bool ok_after(std::size_t idx) {
    Site s = region.sites()[idx];
    if (sft.family() == Family::SunnySideUp) {
      if (current[idx] != 1) return true;
      int ones = 0;
      for (std::size_t i = 0; i <= idx; ++i)
        if (current[i] == 1) ++ones;
      return ones <= 1;
    }
    auto lookup = [this, idx](Site q) { return lookup_upto(idx, q); };
    for (const Pattern& f : sft.forbidden()) {
      for (Site o : f.shape().sites()) {
        Site t = s - o;
        // Skip placements whose enumerated part extends past idx; they get
        // checked when their last enumerated site is assigned.
        bool pending = false;
        for (Site oo : f.shape().sites()) {
          Site q = oo + t;
          if (region.contains(q) && region.index_of(q) > idx) {
            pending = true;
            break;
          }
        }
        if (pending) continue;
        if (!placement_clear(f, t, lookup)) return false;
      }
    }
    return true;
  }

  void run() {
    dfs(0);
  }

  void dfs(std::size_t idx) {
    if (++nodes > max_nodes)
      throw BudgetError("pattern enumeration budget exceeded (" +
                        std::to_string(max_nodes) + " nodes)");
    if (idx == region.size()) {
      out.emplace_back(region, current);
      return;
    }
    for (int a = 0; a < sft.num_symbols(); ++a) {
      current[idx] = static_cast<Symbol>(a);
      if (ok_after(idx)) dfs(idx + 1);
    }
  }
};

}  // namespace

std::vector<Pattern> language(const SftSpace& sft, const Shape& shape,
                              int halo, const EnumBudget& budget) {
  if (halo < 0) throw InputError("language: negative halo");
  if (shape.empty()) return {Pattern{}};
  Shape extended = dilate(shape, halo, sft.dimension());
  Enumerator e(sft, extended, [](Site) { return std::nullopt; },
               budget.max_nodes);
  e.run();
  if (halo == 0) return std::move(e.out);
  std::set<std::string> seen;
  std::vector<Pattern> projected;
  for (const Pattern& p : e.out) {
    Pattern q = p.restricted(shape);
    if (seen.insert(q.key()).second) projected.push_back(std::move(q));
  }
  return projected;
}

std::vector<Pattern> admissible_fillings(const SftSpace& sft,
                                         const Configuration& boundary,
                                         const Shape& region,
                                         const EnumBudget& budget) {
  if (region.empty()) return {Pattern{}};
  Enumerator e(
      sft, region,
      [&boundary](Site s) -> std::optional<Symbol> { return boundary.at(s); },
      budget.max_nodes);
  e.run();
  return std::move(e.out);
}

Shape memory_set(const SftSpace& sft, const Shape& a) {
  if (sft.forbidden_union().empty()) return a;
  return minkowski_sum(a, sft.memory_offsets());
}

Configuration zeta(const SftSpace& sft, const Configuration& x, Site k) {
  for (int a = 0; a < sft.num_symbols(); ++a) {
    if (static_cast<Symbol>(a) == x.at(k)) return x;  // x itself is least
    Configuration y = x.with(k, static_cast<Symbol>(a));
    if (config_admissible_near(sft, y, Shape{k})) return y;
  }
  return x;
}

Pattern fill_single_site(const SftSpace& sft, const Pattern& p, Site k) {
  if (p.shape().contains(k))
    throw InputError("fill_single_site: site already in pattern");
  for (int a = 0; a < sft.num_symbols(); ++a) {
    auto q = join(p, Pattern(Shape{k}, {static_cast<Symbol>(a)}));
    if (q && local_admissible(*q, sft)) return *q;
  }
  throw FillFailure("no admissible symbol at " + to_string(k, sft.dimension()) +
                    "; single-site fillability is falsified");
}

std::optional<Pattern> least_completion(const SftSpace& sft,
                                        const Configuration& boundary,
                                        const Pattern& partial,
                                        const Shape& region) {
  Shape missing = shape_difference(region, partial.shape());
  Configuration base = boundary.with(partial);
  if (missing.empty()) {
    if (!config_admissible_near(sft, base, region)) return std::nullopt;
    return base.window(region);
  }
  std::function<bool(std::size_t, Configuration&)> dfs =
      [&](std::size_t idx, Configuration& cfg) -> bool {
    if (idx == missing.size()) return true;
    Site s = missing.sites()[idx];
    for (int a = 0; a < sft.num_symbols(); ++a) {
      Configuration next = cfg.with(s, static_cast<Symbol>(a));
      // Check placements through s that only involve decided sites.
      auto lookup = [&](Site q) -> std::optional<Symbol> {
        if (missing.contains(q) && missing.index_of(q) > idx)
          return std::nullopt;
        return next.at(q);
      };
      if (!placements_through_clear(sft, s, lookup)) continue;
      if (dfs(idx + 1, next)) {
        cfg = next;
        return true;
      }
    }
    return false;
  };
  Configuration work = base;
  if (!config_admissible_near(sft, base, partial.shape())) return std::nullopt;
  if (!dfs(0, work)) return std::nullopt;
  return work.window(region);
}

}  // namespace gibbslab
