#include "gibbslab/fill.hpp"

#include <algorithm>
#include <set>

namespace gibbslab {

Shape FillContext::separation_shape() const {
  int r = fill_radius;
  return sft->dimension() == 1 ? Shape::interval(-r, r)
                               : Shape::box({-r, -r}, {r, r});
}

FillContext make_fill_context(const SftSpace& sft, Configuration anchor) {
  if (!sft.asserted().ssf)
    throw InputError("make_fill_context: space is not asserted ssf");
  if (!configuration_admissible(sft, anchor))
    throw InputError("make_fill_context: anchor configuration inadmissible");
  FillContext ctx;
  ctx.sft = &sft;
  int r = 1;
  for (const Pattern& f : sft.forbidden()) {
    Site lo = f.shape().bound_lo(), hi = f.shape().bound_hi();
    r = std::max({r, -lo.x, -lo.y, hi.x, hi.y, hi.x - lo.x, hi.y - lo.y});
  }
  ctx.fill_radius = r;
  ctx.anchor = std::move(anchor);
  return ctx;
}

std::vector<Shape> separated_partition(const Shape& annulus, const Shape& k) {
  if (!k.contains({0, 0}))
    throw InputError("separated_partition: K must contain the origin");
  for (Site s : k.sites())
    if (!k.contains(-s))
      throw InputError("separated_partition: K must be symmetric");
  Shape kk = minkowski_sum(k, k);

  // Greedy maximal K-separated subset (sites in canonical order).
  std::vector<Site> d;
  for (Site s : annulus.sites()) {
    bool clashes = false;
    for (Site t : d)
      if (kk.contains(s - t)) {
        clashes = true;
        break;
      }
    if (!clashes) d.push_back(s);
  }

  std::vector<Shape> classes;
  std::set<Site> used;
  for (Site u : kk.sites()) {
    std::vector<Site> members;
    for (Site t : d) {
      Site s = t + u;
      if (annulus.contains(s) && !used.count(s)) members.push_back(s);
    }
    if (members.empty()) continue;
    for (Site s : members) used.insert(s);
    classes.push_back(Shape(std::move(members)));
  }
  if (used.size() != annulus.size())
    throw ConsistencyError("separated_partition: cover is not a partition");
  return classes;
}

Configuration build_fill(const FillContext& ctx, const Configuration& x,
                         int n) {
  const SftSpace& sft = *ctx.sft;
  const int big_n = ctx.margin();
  if (n <= big_n)
    throw InputError("build_fill: need n > " + std::to_string(big_n));
  const int dim = sft.dimension();
  auto box = [dim](int r) {
    return dim == 1 ? Shape::interval(-r, r) : Shape::box({-r, -r}, {r, r});
  };
  Shape inner = box(n), outer = box(n + big_n);
  Shape annulus = shape_difference(outer, inner);

  Configuration z(ctx.anchor.background());
  for (const auto& [s, a] : ctx.anchor.patch())
    if (!outer.contains(s)) z = z.with(s, a);
  for (Site s : inner.sites()) z = z.with(s, x.at(s));
  z = z.compacted();

  std::set<Site> unassigned(annulus.sites().begin(), annulus.sites().end());
  auto lookup = [&](Site q) -> std::optional<Symbol> {
    if (unassigned.count(q)) return std::nullopt;
    return z.at(q);
  };

  for (const Shape& cls : separated_partition(annulus, ctx.separation_shape())) {
    for (Site s : cls.sites()) {
      bool placed = false;
      for (int a = 0; a < sft.num_symbols() && !placed; ++a) {
        bool ok = true;
        for (const Pattern& f : sft.forbidden()) {
          for (Site o : f.shape().sites()) {
            Site t = s - o;
            bool clear = false;
            for (Site oo : f.shape().sites()) {
              Site q = oo + t;
              std::optional<Symbol> got =
                  q == s ? std::optional<Symbol>(static_cast<Symbol>(a))
                         : lookup(q);
              if (!got || *got != f.at(oo)) {
                clear = true;
                break;
              }
            }
            if (!clear) {
              ok = false;
              break;
            }
          }
          if (!ok) break;
        }
        if (ok) {
          unassigned.erase(s);
          z = z.with(s, static_cast<Symbol>(a));
          placed = true;
        }
      }
      if (!placed)
        throw FillFailure(
            "build_fill: no admissible symbol at " + to_string(s, dim) +
            "; single-site fillability is falsified");
    }
  }
  if (!config_admissible_near(sft, z, outer))
    throw FillFailure("build_fill: filled configuration is inadmissible");
  return z.compacted();
}

FillLocalityReport check_fill_locality(const FillContext& ctx,
                                       const Configuration& x, int n) {
  const SftSpace& sft = *ctx.sft;
  const int big_n = ctx.margin();
  const int dim = sft.dimension();
  auto box = [dim](int r) {
    return dim == 1 ? Shape::interval(-r, r) : Shape::box({-r, -r}, {r, r});
  };
  Shape inner = box(n), deep = box(n - big_n), outer = box(n + big_n);

  FillLocalityReport report;
  std::size_t classes =
      separated_partition(shape_difference(outer, inner),
                          ctx.separation_shape())
          .size();
  report.lambda_radius = static_cast<int>(classes) * big_n;

  Configuration z0 = build_fill(ctx, x, n);
  for (Site j : inner.sites()) {
    for (int a = 0; a < sft.num_symbols(); ++a) {
      if (static_cast<Symbol>(a) == x.at(j)) continue;
      Configuration y = x.with(j, static_cast<Symbol>(a));
      if (!config_admissible_near(sft, y, Shape{j})) continue;
      Configuration zy = build_fill(ctx, y, n);
      ++report.flips_tested;
      for (Site s : outer.sites()) {
        if (z0.at(s) == zy.at(s)) continue;
        if (s == j) continue;
        if (deep.contains(j)) {
          report.interior_ok = false;
        } else {
          int dist = std::max(std::abs(s.x - j.x), std::abs(s.y - j.y));
          if (dist > report.lambda_radius) report.margin_ok = false;
        }
      }
    }
  }
  return report;
}

}  // namespace gibbslab
