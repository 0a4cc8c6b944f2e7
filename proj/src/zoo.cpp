#include "gibbslab/zoo.hpp"

#include <deque>
#include <regex>

namespace gibbslab {

namespace {

int mod_floor(long long a, int m) {
  long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

std::vector<std::string> digit_alphabet(int q) {
  std::vector<std::string> a;
  for (int i = 0; i < q; ++i) a.push_back(std::to_string(i));
  return a;
}

std::vector<Site> axis_steps(int d) {
  if (d == 1) return {{1, 0}};
  return {{1, 0}, {0, 1}};
}

}  // namespace

SftSpace full_shift(int q, int d) {
  Asserted asserted;
  asserted.ssf = true;
  asserted.safe_symbol = 0;
  asserted.pivot = true;
  return SftSpace(d, digit_alphabet(q), {}, asserted);
}

SftSpace hardcore_shift(int d) {
  std::vector<Pattern> forbidden;
  for (Site e : axis_steps(d))
    forbidden.push_back(Pattern(Shape{{0, 0}, e}, {1, 1}));
  Asserted asserted;
  asserted.ssf = true;
  asserted.safe_symbol = 0;
  asserted.pivot = true;
  return SftSpace(d, digit_alphabet(2), std::move(forbidden), asserted);
}

SftSpace coloring_shift(int q, int d) {
  if (q < 2) throw InputError("coloring_shift: q >= 2 required");
  std::vector<Pattern> forbidden;
  for (Site e : axis_steps(d))
    for (int a = 0; a < q; ++a)
      forbidden.push_back(Pattern(Shape{{0, 0}, e},
                                  {static_cast<Symbol>(a),
                                   static_cast<Symbol>(a)}));
  Asserted asserted;
  asserted.ssf = q >= 2 * d + 1;
  asserted.pivot = q >= 2 * d + 2 || (d == 2 && (q == 2 || q == 3));
  return SftSpace(d, digit_alphabet(q), std::move(forbidden), asserted);
}

SftSpace sunny_side_up(int d) {
  Asserted asserted;
  asserted.safe_symbol = 0;
  asserted.pivot = true;
  return SftSpace(d, digit_alphabet(2), {}, asserted, Family::SunnySideUp);
}

SftSpace builtin_space(const std::string& name) {
  static const std::regex form(R"(^(\w+)\((\d+)(?:,(\d+))?\)$)");
  std::smatch m;
  if (!std::regex_match(name, m, form))
    throw InputError("builtin_space: cannot parse '" + name + "'");
  std::string kind = m[1];
  int first = std::stoi(m[2]);
  int second = m[3].matched ? std::stoi(m[3]) : 0;
  if (kind == "full") return full_shift(first, second ? second : 1);
  if (kind == "hardcore") return hardcore_shift(first);
  if (kind == "coloring") {
    if (!m[3].matched) throw InputError("coloring(q,d) needs two arguments");
    return coloring_shift(first, second);
  }
  if (kind == "sunny") return sunny_side_up(first);
  throw InputError("builtin_space: unknown name '" + kind + "'");
}

HeightLift lift_heights(const SftSpace& sft, const Configuration& x,
                        const Shape& region, Site anchor) {
  if (sft.dimension() != 2 || sft.num_symbols() != 3)
    throw InputError("lift_heights: needs the 2D 3-coloring space");
  if (!region.contains(anchor))
    throw InputError("lift_heights: anchor outside region");
  HeightLift lift;
  lift.base = x;
  lift.anchor = anchor;
  lift.anchor_value = x.at(anchor);
  lift.heights[anchor] = lift.anchor_value;

  std::deque<Site> queue{anchor};
  const Site steps[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  while (!queue.empty()) {
    Site s = queue.front();
    queue.pop_front();
    long long h = lift.heights.at(s);
    for (Site e : steps) {
      Site t = s + e;
      if (!region.contains(t)) continue;
      int c = x.at(t);
      long long up = h + 1, down = h - 1;
      long long value;
      if (mod_floor(up, 3) == c)
        value = up;
      else if (mod_floor(down, 3) == c)
        value = down;
      else
        throw InputError("lift_heights: adjacent colors equal (corrupt input)");
      auto [it, fresh] = lift.heights.try_emplace(t, value);
      if (!fresh) {
        if (it->second != value)
          throw InputError("lift_heights: inconsistent lift (corrupt input)");
        continue;
      }
      queue.push_back(t);
    }
  }
  if (lift.heights.size() != region.size())
    throw InputError("lift_heights: region is not connected");
  return lift;
}

long long height_cocycle(const SftSpace& sft, const AsymptoticPair& pair) {
  if (pair.disagreement.empty()) return 0;
  Site lo = pair.disagreement.bound_lo() - Site{1, 1};
  Site hi = pair.disagreement.bound_hi() + Site{1, 1};
  Shape region = Shape::box(lo, hi);
  Site anchor = region.min_site();  // on the frame, outside the disagreement
  HeightLift lift_x = lift_heights(sft, pair.left, region, anchor);
  HeightLift lift_y = lift_heights(sft, pair.right, region, anchor);
  long long sum = 0;
  for (Site s : region.sites())
    sum += lift_x.heights.at(s) - lift_y.heights.at(s);
  return sum;
}

namespace {

struct Height3Cocycle final : CocycleImpl {
  double eval(const SftSpace& sft, const AsymptoticPair& pair) const override {
    return static_cast<double>(height_cocycle(sft, pair));
  }
  std::optional<long long> eval_int(const SftSpace& sft,
                                    const AsymptoticPair& pair) const override {
    return height_cocycle(sft, pair);
  }
};

}  // namespace

Cocycle height_cocycle_on(const SftSpace& sft) {
  if (sft.dimension() != 2 || sft.num_symbols() != 3)
    throw InputError("height_cocycle_on: needs the 2D 3-coloring space");
  return Cocycle::from_impl(sft, std::make_shared<Height3Cocycle>());
}

DiamondPair diamond_pair(const SftSpace& sft, int radius) {
  if (radius < 1) throw InputError("diamond_pair: radius >= 1");
  // Exterior parity pattern (i - |n|_1) mod 2 = (i + n.x + n.y) mod 2.
  Background bg;
  bg.period = {2, 2};
  Shape cell_box = Shape::box({0, 0}, {1, 1});
  std::vector<Symbol> cell;
  for (Site s : cell_box.sites())
    cell.push_back(static_cast<Symbol>(mod_floor(radius + s.x + s.y, 2)));
  bg.cell = Pattern(cell_box, std::move(cell));

  Configuration x((Background(bg))), y((Background(bg)));
  Shape ball = Shape::ball1(radius, 2);
  for (Site s : ball.sites()) {
    long long up = radius - norm1(s);
    x = x.with(s, static_cast<Symbol>(mod_floor(up, 3)));
    y = y.with(s, static_cast<Symbol>(mod_floor(-up, 3)));
  }
  x = x.compacted();
  y = y.compacted();
  if (!configuration_admissible(sft, x) || !configuration_admissible(sft, y))
    throw ConsistencyError("diamond_pair: side inadmissible");
  DiamondPair out;
  out.radius = radius;
  out.pair = AsymptoticPair::make(std::move(x), std::move(y));
  return out;
}

RigidColoringReport rigid_coloring_witness(int q, int window_radius) {
  if (q != 4 && q != 5)
    throw InputError("rigid_coloring_witness: q must be 4 or 5");
  SftSpace sft = coloring_shift(q, 2);
  RigidColoringReport report;
  report.q = q;
  report.window = Shape::box({-window_radius, -window_radius},
                             {window_radius, window_radius});

  Background bg;
  bg.period = {q, q};
  Shape cell_box = Shape::box({0, 0}, {q - 1, q - 1});
  std::vector<Symbol> cell;
  for (Site s : cell_box.sites())
    cell.push_back(static_cast<Symbol>(mod_floor(s.x + (q - 2) * s.y, q)));
  bg.cell = Pattern(cell_box, std::move(cell));
  Configuration x((Background(bg)));
  report.admissible = configuration_admissible(sft, x);

  for (Site s : report.window.sites())
    for (int a = 0; a < q; ++a) {
      if (static_cast<Symbol>(a) == x.at(s)) continue;
      if (config_admissible_near(sft, x.with(s, static_cast<Symbol>(a)),
                                 Shape{s}))
        ++report.single_site_pivots;
    }

  Site left{0, 0}, right{1, 0};
  Configuration y =
      x.with(left, x.at(right)).with(right, x.at(left));
  report.two_site_exchange_admissible =
      config_admissible_near(sft, y, Shape{left, right});
  return report;
}

}  // namespace gibbslab
