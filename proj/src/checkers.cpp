#include "gibbslab/checkers.hpp"

#include <map>
#include <queue>
#include <string>
#include <unordered_map>

namespace gibbslab {

TmpReport check_tmp_window(const SftSpace& sft, const Shape& a, const Shape& b,
                           const Shape& window, const EnumBudget& budget) {
  if (!a.subset_of(b) || !b.subset_of(window))
    throw InputError("check_tmp_window: need a ⊆ b ⊆ window");
  TmpReport report;
  report.a = a;
  report.b = b;
  report.window = window;

  std::vector<Pattern> patterns = language(sft, window, 0, budget);
  Shape ring = shape_difference(b, a);
  std::map<std::string, std::vector<const Pattern*>> groups;
  for (const Pattern& p : patterns)
    groups[p.restricted(ring).key()].push_back(&p);

  Shape off_a = shape_difference(window, a);
  for (const auto& [key, group] : groups) {
    for (const Pattern* x : group) {
      Pattern xb = x->restricted(b);
      for (const Pattern* y : group) {
        if (++report.pairs_checked > budget.max_nodes)
          throw BudgetError("check_tmp_window: pair budget exceeded");
        auto glued = join(xb, y->restricted(off_a));
        if (!glued || !local_admissible(*glued, sft)) {
          report.holds = false;
          report.counterexample =
              TmpCounterexample{*x, *y, glued ? *glued : Pattern{}};
          return report;
        }
      }
    }
  }
  return report;
}

namespace {

struct BfsState {
  std::vector<Symbol> symbols;  // on search_box sites, canonical order
};

}  // namespace

std::vector<PivotMove> pivot_path(const SftSpace& sft,
                                  const AsymptoticPair& pair,
                                  const Shape& search_box,
                                  const EnumBudget& budget) {
  if (!pair.disagreement.subset_of(search_box))
    throw InputError("pivot_path: disagreement not inside search box");
  const Shape& box = search_box;
  const Configuration& base = pair.left;  // boundary off the box

  auto key_of = [](const std::vector<Symbol>& v) {
    return std::string(v.begin(), v.end());
  };
  std::vector<Symbol> start = pair.left.window(box).symbols();
  std::vector<Symbol> goal = pair.right.window(box).symbols();

  // Move admissibility: forbidden placements through the changed site, read
  // from the state inside the box and the fixed boundary outside.
  auto move_ok = [&](const std::vector<Symbol>& state, std::size_t idx,
                     Symbol a) {
    Site changed = box.sites()[idx];
    auto lookup = [&](Site q) -> std::optional<Symbol> {
      if (box.contains(q)) {
        std::size_t i = box.index_of(q);
        return i == idx ? a : state[i];
      }
      return base.at(q);
    };
    for (const Pattern& f : sft.forbidden())
      for (Site o : f.shape().sites()) {
        Site t = changed - o;
        bool clear = false;
        for (Site oo : f.shape().sites()) {
          auto got = lookup(oo + t);
          if (!got || *got != f.at(oo)) {
            clear = true;
            break;
          }
        }
        if (!clear) return false;
      }
    return true;
  };

  if (sft.family() == Family::SunnySideUp)
    throw InputError("pivot_path: sunny-side-up moves need global counting");

  std::unordered_map<std::string, std::pair<std::string, PivotMove>> parent;
  std::string start_key = key_of(start), goal_key = key_of(goal);
  if (start_key == goal_key) return {};
  std::queue<std::vector<Symbol>> frontier;
  frontier.push(start);
  parent.emplace(start_key, std::make_pair(std::string(), PivotMove{}));
  long long visited = 1;

  while (!frontier.empty()) {
    std::vector<Symbol> state = std::move(frontier.front());
    frontier.pop();
    std::string skey = key_of(state);
    for (std::size_t idx = 0; idx < box.size(); ++idx) {
      for (int a = 0; a < sft.num_symbols(); ++a) {
        if (static_cast<Symbol>(a) == state[idx]) continue;
        if (!move_ok(state, idx, static_cast<Symbol>(a))) continue;
        std::vector<Symbol> next = state;
        next[idx] = static_cast<Symbol>(a);
        std::string nkey = key_of(next);
        if (parent.count(nkey)) continue;
        parent.emplace(nkey, std::make_pair(
                                 skey, PivotMove{box.sites()[idx],
                                                 static_cast<Symbol>(a)}));
        if (nkey == goal_key) {
          std::vector<PivotMove> moves;
          std::string cur = nkey;
          while (cur != start_key) {
            auto& [prev, move] = parent.at(cur);
            moves.push_back(move);
            cur = prev;
          }
          std::reverse(moves.begin(), moves.end());
          return moves;
        }
        if (++visited > budget.max_nodes)
          throw BudgetError("pivot_path: state budget exceeded");
        frontier.push(std::move(next));
      }
    }
  }
  throw NoPathError("pivot_path: BFS exhausted window of size " +
                    std::to_string(box.size()));
}

bool replay_pivot_path(const SftSpace& sft, const AsymptoticPair& pair,
                       const std::vector<PivotMove>& moves) {
  Configuration cur = pair.left;
  for (const PivotMove& m : moves) {
    cur = cur.with(m.site, m.symbol);
    if (!config_admissible_near(sft, cur, Shape{m.site})) return false;
  }
  for (Site s : pair.disagreement.sites())
    if (cur.at(s) != pair.right.at(s)) return false;
  return true;
}

SftSpace derive_sft_from_tmp_safe(const SftSpace& sft, int window_radius,
                                  const EnumBudget& budget) {
  if (!sft.asserted().safe_symbol)
    throw InputError("derive_sft_from_tmp_safe: no safe symbol declared");
  Shape origin{Site{0, 0}};
  Shape b = sft.forbidden_union().empty()
                ? origin
                : memory_set(sft, origin);
  Shape window = dilate(origin, window_radius, sft.dimension());
  if (!b.subset_of(window))
    throw InputError("derive_sft_from_tmp_safe: window smaller than B");
  TmpReport tmp = check_tmp_window(sft, origin, b, window, budget);
  if (!tmp.holds)
    throw InputError(
        "derive_sft_from_tmp_safe: TMP falsified on the given window");

  // Globally admissible B-patterns, approximated by extendability to the
  // checked window (exact for SSF spaces and for the sunny family).
  std::vector<Pattern> good = language(sft, b, window_radius, budget);
  std::vector<Pattern> all = language(
      SftSpace(sft.dimension(), sft.alphabet(), {}), b, 0, budget);
  std::vector<Pattern> forbidden;
  for (const Pattern& p : all) {
    bool admissible = false;
    for (const Pattern& q : good)
      if (p == q) {
        admissible = true;
        break;
      }
    if (!admissible) forbidden.push_back(p);
  }
  return SftSpace(sft.dimension(), sft.alphabet(), std::move(forbidden),
                  sft.asserted());
}

}  // namespace gibbslab
