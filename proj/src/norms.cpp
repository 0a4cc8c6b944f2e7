#include "gibbslab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <set>
#include <unordered_map>

#include "gibbslab/parallel.hpp"
#include "gibbslab/rng.hpp"

namespace gibbslab {

std::string to_string(NormMode mode) {
  switch (mode) {
    case NormMode::Exact: return "exact";
    case NormMode::LowerBound: return "lower_bound";
    case NormMode::UpperBound: return "upper_bound";
  }
  return "?";
}

namespace {

bool language_is_exact(const SftSpace& sft) {
  return sft.forbidden().empty() || sft.asserted().ssf;
}

}  // namespace

NormReport norm_ns(const Interaction& phi, const SftSpace& sft, int halo,
                   const EnumBudget& budget) {
  if (phi.mode() != InteractionMode::ShiftInvariant)
    throw InputError("norm_ns: shift-invariant interactions only");
  NormReport report;
  report.mode = language_is_exact(sft) ? NormMode::Exact : NormMode::UpperBound;
  for (const auto& [shape, table] : phi.entries()) {
    std::set<std::string> admissible;
    for (const Pattern& p : language(sft, shape, halo, budget)) {
      admissible.insert(p.key());
      ++report.enumerated;
    }
    double best = 0.0;
    const std::string* best_key = nullptr;
    for (const auto& [key, v] : table) {
      if (!admissible.count(key)) continue;
      if (std::abs(v) > best) {
        best = std::abs(v);
        best_key = &key;
      }
    }
    // One placement through the origin per element of the shape.
    report.value += static_cast<double>(shape.size()) * best;
    if (best_key && !report.witness) {
      std::vector<Symbol> syms(best_key->begin(), best_key->end());
      report.witness = Pattern(shape, std::move(syms));
    }
  }
  return report;
}

NormReport norm_vs(const Interaction& phi, const SftSpace& sft, int halo,
                   const EnumBudget& budget) {
  if (phi.mode() != InteractionMode::ShiftInvariant)
    throw InputError("norm_vs: shift-invariant interactions only");
  NormReport report;
  report.mode = language_is_exact(sft) ? NormMode::Exact : NormMode::UpperBound;
  if (!sft.asserted().pivot && !sft.asserted().safe_symbol)
    report.note =
        "single-site variation sum; matches the general variation only under "
        "a pivot assertion";
  double best_var = -1.0;
  for (const auto& [shape, table] : phi.entries()) {
    for (Site s : shape.sites()) {
      Shape env = shape_union(shape, memory_set(sft, Shape{s}));
      std::map<std::string, std::pair<double, double>> extremes;
      Shape rest = shape_difference(env, Shape{s});
      for (const Pattern& p : language(sft, env, halo, budget)) {
        ++report.enumerated;
        double v = phi.value(p.restricted(shape));
        std::string key = p.restricted(rest).key();
        auto [it, fresh] = extremes.try_emplace(key, std::make_pair(v, v));
        if (!fresh) {
          it->second.first = std::min(it->second.first, v);
          it->second.second = std::max(it->second.second, v);
        }
      }
      double var = 0.0;
      for (const auto& [key, mm] : extremes)
        var = std::max(var, mm.second - mm.first);
      report.value += var;
      if (var > best_var) best_var = var;
    }
  }
  return report;
}

namespace {

// Uniform-ish random locally admissible pattern on `shape`: site by site,
// uniform among symbols consistent with the assigned prefix; restart on a
// dead end. The sampling distribution is irrelevant for a lower bound.
std::optional<Pattern> random_window(const SftSpace& sft, const Shape& shape,
                                     CounterRng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Symbol> chosen(shape.size(), 0);
    bool stuck = false;
    for (std::size_t idx = 0; idx < shape.size() && !stuck; ++idx) {
      Site s = shape.sites()[idx];
      auto lookup = [&](Site q) -> std::optional<Symbol> {
        if (!shape.contains(q)) return std::nullopt;
        std::size_t i = shape.index_of(q);
        if (i > idx) return std::nullopt;
        return chosen[i];
      };
      std::vector<Symbol> options;
      for (int a = 0; a < sft.num_symbols(); ++a) {
        chosen[idx] = static_cast<Symbol>(a);
        bool ok = true;
        for (const Pattern& f : sft.forbidden()) {
          for (Site o : f.shape().sites()) {
            Site t = s - o;
            bool clear = false;
            for (Site oo : f.shape().sites()) {
              auto got = lookup(oo + t);
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
        if (ok) options.push_back(static_cast<Symbol>(a));
      }
      if (options.empty()) {
        stuck = true;
        break;
      }
      chosen[idx] = options[rng.next_below(options.size())];
    }
    if (!stuck) return Pattern(shape, std::move(chosen));
  }
  return std::nullopt;
}

}  // namespace

NormReport norm_sullivan(const Cocycle& psi, const SullivanOptions& opts) {
  const SftSpace& sft = psi.space();
  auto base = psi.sullivan_base();
  if (!base)
    throw InputError("norm_sullivan: cocycle has no declared dependence shape");
  const bool safe_ok =
      sft.asserted().safe_symbol.has_value() || sft.forbidden().empty();

  NormReport report;
  Symbol fill = sft.asserted().safe_symbol.value_or(0);
  Configuration env(Background::uniform(fill));

  auto eval_window = [&](const Pattern& w) -> std::optional<double> {
    Configuration x = env.with(w).compacted();
    if (!config_admissible_near(sft, x, w.shape())) return std::nullopt;
    Configuration zx = zeta(sft, x, {0, 0});
    if (x == zx) return 0.0;
    return psi.eval(AsymptoticPair::make(x, zx));
  };

  if (opts.exact && safe_ok) {
    bool hit_budget = false;
    std::vector<Pattern> patterns;
    try {
      patterns = language(sft, *base, opts.halo, opts.budget);
    } catch (const BudgetError&) {
      hit_budget = true;
    }
    if (!hit_budget) {
      for (const Pattern& w : patterns) {
        ++report.enumerated;
        auto v = eval_window(w);
        if (!v) continue;
        if (std::abs(*v) >= report.value) {
          report.value = std::abs(*v);
          report.witness = w;
        }
      }
      report.mode = language_is_exact(sft) ? NormMode::Exact
                                           : NormMode::UpperBound;
      return report;
    }
    report.note = "dependence window too large to enumerate; sampled";
  } else if (opts.exact) {
    report.note = "no safe extension available; sampled";
  }

  // Sampling fallback: seeded lower bound.
  long long count = opts.samples > 0 ? opts.samples : 10000;
  struct Best {
    double value = 0.0;
    std::optional<Pattern> witness;
  };
  Best best = parallel_reduce<Best>(
      count, opts.workers, Best{},
      [&](long long i, Best& acc) {
        CounterRng rng(opts.seed, static_cast<std::uint64_t>(i));
        auto w = random_window(sft, *base, rng);
        if (!w) return;
        auto v = eval_window(*w);
        if (!v) return;
        bool better = std::abs(*v) > acc.value ||
                      (std::abs(*v) == acc.value && acc.witness &&
                       w->key() < acc.witness->key());
        if (better || !acc.witness) {
          acc.value = std::abs(*v);
          acc.witness = *w;
        }
      },
      [](Best& out, const Best& in) {
        if (!in.witness) return;
        bool better = in.value > out.value ||
                      (in.value == out.value && out.witness &&
                       in.witness->key() < out.witness->key());
        if (better || !out.witness) out = in;
      });
  report.samples = count;
  report.value = best.value;
  report.witness = best.witness;
  report.mode = NormMode::LowerBound;
  return report;
}

namespace {

struct DualBest {
  double value = -1.0;
  std::string what;
};

// Interval contribution at a fixed length via rolling hashes, verified by
// direct comparison within each hash bucket.
double interval_sum(const std::vector<Symbol>& ax, const std::vector<Symbol>& ay,
                    int len) {
  const int total = static_cast<int>(ax.size());
  const int places = total - len + 1;
  if (places <= 0) return 0.0;
  constexpr std::uint64_t kBase = 0x100000001b3ULL;
  std::uint64_t top = 1;
  for (int t = 0; t < len - 1; ++t) top *= kBase;

  struct Entry {
    std::uint64_t hash;
    int j;
    int side;  // +1 for y, -1 for x
  };
  std::vector<Entry> entries;
  entries.reserve(2 * places);
  std::uint64_t hx = 0, hy = 0;
  for (int t = 0; t < len; ++t) {
    hx = hx * kBase + ax[t] + 1;
    hy = hy * kBase + ay[t] + 1;
  }
  for (int j = 0;; ++j) {
    entries.push_back({hx, j, -1});
    entries.push_back({hy, j, +1});
    if (j + len >= total) break;
    hx = (hx - (ax[j] + 1) * top) * kBase + ax[j + len] + 1;
    hy = (hy - (ay[j] + 1) * top) * kBase + ay[j + len] + 1;
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.hash < b.hash;
  });

  auto word_ptr = [&](const Entry& e) {
    return (e.side < 0 ? ax.data() : ay.data()) + e.j;
  };
  long long sum_abs = 0;
  std::size_t i = 0;
  while (i < entries.size()) {
    std::size_t j = i;
    while (j < entries.size() && entries[j].hash == entries[i].hash) ++j;
    // Within the bucket, group identical words by direct comparison.
    std::vector<std::pair<std::size_t, long long>> reps;  // entry idx, net
    for (std::size_t t = i; t < j; ++t) {
      bool matched = false;
      for (auto& [rep, net] : reps) {
        if (std::memcmp(word_ptr(entries[t]), word_ptr(entries[rep]),
                        len * sizeof(Symbol)) == 0) {
          net += entries[t].side;
          matched = true;
          break;
        }
      }
      if (!matched) reps.push_back({t, entries[t].side});
    }
    for (const auto& [rep, net] : reps) sum_abs += std::llabs(net);
    i = j;
  }
  return static_cast<double>(sum_abs) / len;
}

}  // namespace

NormReport dual_ns_norm(const AsymptoticPair& pair, const SftSpace& sft,
                        const DualNormBudget& budget) {
  if (sft.dimension() != 1)
    throw InputError("dual_ns_norm: one-dimensional only");
  if (!sft.forbidden().empty())
    throw InputError("dual_ns_norm: full shift only");
  Background zero = Background::uniform(0);
  if (!(pair.left.background() == zero))
    throw InputError("dual_ns_norm: zero background required");
  NormReport report;
  report.mode = NormMode::LowerBound;
  if (pair.disagreement.empty()) {
    report.value = 0.0;
    report.note = "identical pair";
    return report;
  }

  const int lo = pair.disagreement.min_site().x;
  const int hi = pair.disagreement.max_site().x;
  const int pad = std::max(budget.intervals_up_to, budget.max_diameter) + 1;
  const int a0 = lo - pad, a1 = hi + pad;
  std::vector<Symbol> ax, ay;
  ax.reserve(a1 - a0 + 1);
  ay.reserve(a1 - a0 + 1);
  for (int t = a0; t <= a1; ++t) {
    ax.push_back(pair.left.at({t, 0}));
    ay.push_back(pair.right.at({t, 0}));
  }

  DualBest best;
  // Contiguous intervals.
  if (budget.intervals_up_to > 0) {
    best = parallel_reduce<DualBest>(
        budget.intervals_up_to, budget.workers, DualBest{},
        [&](long long idx, DualBest& acc) {
          int len = static_cast<int>(idx) + 1;
          double v = interval_sum(ax, ay, len);
          if (v > acc.value) {
            acc.value = v;
            acc.what = "interval of length " + std::to_string(len);
          }
        },
        [](DualBest& out, const DualBest& in) {
          if (in.value > out.value ||
              (in.value == out.value && in.what < out.what))
            out = in;
        });
  }

  // Sparse shapes {0} ∪ S, |A| <= max_size, diameter <= max_diameter.
  const int nsym = sft.num_symbols();
  const int width = static_cast<int>(ax.size());
  auto scan_offsets = [&](const std::vector<int>& offsets) {
    int words = 1;
    for (std::size_t t = 0; t < offsets.size(); ++t) words *= nsym;
    std::vector<long long> counts(words, 0);
    std::vector<int> touched;
    int max_off = offsets.back();
    for (int j = 0; j + max_off < width; ++j) {
      int wx = 0, wy = 0, mult = 1;
      for (int off : offsets) {
        wx += ax[j + off] * mult;
        wy += ay[j + off] * mult;
        mult *= nsym;
      }
      if (wx == wy) continue;
      if (counts[wy] == 0) touched.push_back(wy);
      counts[wy] += 1;
      if (counts[wx] == 0) touched.push_back(wx);
      counts[wx] -= 1;
    }
    long long sum_abs = 0;
    for (int w : touched) {  // may hold duplicates; zero after first visit
      sum_abs += std::llabs(counts[w]);
      counts[w] = 0;
    }
    return static_cast<double>(sum_abs) / static_cast<double>(offsets.size());
  };

  if (budget.max_size >= 1) {
    double v = scan_offsets({0});
    if (v > best.value) {
      best.value = v;
      best.what = "shape {0}";
    }
  }
  if (budget.max_size >= 2 && budget.max_diameter >= 1) {
    DualBest pairs = parallel_reduce<DualBest>(
        budget.max_diameter, budget.workers, DualBest{},
        [&](long long idx, DualBest& acc) {
          int d = static_cast<int>(idx) + 1;
          double v = scan_offsets({0, d});
          std::string what = "shape {0," + std::to_string(d) + "}";
          if (v > acc.value) acc = {v, what};
          if (budget.max_size >= 3) {
            for (int d2 = d + 1; d2 <= budget.max_diameter; ++d2) {
              double v3 = scan_offsets({0, d, d2});
              if (v3 > acc.value)
                acc = {v3, "shape {0," + std::to_string(d) + "," +
                               std::to_string(d2) + "}"};
            }
          }
        },
        [](DualBest& out, const DualBest& in) {
          if (in.value > out.value ||
              (in.value == out.value && in.what < out.what))
            out = in;
        });
    if (pairs.value > best.value) best = pairs;
  }

  report.value = std::max(best.value, 0.0);
  report.note = best.what;
  return report;
}

}  // namespace gibbslab
