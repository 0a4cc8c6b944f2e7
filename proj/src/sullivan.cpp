#include "gibbslab/sullivan.hpp"

#include <algorithm>
#include <cmath>

#include "gibbslab/parallel.hpp"

namespace gibbslab {

namespace {

Shape radius_box(int r, int dim) {
  return dim == 1 ? Shape::interval(-r, r) : Shape::box({-r, -r}, {r, r});
}

bool uniform_safe_anchor(const FillContext& ctx) {
  const auto& safe = ctx.sft->asserted().safe_symbol;
  if (!safe) return false;
  return ctx.anchor.compacted() ==
         Configuration(Background::uniform(*safe));
}

}  // namespace

Interaction sullivan_interaction(const FillContext& ctx, const Cocycle& psi,
                                 int n, int halo, const EnumBudget& budget) {
  const SftSpace& sft = *ctx.sft;
  if (!psi.shift_invariant())
    throw InputError("sullivan_interaction: shift-invariant cocycles only");
  Shape fn = radius_box(n, sft.dimension());
  const double cell = static_cast<double>(fn.size());
  const bool shortcut = uniform_safe_anchor(ctx);
  if (n <= ctx.margin() && !shortcut)
    throw InputError("build_fill: need n > " + std::to_string(ctx.margin()));

  Interaction phi(InteractionMode::ShiftInvariant);
  for (const Pattern& w : language(sft, fn, halo, budget)) {
    Configuration x = ctx.anchor.with(w);
    Configuration z = shortcut ? x.compacted() : build_fill(ctx, x, n);
    // Entry value: energy of the spliced window relative to the anchor,
    // ψ(anchor, z) / |F_n|, so that ψ_Φ approximates +ψ.
    double value = psi.eval(AsymptoticPair::make(ctx.anchor, z)) / cell;
    phi.set(w, value);
  }
  return phi;
}

namespace {

struct WordTable {
  std::vector<std::string> keys;  // sorted
  std::vector<double> values;

  long long index_of(const std::string& key) const {
    auto it = std::lower_bound(keys.begin(), keys.end(), key);
    if (it == keys.end() || *it != key) return -1;
    return it - keys.begin();
  }
};

WordTable table_of(const Interaction& phi, const Shape& expected_shape) {
  if (phi.entries().size() != 1)
    throw InputError("expected a single-class interaction");
  const auto& [shape, table] = *phi.entries().begin();
  if (!(shape == expected_shape.normalized()))
    throw InputError("interaction entry shape does not match the window");
  WordTable out;
  out.keys.reserve(table.size());
  for (const auto& [key, v] : table) out.keys.push_back(key);
  std::sort(out.keys.begin(), out.keys.end());
  out.values.resize(out.keys.size());
  for (const auto& [key, v] : table)
    out.values[static_cast<std::size_t>(out.index_of(key))] = v;
  return out;
}

void require_1d_safe_ssf(const SftSpace& sft, const char* who) {
  if (sft.dimension() != 1)
    throw InputError(std::string(who) + ": one-dimensional only");
  if (!sft.asserted().safe_symbol)
    throw InputError(std::string(who) + ": needs a declared safe symbol");
  if (!sft.asserted().ssf && !sft.forbidden().empty())
    throw InputError(std::string(who) + ": needs an ssf assertion");
}

}  // namespace

NormReport sullivan_diff_norm_1d(const FillContext& ctx,
                                 const Interaction& phi, int n,
                                 const Cocycle& psi,
                                 const EnumBudget& budget) {
  const SftSpace& sft = *ctx.sft;
  require_1d_safe_ssf(sft, "sullivan_diff_norm_1d");
  const Symbol safe = *sft.asserted().safe_symbol;
  Shape fn = Shape::interval(-n, n);
  const int width = 2 * n + 1;

  std::vector<Pattern> words = language(sft, fn, 0, budget);
  WordTable table = table_of(phi, fn);
  if (words.size() != table.keys.size())
    throw ConsistencyError("sullivan_diff_norm_1d: table/language mismatch");

  auto base = psi.sullivan_base();
  if (!base || !base->subset_of(fn))
    throw InputError(
        "sullivan_diff_norm_1d: cocycle dependence must fit inside the "
        "window");

  // Successors: word on [k-n, k+n] -> word on [k+1-n, k+1+n].
  const long long count = static_cast<long long>(table.keys.size());
  const int nsym = sft.num_symbols();
  std::vector<long long> successors(count * nsym, -1);
  parallel_for(count, default_workers(), [&](long long i) {
    const std::string& key = table.keys[static_cast<std::size_t>(i)];
    std::string shifted = key.substr(1) + std::string(1, '\0');
    for (int a = 0; a < nsym; ++a) {
      shifted.back() = static_cast<char>(a);
      successors[i * nsym + a] = table.index_of(shifted);
    }
  });

  // h(word) = ψ(x, ζ0 x) read from the k = 0 window.
  Configuration env(Background::uniform(safe));
  std::vector<double> h(count, 0.0);
  parallel_for(count, default_workers(), [&](long long i) {
    const std::string& key = table.keys[static_cast<std::size_t>(i)];
    std::vector<Symbol> syms(key.begin(), key.end());
    Configuration x = env.with(Pattern(fn, std::move(syms))).compacted();
    Configuration zx = zeta(sft, x, {0, 0});
    if (!(x == zx)) h[i] = psi.eval(AsymptoticPair::make(x, zx));
  });

  // term_k(word) = Φ[word flipped at position n-k to the ζ symbol] − Φ[word].
  auto term = [&](long long idx, int k) -> double {
    const std::string& key = table.keys[static_cast<std::size_t>(idx)];
    int pos = n - k;
    if (static_cast<Symbol>(key[pos]) == safe) return 0.0;
    std::string flipped = key;
    flipped[pos] = static_cast<char>(safe);
    long long j = table.index_of(flipped);
    if (j < 0)
      throw ConsistencyError("sullivan_diff_norm_1d: safe flip left language");
    return table.values[static_cast<std::size_t>(j)] -
           table.values[static_cast<std::size_t>(idx)];
  };

  const double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> hi(count), lo(count), hi_next(count), lo_next(count);
  for (long long i = 0; i < count; ++i) {
    double t = term(i, -n);
    hi[i] = t;
    lo[i] = t;
  }
  for (int k = -n; k < n; ++k) {
    std::fill(hi_next.begin(), hi_next.end(), -kInf);
    std::fill(lo_next.begin(), lo_next.end(), kInf);
    for (long long i = 0; i < count; ++i) {
      if (hi[i] == -kInf) continue;
      for (int a = 0; a < nsym; ++a) {
        long long j = successors[i * nsym + a];
        if (j < 0) continue;
        hi_next[j] = std::max(hi_next[j], hi[i]);
        lo_next[j] = std::min(lo_next[j], lo[i]);
      }
    }
    for (long long j = 0; j < count; ++j) {
      if (hi_next[j] == -kInf) continue;
      double t = term(j, k + 1);
      if (k + 1 == 0) {
        // Subtract ψ(x, ζ0 x) once, read off the centered window.
        t -= h[j];
      }
      hi_next[j] += t;
      lo_next[j] += t;
    }
    hi.swap(hi_next);
    lo.swap(lo_next);
  }

  NormReport report;
  report.mode = NormMode::Exact;
  report.enumerated = count * width;
  double top = -kInf, bottom = kInf;
  for (long long i = 0; i < count; ++i) {
    if (hi[i] == -kInf) continue;
    top = std::max(top, hi[i]);
    bottom = std::min(bottom, lo[i]);
  }
  report.value = std::max(std::abs(top), std::abs(bottom));
  report.note = "sliding-window dynamic program over " +
                std::to_string(count) + " words";
  return report;
}

NormReport norm_vs_single_class_1d(const Interaction& phi, const SftSpace& sft,
                                   int workers) {
  require_1d_safe_ssf(sft, "norm_vs_single_class_1d");
  const auto& [shape, table_map] = *phi.entries().begin();
  WordTable table = table_of(phi, shape);
  const int width = static_cast<int>(shape.size());
  const int nsym = sft.num_symbols();
  const long long count = static_cast<long long>(table.keys.size());

  std::vector<double> var = parallel_reduce<std::vector<double>>(
      count, workers, std::vector<double>(width, 0.0),
      [&](long long i, std::vector<double>& acc) {
        const std::string& key = table.keys[static_cast<std::size_t>(i)];
        std::string probe = key;
        for (int s = 0; s < width; ++s) {
          for (int a = 0; a < nsym; ++a) {
            if (static_cast<char>(a) == key[s]) continue;
            probe[s] = static_cast<char>(a);
            long long j = table.index_of(probe);
            if (j >= 0)
              acc[s] = std::max(
                  acc[s], std::abs(table.values[static_cast<std::size_t>(i)] -
                                   table.values[static_cast<std::size_t>(j)]));
          }
          probe[s] = key[s];
        }
      },
      [](std::vector<double>& out, const std::vector<double>& in) {
        for (std::size_t s = 0; s < out.size(); ++s)
          out[s] = std::max(out[s], in[s]);
      });

  NormReport report;
  report.mode = NormMode::Exact;
  report.enumerated = count * width;
  for (double v : var) report.value += v;
  return report;
}

std::vector<SullivanSweepRow> sullivan_sweep(const FillContext& ctx,
                                             const Cocycle& psi, int n_min,
                                             int n_max, int workers,
                                             const EnumBudget& budget) {
  NormReport sull_psi = norm_sullivan(psi, {.budget = budget});
  std::vector<SullivanSweepRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    Interaction phi = sullivan_interaction(ctx, psi, n, 0, budget);
    SullivanSweepRow row;
    row.n = n;
    row.vs_phi = norm_vs_single_class_1d(phi, *ctx.sft, workers).value;
    row.sull_psi = sull_psi.value;
    row.sull_diff = sullivan_diff_norm_1d(ctx, phi, n, psi, budget).value;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace gibbslab
