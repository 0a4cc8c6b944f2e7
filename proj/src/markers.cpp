#include "gibbslab/markers.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>

#include "gibbslab/norms.hpp"
#include "gibbslab/parallel.hpp"
#include "gibbslab/zoo.hpp"

namespace gibbslab {

BitWord::BitWord(int n) : n_(n), blocks_((n + 63) / 64, 0) {}

BitWord BitWord::random(int n, CounterRng& rng) {
  BitWord w(n);
  for (auto& b : w.blocks_) b = rng.next();
  w.mask_top();
  return w;
}

BitWord BitWord::parse(const std::string& bits) {
  BitWord w(static_cast<int>(bits.size()));
  for (int i = 0; i < w.n_; ++i) {
    if (bits[i] != '0' && bits[i] != '1')
      throw InputError("BitWord::parse: expected 0/1");
    w.set(i, bits[i] == '1');
  }
  return w;
}

void BitWord::set(int i, bool b) {
  std::uint64_t mask = 1ULL << (i & 63);
  if (b)
    blocks_[i >> 6] |= mask;
  else
    blocks_[i >> 6] &= ~mask;
}

void BitWord::mask_top() {
  int rem = n_ & 63;
  if (rem != 0 && !blocks_.empty()) blocks_.back() &= (1ULL << rem) - 1;
}

int BitWord::popcount() const {
  int c = 0;
  for (std::uint64_t b : blocks_) c += std::popcount(b);
  return c;
}

std::string BitWord::str() const {
  std::string s(n_, '0');
  for (int i = 0; i < n_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

void BitWord::slide(bool incoming) {
  for (std::size_t b = 0; b + 1 < blocks_.size(); ++b)
    blocks_[b] = (blocks_[b] >> 1) | (blocks_[b + 1] << 63);
  if (!blocks_.empty()) blocks_.back() >>= 1;
  if (incoming) set(n_ - 1, true);
}

int ham(const BitWord& a, const BitWord& b) {
  int c = 0;
  for (std::size_t i = 0; i < a.blocks_.size(); ++i)
    c += std::popcount(a.blocks_[i] ^ b.blocks_[i]);
  return c;
}

BitWord BitWord::window_from(int j) const {
  const int n = n_;
  BitWord w(n);
  if (j >= n || j <= -n) return w;
  const int nblocks = static_cast<int>(blocks_.size());
  if (j >= 0) {
    int bs = j >> 6, br = j & 63;
    for (int i = 0; i + bs < nblocks; ++i) {
      std::uint64_t lo = blocks_[i + bs] >> br;
      std::uint64_t hi =
          (br && i + bs + 1 < nblocks) ? blocks_[i + bs + 1] << (64 - br) : 0;
      w.blocks_[i] = lo | hi;
    }
  } else {
    int k = -j;
    int bs = k >> 6, br = k & 63;
    for (int i = nblocks - 1; i - bs >= 0; --i) {
      std::uint64_t hi = blocks_[i - bs] << br;
      std::uint64_t lo =
          (br && i - bs - 1 >= 0) ? blocks_[i - bs - 1] >> (64 - br) : 0;
      w.blocks_[i] = hi | lo;
    }
  }
  w.mask_top();
  return w;
}

int ham_shifted(const BitWord& a, int j, const BitWord& b) {
  return ham(a.window_from(j), b);
}

double MarkerParams::epsilon_schedule(int k) {
  return 1.0 / (static_cast<double>(k) * k * std::pow(2.0, k));
}

long long delta_count(const Pattern& w, const AsymptoticPair& pair) {
  long long sum = 0;
  Shape anchors = minkowski_diff(pair.disagreement, w.shape());
  for (Site j : anchors.sites()) {
    Shape window = w.shape().translated(j);
    bool in_y = pair.right.window(window).symbols() == w.symbols();
    bool in_x = pair.left.window(window).symbols() == w.symbols();
    sum += (in_y ? 1 : 0) - (in_x ? 1 : 0);
  }
  return sum;
}

long long delta_count(const Pattern& w, long long lo, long long hi,
                      const AsymptoticPair& pair) {
  long long sum = 0;
  Shape anchors = minkowski_diff(pair.disagreement, w.shape());
  for (Site j : anchors.sites()) {
    if (j.x < lo || j.x > hi) continue;
    Shape window = w.shape().translated(j);
    bool in_y = pair.right.window(window).symbols() == w.symbols();
    bool in_x = pair.left.window(window).symbols() == w.symbols();
    sum += (in_y ? 1 : 0) - (in_x ? 1 : 0);
  }
  return sum;
}

namespace {

// Max over intervals I of |Δ_w^I| for every word w on shape D (offsets from
// 0), against the zero-padded configurations of u and v. Returns the largest
// spread over all words, or immediately reports a violation of `limit`.
struct ShapeScan {
  long long worst = 0;
  int bad_word = -1;
};

ShapeScan scan_shape(const BitWord& u, const BitWord& v,
                     const std::vector<int>& offsets, double limit) {
  const int n = u.length();
  const int m = static_cast<int>(offsets.size());
  const int words = 1 << m;
  // Per-word running prefix sum and its extremes (prefix 0 included).
  std::vector<int> run(words, 0), lo(words, 0), hi(words, 0);
  const int max_off = offsets.back();
  ShapeScan out;
  for (int i = -max_off; i <= n - 1; ++i) {
    int wx = 0, wy = 0;
    for (int t = 0; t < m; ++t) {
      int p = i + offsets[t];
      bool bx = p >= 0 && p < n && u.get(p);
      bool by = p >= 0 && p < n && v.get(p);
      wx |= bx << t;
      wy |= by << t;
    }
    if (wx == wy) continue;
    run[wy] += 1;
    hi[wy] = std::max(hi[wy], run[wy]);
    lo[wy] = std::min(lo[wy], run[wy]);
    run[wx] -= 1;
    hi[wx] = std::max(hi[wx], run[wx]);
    lo[wx] = std::min(lo[wx], run[wx]);
  }
  for (int w = 0; w < words; ++w) {
    long long spread = static_cast<long long>(hi[w]) - lo[w];
    if (spread > out.worst) {
      out.worst = spread;
      if (static_cast<double>(spread) >= limit) {
        out.bad_word = w;
        return out;
      }
    }
  }
  return out;
}

std::string word_str(int bits, int m) {
  std::string s(m, '0');
  for (int t = 0; t < m; ++t)
    if ((bits >> t) & 1) s[t] = '1';
  return s;
}

std::string offsets_str(const std::vector<int>& offsets) {
  std::string s = "{";
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(offsets[i]);
  }
  return s + "}";
}

// Canonical shapes: 0 = min(D), |D| <= k, D ⊆ [0, n-1].
std::vector<std::vector<int>> canonical_shapes(int n, int k) {
  std::vector<std::vector<int>> shapes;
  shapes.push_back({0});
  if (k >= 2)
    for (int d = 1; d < n; ++d) shapes.push_back({0, d});
  if (k >= 3)
    for (int d1 = 1; d1 < n; ++d1)
      for (int d2 = d1 + 1; d2 < n; ++d2) shapes.push_back({0, d1, d2});
  return shapes;
}

bool check_condition_a(const MarkerParams& params, const BitWord& u,
                       const BitWord& v, std::string* failure) {
  const int n = params.n;
  const double threshold = (1.0 - params.delta) * n / 2.0;
  if (!(ham(u, v) > threshold)) {
    if (failure) *failure = "Ham(u,v) = " + std::to_string(ham(u, v));
    return false;
  }
  for (int j = -n; j <= n; ++j) {
    if (j == 0) continue;
    int h[4] = {ham_shifted(u, j, u), ham_shifted(u, j, v),
                ham_shifted(v, j, u), ham_shifted(v, j, v)};
    for (int t = 0; t < 4; ++t)
      if (!(h[t] > threshold)) {
        if (failure)
          *failure = "shift-overlap at j=" + std::to_string(j) +
                     " case " + std::to_string(t) + ": Ham=" +
                     std::to_string(h[t]);
        return false;
      }
  }
  return true;
}

}  // namespace

MarkerVerifyReport verify_markers(const MarkerParams& params, const BitWord& u,
                                  const BitWord& v, int workers,
                                  long long mc_shapes) {
  if (params.n < 4) throw InputError("verify_markers: n >= 4 required");
  if (u.length() != params.n || v.length() != params.n)
    throw InputError("verify_markers: word length != n");
  MarkerVerifyReport report;
  report.condition_a = check_condition_a(params, u, v, &report.failure);
  if (!report.condition_a) return report;

  const double limit = params.epsilon * params.n;
  if (params.k <= 3) {
    auto shapes = canonical_shapes(params.n, params.k);
    report.full = true;
    std::atomic<long long> bad_index{-1};
    std::atomic<long long> checked{0};
    parallel_for(static_cast<long long>(shapes.size()), workers,
                 [&](long long i) {
                   long long bad = bad_index.load(std::memory_order_relaxed);
                   if (bad >= 0 && bad < i) return;
                   ShapeScan scan = scan_shape(u, v, shapes[i], limit);
                   checked.fetch_add(1, std::memory_order_relaxed);
                   if (scan.bad_word >= 0) {
                     long long cur = bad_index.load();
                     while ((cur < 0 || cur > i) &&
                            !bad_index.compare_exchange_weak(cur, i)) {
                     }
                   }
                 });
    report.shapes_checked = checked.load();
    if (bad_index.load() >= 0) {
      const auto& d = shapes[static_cast<std::size_t>(bad_index.load())];
      ShapeScan scan = scan_shape(u, v, d, limit);
      report.failure = "count condition at shape " + offsets_str(d) +
                       " word " + word_str(scan.bad_word, (int)d.size()) +
                       ": max interval |delta| = " + std::to_string(scan.worst);
      return report;
    }
    report.condition_b = true;
    return report;
  }

  // k > 3: Monte Carlo over sampled shapes; reported as partial.
  CounterRng rng(params.seed, /*stream=*/0x5ca1ab1e);
  report.full = false;
  for (long long s = 0; s < mc_shapes; ++s) {
    int m = 2 + static_cast<int>(rng.next_below(params.k - 1));
    std::vector<int> offsets{0};
    while (static_cast<int>(offsets.size()) < m) {
      int d = 1 + static_cast<int>(rng.next_below(params.n - 1));
      if (std::find(offsets.begin(), offsets.end(), d) == offsets.end())
        offsets.push_back(d);
    }
    std::sort(offsets.begin(), offsets.end());
    ShapeScan scan = scan_shape(u, v, offsets, limit);
    ++report.shapes_checked;
    if (scan.bad_word >= 0) {
      report.failure = "count condition at sampled shape " +
                       offsets_str(offsets) + ": max interval |delta| = " +
                       std::to_string(scan.worst);
      return report;
    }
  }
  report.condition_b = true;
  return report;
}

MarkerSearchReport search_markers(const MarkerParams& params,
                                  long long max_attempts, int workers) {
  if (params.n < 4) throw InputError("search_markers: n >= 4 required");
  MarkerSearchReport report;
  std::atomic<long long> winner{-1};

  auto try_candidate = [&](long long index) -> bool {
    CounterRng ru(params.seed, static_cast<std::uint64_t>(2 * index));
    CounterRng rv(params.seed, static_cast<std::uint64_t>(2 * index + 1));
    BitWord u = BitWord::random(params.n, ru);
    BitWord v = BitWord::random(params.n, rv);
    MarkerVerifyReport check = verify_markers(params, u, v, 1);
    return check.passed();
  };

  parallel_for(max_attempts, workers, [&](long long i) {
    long long w = winner.load(std::memory_order_relaxed);
    if (w >= 0 && w < i) return;
    if (try_candidate(i)) {
      long long cur = winner.load();
      while ((cur < 0 || cur > i) && !winner.compare_exchange_weak(cur, i)) {
      }
    }
  });

  long long found = winner.load();
  if (found < 0) {
    report.found = false;
    report.attempts = max_attempts;
    return report;
  }
  report.found = true;
  report.attempts = found + 1;
  CounterRng ru(params.seed, static_cast<std::uint64_t>(2 * found));
  CounterRng rv(params.seed, static_cast<std::uint64_t>(2 * found + 1));
  report.data.params = params;
  report.data.u = BitWord::random(params.n, ru);
  report.data.v = BitWord::random(params.n, rv);
  report.data.certified =
      verify_markers(params, report.data.u, report.data.v, workers);
  return report;
}

long long marker_phi(const MarkerData& data, const BitWord& window) {
  const long long n = data.params.n;
  const long long K = data.params.K_const;
  long long a = std::max<long long>(0, n - K * ham(window, data.u));
  long long b = std::max<long long>(0, n - K * ham(window, data.v));
  return a - b;
}

LocalFunction marker_interaction(const MarkerData& data) {
  const int n = data.params.n;
  LocalFunction f;
  f.base = Shape::interval(0, n - 1);
  MarkerData copy = data;
  auto eval = [copy, n](const Pattern& p) -> long long {
    BitWord w(n);
    for (int i = 0; i < n; ++i) w.set(i, p.at({i, 0}) == 1);
    return marker_phi(copy, w);
  };
  f.fn_int = eval;
  f.fn = [eval](const Pattern& p) { return static_cast<double>(eval(p)); };
  return f;
}

long long psi_k(const MarkerData& data, const AsymptoticPair& pair) {
  if (pair.disagreement.empty()) return 0;
  const int n = data.params.n;
  const Shape& d = pair.disagreement;
  const int lo = d.min_site().x, hi = d.max_site().x;
  // Windows [j, j+n) differ only for j in [lo-n+1, hi].
  const int j0 = lo - n + 1, j1 = hi;
  BitWord wx(n), wy(n);
  for (int i = 0; i < n; ++i) {
    wx.set(i, pair.left.at({j0 + i, 0}) == 1);
    wy.set(i, pair.right.at({j0 + i, 0}) == 1);
  }
  long long sum = 0;
  for (int j = j0;; ++j) {
    sum += marker_phi(data, wy) - marker_phi(data, wx);
    if (j == j1) break;
    wx.slide(pair.left.at({j + n, 0}) == 1);
    wy.slide(pair.right.at({j + n, 0}) == 1);
  }
  return sum;
}

Cocycle psi_k_cocycle(const SftSpace& sft, const MarkerData& data) {
  return Cocycle::local_sum(sft, marker_interaction(data));
}

AsymptoticPair marker_pair(const MarkerData& data) {
  Configuration x, y;
  for (int i = 0; i < data.params.n; ++i) {
    if (data.u.get(i)) x = x.with(Site{i, 0}, 1);
    if (data.v.get(i)) y = y.with(Site{i, 0}, 1);
  }
  return AsymptoticPair::make(std::move(x), std::move(y));
}

SampleCheckReport marker_sullivan_sample(const MarkerData& data,
                                         long long samples, std::uint64_t seed,
                                         int workers) {
  const int n = data.params.n;
  // The flip sits at site 0; windows [j, j+n) differ for j in [-n+1, 0], and
  // those windows read sites [-n+1, n-1]. Sample that stretch.
  const int w0 = -n + 1, w1 = n - 1;
  const int width = w1 - w0 + 1;

  auto eval_sample = [&](long long i) -> long long {
    CounterRng rng(seed, static_cast<std::uint64_t>(i));
    BitWord stretch(width);
    switch (i % 4) {
      case 0:  // uniform random surroundings
        stretch = BitWord::random(width, rng);
        break;
      case 1:
      case 2: {  // a corrupted marker word placed at a random offset
        const BitWord& base = (i % 4 == 1) ? data.u : data.v;
        int offset = static_cast<int>(rng.next_below(width));
        for (int t = 0; t < n; ++t) {
          int p = offset + t;
          if (p < width && base.get(t)) stretch.set(p, true);
        }
        long long flips = rng.next_below(std::max(4, n / 8));
        for (long long f = 0; f < flips; ++f) {
          int p = static_cast<int>(rng.next_below(width));
          stretch.set(p, !stretch.get(p));
        }
        break;
      }
      case 3:  // sparse noise
        for (int t = 0; t < width; ++t)
          if (rng.next_below(8) == 0) stretch.set(t, true);
        break;
    }
    // x reads `stretch` over [w0, w1]; y flips site 0 (position -w0).
    BitWord flipped = stretch;
    flipped.set(-w0, !flipped.get(-w0));
    // Sliding n-windows over both sides, j from -n+1 up to 0.
    BitWord tx(n), ty(n);
    for (int t = 0; t < n; ++t) {
      if (stretch.get(t)) tx.set(t, true);
      if (flipped.get(t)) ty.set(t, true);
    }
    long long sum = 0;
    for (int j = -n + 1;; ++j) {
      sum += marker_phi(data, ty) - marker_phi(data, tx);
      if (j == 0) break;
      int incoming = j + n - w0;  // stretch index of site j + n
      bool bit = incoming < width && stretch.get(incoming);
      tx.slide(bit);
      ty.slide(incoming < width && flipped.get(incoming));
    }
    return sum;
  };

  const long long bound = 68LL * data.params.K_const;
  struct Acc {
    long long worst = 0;
    bool ok = true;
  };
  Acc acc = parallel_reduce<Acc>(
      samples, workers, Acc{},
      [&](long long i, Acc& a) {
        long long v = std::llabs(eval_sample(i));
        a.worst = std::max(a.worst, v);
        if (v > bound) a.ok = false;
      },
      [](Acc& out, const Acc& in) {
        out.worst = std::max(out.worst, in.worst);
        out.ok = out.ok && in.ok;
      });
  SampleCheckReport report;
  report.samples = samples;
  report.worst = acc.worst;
  report.passed = acc.ok;
  report.note = "bound 68K = " + std::to_string(bound);
  return report;
}

SampleCheckReport check_ci1(const MarkerData& data, long long samples,
                            std::uint64_t seed, int workers) {
  const long long n = data.params.n;
  const long long K = data.params.K_const;
  auto both_positive = [&](const BitWord& w) {
    return n - K * ham(w, data.u) > 0 && n - K * ham(w, data.v) > 0;
  };
  SampleCheckReport report;
  report.note = "clamp terms simultaneously positive: never";
  if (both_positive(data.u) || both_positive(data.v)) {
    report.passed = false;
    return report;
  }
  std::atomic<bool> ok{true};
  parallel_for(samples, workers, [&](long long i) {
    if (!ok.load(std::memory_order_relaxed)) return;
    CounterRng rng(seed, static_cast<std::uint64_t>(i));
    // Mix uniform words with corruptions of u and v (the nonzero region).
    BitWord w(0);
    switch (i % 3) {
      case 0:
        w = BitWord::random(data.params.n, rng);
        break;
      case 1:
      case 2: {
        w = (i % 3 == 1) ? data.u : data.v;
        long long flips = rng.next_below(std::max<long long>(1, n / K));
        for (long long f = 0; f < flips; ++f) {
          int p = static_cast<int>(rng.next_below(n));
          w.set(p, !w.get(p));
        }
        break;
      }
    }
    if (both_positive(w)) ok.store(false, std::memory_order_relaxed);
  });
  report.samples = samples + 2;
  report.passed = ok.load();
  return report;
}

std::vector<NonsurjectivityRow> nonsurjectivity_report(
    const std::vector<MarkerParams>& per_k,
    const NonsurjectivityBudgets& budgets) {
  static const SftSpace full = full_shift(2, 1);
  std::vector<NonsurjectivityRow> rows;
  for (const MarkerParams& params : per_k) {
    NonsurjectivityRow row;
    row.k = params.k;
    row.n = params.n;
    row.epsilon = params.epsilon;
    MarkerSearchReport search =
        search_markers(params, budgets.attempts, budgets.workers);
    row.found = search.found;
    row.attempts = search.attempts;
    if (!search.found) {
      rows.push_back(row);
      continue;
    }
    const MarkerData& data = search.data;
    AsymptoticPair pair = marker_pair(data);
    row.psi_value = psi_k(data, pair);

    DualNormBudget db;
    db.max_size = std::min(params.k + 1, 3);
    db.max_diameter = 2 * params.n;
    db.intervals_up_to = 3 * params.n;
    db.workers = budgets.workers;
    NormReport dual = dual_ns_norm(pair, full, db);
    row.dual_lower = dual.value;
    row.dual_witness = dual.note;
    row.dual_bound = 6.0 * params.n / params.k;

    SampleCheckReport sull = marker_sullivan_sample(
        data, budgets.sull_samples, params.seed, budgets.workers);
    row.sull_sample_max = sull.worst;
    row.sull_bound = 68LL * params.K_const;

    SampleCheckReport safe = check_safe_interval(
        data, budgets.safe_samples, params.seed, budgets.workers);
    row.safe_ok = safe.passed;

    row.ok = row.psi_value == -2LL * params.n &&
             row.dual_lower <= row.dual_bound &&
             sull.passed && safe.passed;
    rows.push_back(row);
  }
  return rows;
}

SampleCheckReport check_safe_interval(const MarkerData& data,
                                      long long samples, std::uint64_t seed,
                                      int workers) {
  const int n = data.params.n;
  const int safe_radius = n / 8;
  SampleCheckReport report;
  report.note = "safe interval radius " + std::to_string(safe_radius);
  std::atomic<bool> ok{true};
  std::atomic<long long> used{0};

  parallel_for(samples, workers, [&](long long i) {
    if (!ok.load(std::memory_order_relaxed)) return;
    CounterRng rng(seed, static_cast<std::uint64_t>(i));
    // Corrupt u or v within Hamming radius n/K - 1 so the clamp stays nonzero.
    BitWord base = (i % 2 == 0) ? data.u : data.v;
    long long flips =
        rng.next_below(std::max<long long>(1, n / data.params.K_const));
    for (long long f = 0; f < flips; ++f) {
      int p = static_cast<int>(rng.next_below(n));
      base.set(p, !base.get(p));
    }
    if (marker_phi(data, base) == 0) return;  // vacuous sample
    used.fetch_add(1, std::memory_order_relaxed);
    // z = padded base; the window of σ^j z over [0,n) is base shifted by j.
    for (int j = -safe_radius; j <= safe_radius; ++j) {
      if (j == 0) continue;
      if (marker_phi(data, base.window_from(j)) != 0) {
        ok.store(false, std::memory_order_relaxed);
        return;
      }
    }
  });
  report.samples = used.load();
  report.passed = ok.load();
  return report;
}

}  // namespace gibbslab
