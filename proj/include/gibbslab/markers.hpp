// Marker words: randomized search and exhaustive verification of the
// Hamming-separation and balanced-count conditions, the clamp interaction
// built from a certified pair, and its pattern-sum cocycle.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gibbslab/cocycle.hpp"
#include "gibbslab/config.hpp"
#include "gibbslab/rng.hpp"

namespace gibbslab {

// Fixed-length binary word, bit-packed; index 0 is the least significant bit
// of block 0.
class BitWord {
 public:
  BitWord() = default;
  explicit BitWord(int n);
  static BitWord random(int n, CounterRng& rng);
  static BitWord parse(const std::string& bits);

  int length() const { return n_; }
  bool get(int i) const { return (blocks_[i >> 6] >> (i & 63)) & 1; }
  void set(int i, bool b);
  int popcount() const;
  std::string str() const;

  // Shift the word by one position (towards lower indices), feeding `incoming`
  // at the top. Used for sliding windows.
  void slide(bool incoming);

  // The length-n window starting at offset j (w_i = a_{i+j}), zero-padded.
  BitWord window_from(int j) const;

  friend int ham(const BitWord& a, const BitWord& b);
  // Ham of the zero-padded shift: window w_i = a_{i+j} (0 when out of range)
  // against b.
  friend int ham_shifted(const BitWord& a, int j, const BitWord& b);
  friend bool operator==(const BitWord&, const BitWord&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> blocks_;
  void mask_top();
};

struct MarkerParams {
  int k = 2;
  int n = 0;
  double delta = 0.5;
  double epsilon = 0.0;
  int K_const = 16;
  std::uint64_t seed = 0;

  // The schedule 1/(k^2 2^k) used by the asymptotic construction.
  static double epsilon_schedule(int k);
};

struct MarkerVerifyReport {
  bool condition_a = false;
  bool condition_b = false;
  bool full = false;  // exhaustive shape enumeration (k <= 3)
  long long shapes_checked = 0;
  std::string failure;  // first violation, empty when certified
  bool passed() const { return condition_a && condition_b; }
};

struct MarkerData {
  MarkerParams params;
  BitWord u, v;
  MarkerVerifyReport certified;
};

struct MarkerSearchReport {
  bool found = false;
  long long attempts = 0;  // candidates consumed (index of success + 1)
  MarkerData data;
};

// Exact Δ_w over an index interval [lo, hi] (whole line when omitted),
// restricted to shifts where the moved shape meets the disagreement.
long long delta_count(const Pattern& w, const AsymptoticPair& pair);
long long delta_count(const Pattern& w, long long lo, long long hi,
                      const AsymptoticPair& pair);

// Exhaustive verification of the marker conditions for k <= 3; Monte Carlo
// over `mc_shapes` sampled shapes for larger k (reported as partial).
MarkerVerifyReport verify_markers(const MarkerParams& params, const BitWord& u,
                                  const BitWord& v, int workers = 1,
                                  long long mc_shapes = 20000);

// Seeded i.i.d. search; first (lowest-index) fully certified candidate wins.
MarkerSearchReport search_markers(const MarkerParams& params,
                                  long long max_attempts, int workers = 1);

// Φ of an n-bit window: max{0, n − K·Ham(w,u)} − max{0, n − K·Ham(w,v)}.
long long marker_phi(const MarkerData& data, const BitWord& window);

// The same clamp observable as a local function with base [0, n-1].
LocalFunction marker_interaction(const MarkerData& data);

// ψ_k over finitely-supported binary pairs, exact integers (sliding windows).
long long psi_k(const MarkerData& data, const AsymptoticPair& pair);

// ψ_k packaged as a cocycle (generic evaluation path, for cross-checks).
Cocycle psi_k_cocycle(const SftSpace& sft, const MarkerData& data);

// The padded configurations x = u·0^∞, y = v·0^∞ as an asymptotic pair.
AsymptoticPair marker_pair(const MarkerData& data);

struct SampleCheckReport {
  bool passed = true;
  long long samples = 0;
  long long worst = 0;      // extremal value seen (context-dependent)
  std::string note;
};

// Seeded lower-bound sampling of sup |ψ_k(x, ζ0 x)| over single-site pairs;
// `worst` is the largest |ψ_k| seen, `passed` means it stayed within the
// structural bound 68·K.
SampleCheckReport marker_sullivan_sample(const MarkerData& data,
                                         long long samples, std::uint64_t seed,
                                         int workers = 1);

// At most one of the two clamp terms positive, over u, v and sampled words.
SampleCheckReport check_ci1(const MarkerData& data, long long samples,
                            std::uint64_t seed, int workers = 1);

struct NonsurjectivityBudgets {
  long long attempts = 100000;
  long long sull_samples = 100000;
  long long safe_samples = 10000;
  int workers = 1;
};

struct NonsurjectivityRow {
  int k = 0;
  int n = 0;
  double epsilon = 0.0;
  bool found = false;
  long long attempts = 0;
  long long psi_value = 0;       // ψ_k on the padded marker pair
  double dual_lower = 0.0;       // budgeted word-count proxy
  std::string dual_witness;
  double dual_bound = 0.0;       // the structural bound 6n/k
  long long sull_sample_max = 0;
  long long sull_bound = 0;      // 68·K
  bool safe_ok = false;
  bool ok = false;  // linear value, bounded samples, small proxy, safe shifts
};

// One row per requested parameter set: searches (or reuses) a certified pair
// and evaluates the three non-surjectivity conditions at desk scale.
std::vector<NonsurjectivityRow> nonsurjectivity_report(
    const std::vector<MarkerParams>& per_k,
    const NonsurjectivityBudgets& budgets);

// For sampled z with Φ(z) != 0: Φ(σ^j z) = 0 for all 0 < |j| <= n/8,
// exhaustive in j. Samples are corruptions of u and v within the clamp radius.
SampleCheckReport check_safe_interval(const MarkerData& data,
                                      long long samples, std::uint64_t seed,
                                      int workers = 1);

}  // namespace gibbslab
