// Interaction and cocycle norms, and the word-count lower bound for the dual
// of the summable-interaction norm.
#pragma once

#include <optional>
#include <string>

#include "gibbslab/cocycle.hpp"
#include "gibbslab/interaction.hpp"

namespace gibbslab {

enum class NormMode { Exact, LowerBound, UpperBound };

std::string to_string(NormMode mode);

struct NormReport {
  double value = 0.0;
  NormMode mode = NormMode::Exact;
  std::optional<Pattern> witness;  // pattern or shape attaining the value
  std::string note;
  long long enumerated = 0;
  long long samples = 0;
};

// Σ over origin-containing placements of sup |Φ_C| (per entry class:
// |shape| · max over admissible patterns). Exact on single-site-fillable or
// unconstrained spaces; an upper bound otherwise (the halo may overcount).
NormReport norm_ns(const Interaction& phi, const SftSpace& sft, int halo = 1,
                   const EnumBudget& budget = {});

// Σ over origin-containing placements of the single-site variation at 0.
NormReport norm_vs(const Interaction& phi, const SftSpace& sft, int halo = 1,
                   const EnumBudget& budget = {});

struct SullivanOptions {
  bool exact = true;        // enumerate the dependence window
  long long samples = 0;    // sampling fallback / supplement
  std::uint64_t seed = 0;
  int halo = 1;
  int workers = 1;
  EnumBudget budget;
};

// sup_x |ψ(x, ζ0 x)|. Exact mode enumerates admissible patterns on the
// declared dependence shape (safe-symbol and unconstrained spaces); sample
// mode reports a seeded lower bound.
NormReport norm_sullivan(const Cocycle& psi, const SullivanOptions& opts = {});

struct DualNormBudget {
  int max_size = 3;          // sparse shapes: |A| <= max_size
  int max_diameter = 0;      // sparse shapes: diameter bound
  int intervals_up_to = 0;   // contiguous intervals: |A| <= this
  int workers = 1;
};

// Certified lower bound for sup_A (1/|A|) Σ_w |Δ_w(x,y)| over the declared
// shape budget. One-dimensional full shift over zero background only.
NormReport dual_ns_norm(const AsymptoticPair& pair, const SftSpace& sft,
                        const DualNormBudget& budget);

}  // namespace gibbslab
