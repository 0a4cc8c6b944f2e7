// Shift-invariant interaction from a cocycle by window splicing, plus exact
// sliding-window evaluation of Sullivan norms for the spliced family on
// one-dimensional safe-symbol spaces.
#pragma once

#include "gibbslab/cocycle.hpp"
#include "gibbslab/fill.hpp"
#include "gibbslab/norms.hpp"

namespace gibbslab {

// Φ^n supported on translates of the box of radius n; the entry value of a
// window pattern w is ψ(z(w,n), anchor) / |F_n|. Safe-symbol spaces with a
// uniform safe anchor take the direct padding shortcut (the greedy fill
// writes the safe symbol anyway).
Interaction sullivan_interaction(const FillContext& ctx, const Cocycle& psi,
                                 int n, int halo = 0,
                                 const EnumBudget& budget = {});

// Exact ‖ψ_Φ − ψ‖_Sull for a single-class interaction whose entry shape is an
// interval, on a 1D safe-symbol single-site-fillable space, via a max/min
// dynamic program over sliding admissible windows. `phi` must be the
// shift-invariant output of sullivan_interaction (entry shape of size 2n+1).
NormReport sullivan_diff_norm_1d(const FillContext& ctx,
                                 const Interaction& phi, int n,
                                 const Cocycle& psi,
                                 const EnumBudget& budget = {});

// Exact Σ_s Var_s for a single-class interaction on a 1D safe-symbol
// single-site-fillable space (flip-pair enumeration over the entry table).
NormReport norm_vs_single_class_1d(const Interaction& phi,
                                   const SftSpace& sft, int workers = 1);

struct SullivanSweepRow {
  int n = 0;
  double vs_phi = 0.0;
  double sull_psi = 0.0;
  double sull_diff = 0.0;
};

// The n-sweep behind the builder report: norm_vs(Φ^n), ‖ψ‖_Sull and
// ‖ψ_{Φ^n} − ψ‖_Sull per n.
std::vector<SullivanSweepRow> sullivan_sweep(const FillContext& ctx,
                                             const Cocycle& psi, int n_min,
                                             int n_max, int workers = 1,
                                             const EnumBudget& budget = {});

}  // namespace gibbslab
