// Partial-extension builders: reconstruct interactions from Markov (or
// continuity-moduled) cocycles on a windowed space, exactly on pairs moving
// inside a target region.
#pragma once

#include <vector>

#include "gibbslab/cocycle.hpp"

namespace gibbslab {

struct WindowedSpace {
  const SftSpace* sft = nullptr;
  Shape window;
  Configuration boundary;  // values off the window
  EnumBudget budget;
};

// Admissible window patterns consistent with the boundary.
std::vector<Pattern> enumerate_window(const WindowedSpace& ws);

struct ExtensionCertificate {
  double max_error = 0.0;
  long long pairs_checked = 0;
  Shape exact_on;  // the b of the certified T_b
};

struct KozlovResult {
  Interaction phi;  // site-indexed
  Shape support;    // D \ a (stage-one shape)
  ExtensionCertificate certificate;
};

// Reconstructs a site-indexed interaction supported on D \ a with
// ψ_Φ = ψ* exactly on every window pair of T_b. Requires ψ* Markov
// (markov_offsets known), vanishing on T_a (checked), and the memory window D
// to fit inside ws.window.
KozlovResult kozlov_partial(const WindowedSpace& ws, const Cocycle& psi_star,
                            const Shape& a, const Shape& b,
                            double tol = 1e-10);

struct KozlovChainStep {
  Shape a, b, support;
  double step_error = 0.0;
};

struct KozlovChainResult {
  Interaction phi;
  ExtensionCertificate certificate;  // against the final chain element
  std::vector<KozlovChainStep> steps;
  bool support_disjoint = true;  // no step writes onto an earlier a
};

KozlovChainResult kozlov_chain(const WindowedSpace& ws, const Cocycle& psi,
                               const std::vector<Shape>& chain,
                               double tol = 1e-10);

struct KozlovApproxResult {
  Interaction phi;  // Φ¹ + Φ²
  ExtensionCertificate certificate;
  double boundary_norm = 0.0;  // Σ over entries meeting a of sup |Φ_C|
  double boundary_bound = 0.0;  // the 3ε target it must stay under
  Shape d1, d2;
};

// Two-stage approximate extension: |ψ_Φ − ψ*| < delta_out on window T_b pairs
// and Σ_{C∩a≠∅} sup|Φ_C| < 3·eps_in. Radii come from the cocycle's declared
// modulus (Markov data when absent).
KozlovApproxResult kozlov_approx(const WindowedSpace& ws,
                                 const Cocycle& psi_star, const Shape& a,
                                 const Shape& b, double eps_in,
                                 double delta_out);

struct ApproxChainStep {
  Shape b;
  double eps = 0.0;          // the ε_n used for this step
  double achieved = 0.0;     // certified max error on T_b
  double boundary_norm = 0.0;
};

struct ApproxChainResult {
  Interaction phi;
  std::vector<ApproxChainStep> steps;
  double tail_bound = 0.0;  // Σ 3 ε_n over performed steps
};

// Iterated approximate extensions with the schedule ε_n = eps0 · 2^{-n}.
ApproxChainResult kozlov_approx_chain(const WindowedSpace& ws,
                                      const Cocycle& psi,
                                      const std::vector<Shape>& chain,
                                      double eps0);

}  // namespace gibbslab
