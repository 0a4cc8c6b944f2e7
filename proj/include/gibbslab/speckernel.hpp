// Conditional probability kernels of a cocycle on finite regions, and the
// round trip back to the cocycle.
#pragma once

#include <vector>

#include "gibbslab/cocycle.hpp"

namespace gibbslab {

struct SpecKernel {
  Cocycle psi;
  Configuration boundary;  // exterior condition (values off `region` used)
  Shape region;
  EnumBudget budget;
};

// Builds a kernel from an explicit annulus pattern over a background; errors
// when the annulus does not cover memory_set(region) \ region.
SpecKernel make_kernel(const Cocycle& psi, const Shape& region,
                       const Pattern& annulus, const Configuration& exterior);

// The distribution over L_{region | boundary}: strictly positive, sums to 1.
std::vector<std::pair<Pattern, double>> spec_distribution(const SpecKernel& k);

// K(p) for a pattern on the region (0 when p is not admissible there).
double spec_prob(const SpecKernel& k, const Pattern& p);

// K([q]) for a cylinder on a subset of the region (marginal sum).
double spec_prob_cylinder(const SpecKernel& k, const Pattern& q);

// -log [ K_A(y,[y_A]) / K_A(x,[x_A]) ] with A the disagreement set; both
// kernels are built and normalized independently.
double cocycle_from_spec(const Cocycle& psi, const AsymptoticPair& pair,
                         const EnumBudget& budget = {});

}  // namespace gibbslab
