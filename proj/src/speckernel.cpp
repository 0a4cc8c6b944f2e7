#include "gibbslab/speckernel.hpp"

#include <cmath>

namespace gibbslab {

SpecKernel make_kernel(const Cocycle& psi, const Shape& region,
                       const Pattern& annulus, const Configuration& exterior) {
  Shape needed =
      shape_difference(memory_set(psi.space(), region), region);
  if (!needed.subset_of(annulus.shape()))
    throw InputError(
        "make_kernel: boundary annulus too small to determine admissibility");
  SpecKernel k;
  k.psi = psi;
  k.boundary = exterior.with(annulus);
  k.region = region;
  return k;
}

std::vector<std::pair<Pattern, double>> spec_distribution(const SpecKernel& k) {
  const SftSpace& sft = k.psi.space();
  std::vector<Pattern> candidates =
      admissible_fillings(sft, k.boundary, k.region, k.budget);
  if (candidates.empty())
    throw InputError("spec_distribution: no admissible pattern on the region");
  Configuration x = k.boundary.with(candidates.front());
  std::vector<std::pair<Pattern, double>> dist;
  dist.reserve(candidates.size());
  double z = 0.0;
  for (const Pattern& p : candidates) {
    Configuration xp = x.with(p);
    double w = std::exp(-k.psi.eval(AsymptoticPair::make(x, xp)));
    z += w;
    dist.push_back({p, w});
  }
  for (auto& [p, w] : dist) w /= z;
  return dist;
}

double spec_prob(const SpecKernel& k, const Pattern& p) {
  for (const auto& [q, w] : spec_distribution(k))
    if (q == p) return w;
  return 0.0;
}

double spec_prob_cylinder(const SpecKernel& k, const Pattern& q) {
  if (!q.shape().subset_of(k.region))
    throw InputError("spec_prob_cylinder: cylinder base not inside region");
  double sum = 0.0;
  for (const auto& [p, w] : spec_distribution(k))
    if (p.restricted(q.shape()) == q) sum += w;
  return sum;
}

double cocycle_from_spec(const Cocycle& psi, const AsymptoticPair& pair,
                         const EnumBudget& budget) {
  if (pair.disagreement.empty()) return 0.0;
  SpecKernel kx{psi, pair.left, pair.disagreement, budget};
  SpecKernel ky{psi, pair.right, pair.disagreement, budget};
  double px = spec_prob(kx, pair.left.window(pair.disagreement));
  double py = spec_prob(ky, pair.right.window(pair.disagreement));
  if (!(px > 0.0) || !(py > 0.0))
    throw InputError("cocycle_from_spec: nonpositive kernel value");
  return -std::log(py / px);
}

}  // namespace gibbslab
