// Single-site-fill machinery: separated partitions of annuli and the greedy
// fill map that splices a window into an anchor configuration.
#pragma once

#include <vector>

#include "gibbslab/sft.hpp"

namespace gibbslab {

struct FillContext {
  const SftSpace* sft = nullptr;
  int fill_radius = 1;  // N': the box of this radius covers every forbidden shape
  Configuration anchor;

  int margin() const { return 2 * fill_radius; }  // N = 2N'
  Shape separation_shape() const;                 // K = box of radius N'
};

// Derives N' from the forbidden shapes; requires an ssf assertion.
FillContext make_fill_context(const SftSpace& sft, Configuration anchor);

// Partition of `annulus` into at most |K|² K-separated classes (maximal
// separated subset, then translated copies, disjointified in order).
std::vector<Shape> separated_partition(const Shape& annulus, const Shape& k);

// z(x,n): agrees with x on the box of radius n, with the anchor outside the
// box of radius n+N, annulus filled class-by-class with the least admissible
// symbol. FillFailure falsifies the ssf assertion.
Configuration build_fill(const FillContext& ctx, const Configuration& x,
                         int n);

struct FillLocalityReport {
  bool interior_ok = true;  // flips in F_{n-N} move z only at the flip site
  bool margin_ok = true;    // flips in F_n \ F_{n-N} stay inside j + Λ
  int lambda_radius = 0;    // the Λ radius used for the margin check
  long long flips_tested = 0;
};

// Exercises single-site perturbations of x and checks where z moves.
FillLocalityReport check_fill_locality(const FillContext& ctx,
                                       const Configuration& x, int n);

}  // namespace gibbslab
