// Canned spaces and cocycles: full shifts, hard-core, q-colorings,
// sunny-side-up, the height-difference cocycle on 3-colorings, and the rigid
// 4-coloring witness.
#pragma once

#include <map>

#include "gibbslab/cocycle.hpp"

namespace gibbslab {

// Names: full(q,d), hardcore(d), coloring(q,d), sunny(d).
SftSpace builtin_space(const std::string& name);
SftSpace full_shift(int q, int d);
SftSpace hardcore_shift(int d);
SftSpace coloring_shift(int q, int d);
SftSpace sunny_side_up(int d);

struct HeightLift {
  Configuration base;
  std::map<Site, long long> heights;
  Site anchor;
  long long anchor_value = 0;
};

// BFS lift of a 3-coloring over a connected region: heights reduce mod 3 to
// the colors and adjacent heights differ by one.
HeightLift lift_heights(const SftSpace& sft, const Configuration& x,
                        const Shape& region, Site anchor);

// Σ_n [x̂_n − ŷ_n] over a common anchored pair of lifts. Exact integers.
long long height_cocycle(const SftSpace& sft, const AsymptoticPair& pair);

// The height cocycle packaged for the cocycle engine.
Cocycle height_cocycle_on(const SftSpace& sft);

struct DiamondPair {
  int radius = 0;
  AsymptoticPair pair;
};

// The two mod-3 pyramid projections of radius i over the parity background.
DiamondPair diamond_pair(const SftSpace& sft, int radius);

struct RigidColoringReport {
  int q = 0;
  bool admissible = false;
  long long single_site_pivots = 0;  // over the checked window
  bool two_site_exchange_admissible = false;
  Shape window;
};

// The frozen q-coloring x_{n,m} = (n + (q-2)·m) mod q for q in {4, 5}:
// no single-site pivots on the window, but an admissible two-site exchange.
RigidColoringReport rigid_coloring_witness(int q, int window_radius = 3);

}  // namespace gibbslab
