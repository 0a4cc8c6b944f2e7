// Window-bounded structural checkers. These falsify properties on a stated
// window; they never prove them globally.
#pragma once

#include <optional>
#include <vector>

#include "gibbslab/sft.hpp"

namespace gibbslab {

struct TmpCounterexample {
  Pattern x;      // window pattern
  Pattern y;      // window pattern agreeing with x on b \ a
  Pattern glued;  // x on b joined with y off a; fails admissibility
};

struct TmpReport {
  bool holds = true;
  Shape a, b, window;
  long long pairs_checked = 0;
  std::optional<TmpCounterexample> counterexample;
};

// Exhaustively tests the memory-set property of b for a over admissible
// window patterns agreeing on b \ a.
TmpReport check_tmp_window(const SftSpace& sft, const Shape& a, const Shape& b,
                           const Shape& window, const EnumBudget& budget = {});

struct PivotMove {
  Site site;
  Symbol symbol;
};

// Minimal-length sequence of admissible single-site moves inside search_box
// transforming pair.left into pair.right (boundary kept fixed). Throws
// NoPathError when BFS exhausts the window; that falsifies the pivot property
// only at this window size.
std::vector<PivotMove> pivot_path(const SftSpace& sft,
                                  const AsymptoticPair& pair,
                                  const Shape& search_box,
                                  const EnumBudget& budget = {});

// Replays moves from pair.left, checking admissibility of every intermediate
// configuration; returns false if any move breaks admissibility or the replay
// does not end at pair.right.
bool replay_pivot_path(const SftSpace& sft, const AsymptoticPair& pair,
                       const std::vector<PivotMove>& moves);

// The SFT obtained by forbidding the non-admissible patterns of shape B
// (B = memory window for {0}); requires a declared safe symbol and a TMP
// window check to pass first.
SftSpace derive_sft_from_tmp_safe(const SftSpace& sft, int window_radius,
                                  const EnumBudget& budget = {});

}  // namespace gibbslab
