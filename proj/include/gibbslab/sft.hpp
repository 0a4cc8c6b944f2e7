// Configuration spaces: forbidden-pattern SFTs plus the sunny-side-up family,
// pattern admissibility, window language enumeration, zeta and fills.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gibbslab/config.hpp"
#include "gibbslab/errors.hpp"
#include "gibbslab/pattern.hpp"

namespace gibbslab {

// Sunny-side-up ("at most one 1") is not of finite type; its exact language is
// handled as a built-in family so the TMP checker can falsify it.
enum class Family { Generic, SunnySideUp };

struct Asserted {
  bool ssf = false;
  std::optional<Symbol> safe_symbol;
  bool pivot = false;
};

struct EnumBudget {
  long long max_nodes = 1LL << 22;
};

class SftSpace {
 public:
  SftSpace() = default;
  SftSpace(int dimension, std::vector<std::string> alphabet,
           std::vector<Pattern> forbidden, Asserted asserted = {},
           Family family = Family::Generic);

  int dimension() const { return dimension_; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  int num_symbols() const { return static_cast<int>(alphabet_.size()); }
  const std::vector<Pattern>& forbidden() const { return forbidden_; }
  const Asserted& asserted() const { return asserted_; }
  Family family() const { return family_; }

  // F: union of the (normalized) forbidden shapes. Empty when unconstrained.
  const Shape& forbidden_union() const { return forbidden_union_; }
  // F - F; offsets o such that a placement through site s lies in s + (F - F).
  const Shape& memory_offsets() const { return memory_offsets_; }
  // Max L-infinity reach of any forbidden placement through a site.
  int constraint_radius() const { return constraint_radius_; }

  Symbol symbol_index(const std::string& name) const;

 private:
  int dimension_ = 1;
  std::vector<std::string> alphabet_;
  std::vector<Pattern> forbidden_;
  Asserted asserted_;
  Family family_ = Family::Generic;
  Shape forbidden_union_;
  Shape memory_offsets_;
  int constraint_radius_ = 0;
};

// No translate of a forbidden pattern occurs inside p (exact language test for
// the sunny family). Throws InputError on out-of-alphabet symbols.
bool local_admissible(const Pattern& p, const SftSpace& sft);

// Checks every forbidden placement that meets `region` against the full
// configuration (background included).
bool config_admissible_near(const SftSpace& sft, const Configuration& x,
                            const Shape& region);

// Background admissibility on one period plus halo, then the patch region.
bool configuration_admissible(const SftSpace& sft, const Configuration& x);

// All patterns on `shape` extendable to a locally admissible pattern on
// shape ⊕ halo. Deterministic order (lexicographic in symbol indices).
std::vector<Pattern> language(const SftSpace& sft, const Shape& shape,
                              int halo, const EnumBudget& budget = {});

// Patterns p on `region` such that boundary.with(p) passes every forbidden
// placement meeting `region` (exterior sites read from `boundary`).
std::vector<Pattern> admissible_fillings(const SftSpace& sft,
                                         const Configuration& boundary,
                                         const Shape& region,
                                         const EnumBudget& budget = {});

// A + F - F (A itself when there are no constraints).
Shape memory_set(const SftSpace& sft, const Shape& a);

// Rewrites x_k to the least symbol keeping the configuration admissible.
Configuration zeta(const SftSpace& sft, const Configuration& x, Site k);

// Extends p by the least admissible symbol at k; FillFailure falsifies ssf.
Pattern fill_single_site(const SftSpace& sft, const Pattern& p, Site k);

// Lexicographically least locally admissible completion of `partial` on
// `region` (sites outside `partial`), backtracking in site order.
std::optional<Pattern> least_completion(const SftSpace& sft,
                                        const Configuration& boundary,
                                        const Pattern& partial,
                                        const Shape& region);

}  // namespace gibbslab
