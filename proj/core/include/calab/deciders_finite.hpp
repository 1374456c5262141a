#pragma once

// Exhaustive property deciders for cellular automata over finite groups.
//
// Over a finite group every pair of configurations is asymptotic (the whole
// group is a finite exception set), so pre-injectivity coincides with
// injectivity and post-surjectivity with surjectivity.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "calab/ca_core.hpp"
#include "calab/groups.hpp"

namespace calab {

inline constexpr std::uint64_t kDefaultFiniteBudget = std::uint64_t{1} << 24;

struct PropertyReportFinite {
  bool injective = false;
  bool surjective = false;
  bool pre_injective = false;
  bool post_surjective = false;
  bool bijective = false;
  /// First two configurations (in counter order) sharing an image.
  std::optional<std::pair<FiniteConfig, FiniteConfig>> collision;
  /// Last configuration (in counter order) outside the image.
  std::optional<FiniteConfig> orphan;
};

/// Enumerates all q^|G| configurations. Throws BudgetExceeded when
/// q^|G| > budget.
PropertyReportFinite analyze_finite(const LocalRule& rule, const FiniteGroup& group,
                                    std::uint64_t budget = kDefaultFiniteBudget);

/// Rule with memory G (ids in order) realising the inverse map. Throws
/// NotBijective.
LocalRule invert_exhaustive(const LocalRule& rule, const FiniteGroup& group,
                            std::uint64_t budget = kDefaultFiniteBudget);

/// Corrects tau(x) towards y one disagreement cell at a time (ascending
/// element id). Each step picks the configuration closest to the previous one
/// (fewest changed cells, ties by counter order) whose image changes exactly
/// the current cell to y's value. Returns z_0 = x, ..., z_n with
/// tau(z_n) = y. Throws NotSurjective when the rule is not surjective.
std::vector<FiniteConfig> sequential_correction(const LocalRule& rule, const FiniteGroup& group,
                                                const FiniteConfig& x, const FiniteConfig& y,
                                                std::uint64_t budget = kDefaultFiniteBudget);

}  // namespace calab
