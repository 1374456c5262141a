#pragma once

// Exact decision procedures for cellular automata over the integers.
//
//  * surjectivity: subset construction on the de Bruijn output labels,
//  * injectivity: a cycle of the output-matched pair graph through an edge
//    with differing inputs,
//  * pre-injectivity: a diagonal-to-diagonal pair-graph walk through such an
//    edge,
//  * post-surjectivity: equal to injectivity in one dimension, certified
//    operationally by the inverse automaton.

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "calab/ca_core.hpp"

namespace calab {

inline constexpr std::int64_t kDefaultInverseRadius = 12;

struct SurjectivityVerdict {
  bool surjective = false;
  /// Shortest word with no preimage (ties by symbol order).
  std::optional<std::vector<Symbol>> orphan;
};

struct InjectivityVerdict {
  bool injective = false;
  /// Distinct configurations with equal image, minimal periods, phase
  /// anchored at the lexicographically least rotation.
  std::optional<std::pair<PeriodicConfigZ, PeriodicConfigZ>> witness;
};

struct PreInjectivityVerdict {
  bool pre_injective = false;
  /// Distinct asymptotic configurations with equal image.
  std::optional<std::pair<PatchedConfigZ, PatchedConfigZ>> witness;
};

struct CorrectionCheck {
  std::uint64_t attempted = 0;
  std::uint64_t verified = 0;
};

struct PostSurjectivityVerdict {
  bool post_surjective = false;
  /// Post-surjectivity is read off injectivity; there is no independent
  /// refutation when it is false.
  bool by_equivalence = true;
  std::optional<LocalRule> inverse;
  std::optional<CorrectionCheck> corrections;
  bool inverse_bound_exceeded = false;
};

struct CorrectionRadius {
  Offset lo = 0;
  Offset hi = 0;
  std::uint64_t samples = 0;
};

struct PropertyReport1D {
  LocalRule rule;
  bool injective = false;
  bool surjective = false;
  bool pre_injective = false;
  bool post_surjective = false;
  bool invertible = false;
  std::optional<std::pair<PeriodicConfigZ, PeriodicConfigZ>> non_injectivity_witness{};
  std::optional<std::pair<PatchedConfigZ, PatchedConfigZ>> non_pre_injectivity_witness{};
  std::optional<std::vector<Symbol>> orphan{};
  std::optional<LocalRule> inverse{};
  std::optional<CorrectionCheck> corrections{};
  bool inverse_bound_exceeded = false;
};

struct OneDimOptions {
  std::int64_t max_radius = kDefaultInverseRadius;
  std::uint64_t correction_instances = 100;
  std::uint64_t seed = 1;
};

SurjectivityVerdict decide_surjective(const LocalRule& rule);
InjectivityVerdict decide_injective(const LocalRule& rule);
PreInjectivityVerdict decide_pre_injective(const LocalRule& rule);
PostSurjectivityVerdict decide_post_surjective(const LocalRule& rule, const OneDimOptions& options = {});

/// Smallest-radius inverse (radius = largest |offset| of its memory), with
/// unused memory cells dropped. Throws NotBijective when the rule is not
/// injective and InverseBoundExceeded when no inverse fits in max_radius.
LocalRule find_inverse_rule(const LocalRule& rule, std::int64_t max_radius = kDefaultInverseRadius);

/// True when inverse o rule is the identity on every periodic configuration
/// of period <= 2 * W (within an enumeration budget) and on a de Bruijn
/// sequence containing every word of length W, where W spans the composite's
/// hull together with cell 0. The de Bruijn check alone is exact.
bool verify_inverse(const LocalRule& rule, const LocalRule& inverse);

/// Seeded single-cell edits y of tau(x); z = inverse(y) must be asymptotic
/// to x with tau(z) = y.
CorrectionCheck check_corrections(const LocalRule& rule, const LocalRule& inverse, std::uint64_t instances,
                                  std::uint64_t seed);

/// Smallest interval F with diff(z, x) inside g + F over the sampled edits.
CorrectionRadius uniform_correction_radius(const LocalRule& rule, const LocalRule& inverse,
                                           std::uint64_t samples, std::uint64_t seed = 1);

/// All four verdicts plus witnesses; asserts the Garden-of-Eden agreement
/// surjective == pre_injective (InternalError otherwise).
PropertyReport1D analyze_onedim(const LocalRule& rule, const OneDimOptions& options = {});

/// Cyclic de Bruijn sequence B(q, n) (lexicographically least, Lyndon-word
/// construction).
std::vector<Symbol> de_bruijn_sequence(std::uint32_t q, std::size_t n);

/// Seeded random patched configuration used by the sampling checks:
/// background period 1..max_period, up to max_patch cells in [-span, span].
PatchedConfigZ random_patched(std::mt19937_64& rng, std::uint32_t q, std::size_t max_period = 6,
                              std::size_t max_patch = 4, std::int64_t span = 8);

}  // namespace calab
