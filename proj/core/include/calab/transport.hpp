#pragma once

// Moving cellular automata between universes:
//  * lift/project between A^K and the kernel-fixed configurations of A^G,
//  * the induced quotient automaton tau_K = project o tau o lift,
//  * induction from a subgroup H to G and the coset decomposition of the
//    induced automaton,
//  * block recoding of an integer-universe rule onto the alphabet A^m.

#include <cstdint>
#include <optional>
#include <utility>

#include "calab/ca_core.hpp"
#include "calab/groups.hpp"

namespace calab {

// -- lift (Phi) and project (Psi) ------------------------------------------

/// output(g) = x(hom(g)).
FiniteConfig lift_config(const FiniteConfig& x, const GroupHom& hom);
/// The integer lift of a configuration over Z/mZ: the periodic configuration
/// with word x.
PeriodicConfigZ lift_config(const FiniteConfig& x, const CyclicQuotientMapZ& map);

/// Fibre-wise value; throws NotPeriodic when x is not fixed by the kernel.
FiniteConfig project_config(const FiniteConfig& x, const GroupHom& hom);
FiniteConfig project_config(const PeriodicConfigZ& x, const CyclicQuotientMapZ& map);

// -- induced quotient rule ---------------------------------------------------

/// Memory N = hom(M) in first-appearance order, mu_K(y) = mu(z) with
/// z(m) = y(hom(m)). Merged memory cells read the same value.
LocalRule induce_quotient_ca(const LocalRule& rule, const GroupHom& hom);
LocalRule induce_quotient_ca(const LocalRule& rule, const CyclicQuotientMapZ& map);

// -- subgroup induction ------------------------------------------------------

/// The rule with memory inside H reinterpreted over G (same ids and table).
/// Throws MemoryNotInSubgroup.
LocalRule induce_supergroup_ca(const LocalRule& rule, const FiniteGroup& group,
                               std::span<const ElementId> subgroup);

/// A rule with memory inside H written over H itself: memory ids become the
/// local ids of `view`.
LocalRule restrict_to_subgroup(const LocalRule& rule, const SubgroupView& view);

struct DecompositionCheck {
  bool holds = true;
  bool exhaustive = true;
  std::uint64_t configurations_checked = 0;
  std::optional<FiniteConfig> counterexample;
};

/// Checks sigma(x)|_{gamma H} = tau_gamma(x|_{gamma H}) for every coset. When
/// the memory leaves H there is no sub-automaton; the check then searches
/// for a configuration pair agreeing on a coset whose images disagree there.
/// Exhaustive when q^|G| <= budget, otherwise `samples` seeded draws.
DecompositionCheck check_coset_decomposition(const LocalRule& sigma, const CosetTable& cosets,
                                             std::uint64_t budget = std::uint64_t{1} << 20,
                                             std::uint64_t samples = 4096, std::uint64_t seed = 1);

inline bool verify_coset_decomposition(const LocalRule& sigma, const CosetTable& cosets) {
  return check_coset_decomposition(sigma, cosets).holds;
}

// -- block recoding ------------------------------------------------------------

/// Super-cell i packs the original cells i*m .. i*m+m-1; the composite
/// symbol is sum_j a_{i*m+j} * q^(m-1-j) (first cell most significant).
class BlockRecoding {
 public:
  BlockRecoding(std::uint32_t base_q, std::int64_t block);

  std::uint32_t base_q() const noexcept { return base_q_; }
  std::uint32_t composite_q() const noexcept { return composite_q_; }
  std::int64_t block() const noexcept { return block_; }

  Symbol pack_block(std::span<const Symbol> cells) const;
  std::vector<Symbol> unpack_block(Symbol s) const;

  PeriodicConfigZ pack(const PeriodicConfigZ& x) const;
  PeriodicConfigZ unpack(const PeriodicConfigZ& x) const;
  PatchedConfigZ pack(const PatchedConfigZ& x) const;
  PatchedConfigZ unpack(const PatchedConfigZ& x) const;

 private:
  std::uint32_t base_q_;
  std::int64_t block_;
  std::uint32_t composite_q_;
};

struct BlockRecoded {
  LocalRule rule;
  BlockRecoding recoding;
};

/// The rule conjugate to `rule` under block packing. Its memory is the
/// contiguous range of super-cells floor(lo/m) .. floor((m-1+hi)/m). m = 1
/// returns the rule unchanged.
BlockRecoded block_recode_ca(const LocalRule& rule, std::int64_t block);

}  // namespace calab
