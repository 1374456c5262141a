#pragma once

// Finite groups given by multiplication tables, their subgroups, cosets and
// quotients, plus the cyclic quotient maps of the integers.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace calab {

using ElementId = std::uint32_t;

/// A finite group on the dense ids 0..order-1. Constructed groups always
/// use id 0 as the identity.
class FiniteGroup {
 public:
  /// Builds a group from a row-major order x order multiplication table.
  /// Validates closure, the identity, inverses and (for order <= 64)
  /// associativity exhaustively.
  static FiniteGroup from_table(std::size_t order, std::vector<ElementId> mul);

  std::size_t order() const noexcept { return order_; }
  ElementId identity() const noexcept { return identity_; }
  ElementId mul(ElementId a, ElementId b) const { return mul_[a * order_ + b]; }
  ElementId inv(ElementId a) const { return inv_[a]; }
  bool contains(std::int64_t id) const noexcept {
    return id >= 0 && static_cast<std::uint64_t>(id) < order_;
  }

  std::span<const ElementId> table() const noexcept { return mul_; }

  /// Re-checks all group axioms exhaustively; true when they hold.
  bool axioms_hold() const;

  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  ElementId identity_ = 0;
  std::vector<ElementId> mul_;
  std::vector<ElementId> inv_;
};

/// Homomorphism between two finite groups, stored as an image table.
struct GroupHom {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<ElementId> image;

  ElementId operator()(ElementId a) const { return image[a]; }
  bool is_homomorphism() const;
  bool is_surjective() const;
  std::vector<ElementId> kernel() const;
};

/// The projection of the integers onto the cyclic group of order `modulus`.
class CyclicQuotientMapZ {
 public:
  explicit CyclicQuotientMapZ(std::int64_t modulus);

  std::int64_t modulus() const noexcept { return modulus_; }
  /// Non-negative remainder.
  ElementId operator()(std::int64_t k) const noexcept;
  bool in_kernel(std::int64_t k) const noexcept { return (*this)(k) == 0; }

 private:
  std::int64_t modulus_;
};

/// Left cosets gH of a subgroup, with the smallest id of each coset as its
/// representative. Representatives are sorted, so identity comes first.
struct CosetTable {
  FiniteGroup group;
  std::vector<ElementId> subgroup;         // sorted
  std::vector<ElementId> representatives;  // sorted
  std::vector<ElementId> coset_of;         // element id -> representative id

  std::size_t index_of_representative(ElementId rep) const;
  /// Members of the coset rep*H, listed as rep*h for h in `subgroup` order.
  std::vector<ElementId> coset(ElementId rep) const;
};

FiniteGroup make_cyclic(std::int64_t m);

/// Smallest subgroup containing `gens` (sorted ids).
std::vector<ElementId> subgroup_generated(const FiniteGroup& group, std::span<const ElementId> gens);

bool is_subgroup(const FiniteGroup& group, std::span<const ElementId> subset);

CosetTable coset_decomposition(const FiniteGroup& group, std::span<const ElementId> subgroup);

/// Quotient group on the coset representatives (quotient id i stands for the
/// i-th representative) together with the canonical surjection.
std::pair<FiniteGroup, GroupHom> quotient_by(const FiniteGroup& group,
                                             std::span<const ElementId> normal_subgroup);

/// A subgroup materialised as a group of its own: local id i stands for
/// `elements[i]` of the ambient group.
struct SubgroupView {
  FiniteGroup group;
  std::vector<ElementId> elements;  // local id -> ambient id, sorted
  std::vector<std::int64_t> local_of;  // ambient id -> local id or -1

  GroupHom embedding(const FiniteGroup& ambient) const;
};

SubgroupView subgroup_view(const FiniteGroup& group, std::span<const ElementId> subgroup);

/// True iff no two distinct window elements are congruent modulo the map.
bool window_injective(const CyclicQuotientMapZ& map, std::span<const std::int64_t> window);

}  // namespace calab
