#include "calab/groups.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "calab/error.hpp"

namespace calab {

namespace {

constexpr std::size_t kAssociativityCheckLimit = 64;

std::vector<ElementId> sorted_unique(std::span<const ElementId> ids) {
  std::vector<ElementId> out(ids.begin(), ids.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void require_elements(const FiniteGroup& group, std::span<const ElementId> ids) {
  for (ElementId id : ids) {
    if (id >= group.order()) {
      fail(Errc::invalid_argument,
           "element id " + std::to_string(id) + " outside group of order " +
               std::to_string(group.order()));
    }
  }
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<ElementId> mul) {
  if (order == 0) fail(Errc::invalid_argument, "group order must be positive");
  if (mul.size() != order * order) {
    fail(Errc::invalid_argument, "multiplication table must have order^2 entries");
  }
  for (ElementId v : mul) {
    if (v >= order) fail(Errc::invalid_argument, "multiplication table entry out of range");
  }

  FiniteGroup g;
  g.order_ = order;
  g.mul_ = std::move(mul);

  bool found = false;
  for (ElementId e = 0; e < order && !found; ++e) {
    bool ok = true;
    for (ElementId a = 0; a < order && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) {
      g.identity_ = e;
      found = true;
    }
  }
  if (!found) fail(Errc::invalid_argument, "multiplication table has no identity");

  g.inv_.assign(order, 0);
  for (ElementId a = 0; a < order; ++a) {
    bool has_inverse = false;
    for (ElementId b = 0; b < order; ++b) {
      if (g.mul(a, b) == g.identity_ && g.mul(b, a) == g.identity_) {
        g.inv_[a] = b;
        has_inverse = true;
        break;
      }
    }
    if (!has_inverse) fail(Errc::invalid_argument, "element " + std::to_string(a) + " has no inverse");
  }

  if (order <= kAssociativityCheckLimit && !g.axioms_hold()) {
    fail(Errc::invalid_argument, "multiplication table is not associative");
  }
  return g;
}

bool FiniteGroup::axioms_hold() const {
  for (ElementId a = 0; a < order_; ++a) {
    if (mul(identity_, a) != a || mul(a, identity_) != a) return false;
    if (mul(a, inv(a)) != identity_ || mul(inv(a), a) != identity_) return false;
    for (ElementId b = 0; b < order_; ++b) {
      const ElementId ab = mul(a, b);
      for (ElementId c = 0; c < order_; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) return false;
      }
    }
  }
  return true;
}

bool GroupHom::is_homomorphism() const {
  if (image.size() != source.order()) return false;
  if (image[source.identity()] != target.identity()) return false;
  for (ElementId a = 0; a < source.order(); ++a) {
    for (ElementId b = 0; b < source.order(); ++b) {
      if (image[source.mul(a, b)] != target.mul(image[a], image[b])) return false;
    }
  }
  return true;
}

bool GroupHom::is_surjective() const {
  std::vector<bool> hit(target.order(), false);
  for (ElementId v : image) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::vector<ElementId> GroupHom::kernel() const {
  std::vector<ElementId> out;
  for (ElementId a = 0; a < source.order(); ++a) {
    if (image[a] == target.identity()) out.push_back(a);
  }
  return out;
}

CyclicQuotientMapZ::CyclicQuotientMapZ(std::int64_t modulus) : modulus_(modulus) {
  if (modulus < 1) fail(Errc::invalid_argument, "modulus must be positive");
}

ElementId CyclicQuotientMapZ::operator()(std::int64_t k) const noexcept {
  std::int64_t r = k % modulus_;
  if (r < 0) r += modulus_;
  return static_cast<ElementId>(r);
}

std::size_t CosetTable::index_of_representative(ElementId rep) const {
  auto it = std::lower_bound(representatives.begin(), representatives.end(), rep);
  if (it == representatives.end() || *it != rep) {
    fail(Errc::invalid_argument, "not a coset representative: " + std::to_string(rep));
  }
  return static_cast<std::size_t>(it - representatives.begin());
}

std::vector<ElementId> CosetTable::coset(ElementId rep) const {
  std::vector<ElementId> out;
  out.reserve(subgroup.size());
  for (ElementId h : subgroup) out.push_back(group.mul(rep, h));
  return out;
}

FiniteGroup make_cyclic(std::int64_t m) {
  if (m < 1) fail(Errc::invalid_argument, "cyclic group order must be positive");
  const auto n = static_cast<std::size_t>(m);
  std::vector<ElementId> mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = static_cast<ElementId>((a + b) % n);
  }
  return FiniteGroup::from_table(n, std::move(mul));
}

std::vector<ElementId> subgroup_generated(const FiniteGroup& group, std::span<const ElementId> gens) {
  require_elements(group, gens);
  std::vector<bool> in(group.order(), false);
  std::vector<ElementId> frontier{group.identity()};
  in[group.identity()] = true;
  // Closure under right multiplication by generators and their inverses.
  std::vector<ElementId> steps;
  for (ElementId g : gens) {
    steps.push_back(g);
    steps.push_back(group.inv(g));
  }
  while (!frontier.empty()) {
    const ElementId a = frontier.back();
    frontier.pop_back();
    for (ElementId s : steps) {
      const ElementId b = group.mul(a, s);
      if (!in[b]) {
        in[b] = true;
        frontier.push_back(b);
      }
    }
  }
  std::vector<ElementId> out;
  for (ElementId a = 0; a < group.order(); ++a) {
    if (in[a]) out.push_back(a);
  }
  return out;
}

bool is_subgroup(const FiniteGroup& group, std::span<const ElementId> subset) {
  for (ElementId id : subset) {
    if (id >= group.order()) return false;
  }
  std::vector<bool> in(group.order(), false);
  for (ElementId id : subset) in[id] = true;
  if (!in[group.identity()]) return false;
  for (ElementId a : subset) {
    if (!in[group.inv(a)]) return false;
    for (ElementId b : subset) {
      if (!in[group.mul(a, b)]) return false;
    }
  }
  return true;
}

CosetTable coset_decomposition(const FiniteGroup& group, std::span<const ElementId> subgroup) {
  const auto sub = sorted_unique(subgroup);
  if (!is_subgroup(group, sub)) fail(Errc::not_a_subgroup, "subset is not closed under the group law");

  CosetTable table{group, sub, {}, std::vector<ElementId>(group.order(), 0)};
  std::vector<bool> assigned(group.order(), false);
  for (ElementId g = 0; g < group.order(); ++g) {
    if (assigned[g]) continue;
    // g is the smallest unassigned id, hence the minimum of its coset.
    table.representatives.push_back(g);
    for (ElementId h : sub) {
      const ElementId member = group.mul(g, h);
      assigned[member] = true;
      table.coset_of[member] = g;
    }
  }
  return table;
}

std::pair<FiniteGroup, GroupHom> quotient_by(const FiniteGroup& group,
                                             std::span<const ElementId> normal_subgroup) {
  CosetTable cosets = coset_decomposition(group, normal_subgroup);
  std::vector<bool> in(group.order(), false);
  for (ElementId h : cosets.subgroup) in[h] = true;
  for (ElementId g = 0; g < group.order(); ++g) {
    for (ElementId h : cosets.subgroup) {
      // gHg^-1 must stay inside H.
      if (!in[group.mul(group.mul(g, h), group.inv(g))]) {
        fail(Errc::not_normal, "gH != Hg for g = " + std::to_string(g));
      }
    }
  }

  const std::size_t k = cosets.representatives.size();
  std::vector<ElementId> image(group.order());
  for (ElementId g = 0; g < group.order(); ++g) {
    image[g] = static_cast<ElementId>(cosets.index_of_representative(cosets.coset_of[g]));
  }
  std::vector<ElementId> mul(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      mul[i * k + j] = image[group.mul(cosets.representatives[i], cosets.representatives[j])];
    }
  }
  FiniteGroup quotient = FiniteGroup::from_table(k, std::move(mul));
  GroupHom hom{group, quotient, std::move(image)};
  return {std::move(quotient), std::move(hom)};
}

GroupHom SubgroupView::embedding(const FiniteGroup& ambient) const {
  return GroupHom{group, ambient, elements};
}

SubgroupView subgroup_view(const FiniteGroup& group, std::span<const ElementId> subgroup) {
  auto elements = sorted_unique(subgroup);
  if (!is_subgroup(group, elements)) fail(Errc::not_a_subgroup, "subset is not closed under the group law");
  const std::size_t n = elements.size();
  std::vector<std::int64_t> local_of(group.order(), -1);
  for (std::size_t i = 0; i < n; ++i) local_of[elements[i]] = static_cast<std::int64_t>(i);
  std::vector<ElementId> mul(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mul[i * n + j] = static_cast<ElementId>(local_of[group.mul(elements[i], elements[j])]);
    }
  }
  return SubgroupView{FiniteGroup::from_table(n, std::move(mul)), std::move(elements), std::move(local_of)};
}

bool window_injective(const CyclicQuotientMapZ& map, std::span<const std::int64_t> window) {
  std::vector<std::int64_t> distinct(window.begin(), window.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<ElementId> residues;
  residues.reserve(distinct.size());
  for (std::int64_t k : distinct) residues.push_back(map(k));
  std::sort(residues.begin(), residues.end());
  return std::adjacent_find(residues.begin(), residues.end()) == residues.end();
}

}  // namespace calab
