#include "calab/transport.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "calab/error.hpp"

namespace calab {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t d = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
  return d;
}

FiniteConfig random_config(std::mt19937_64& rng, std::uint32_t q, std::size_t n) {
  std::uniform_int_distribution<Symbol> dist(0, q - 1);
  FiniteConfig x{std::vector<Symbol>(n)};
  for (auto& c : x.cells) c = dist(rng);
  return x;
}

}  // namespace

FiniteConfig lift_config(const FiniteConfig& x, const GroupHom& hom) {
  if (x.size() != hom.target.order()) fail(Errc::invalid_argument, "configuration is not over the target group");
  FiniteConfig out{std::vector<Symbol>(hom.source.order())};
  for (ElementId g = 0; g < hom.source.order(); ++g) out.cells[g] = x.cells[hom(g)];
  return out;
}

PeriodicConfigZ lift_config(const FiniteConfig& x, const CyclicQuotientMapZ& map) {
  if (static_cast<std::int64_t>(x.size()) != map.modulus()) {
    fail(Errc::invalid_argument, "configuration is not over Z/mZ for the given modulus");
  }
  return PeriodicConfigZ(x.cells);
}

FiniteConfig project_config(const FiniteConfig& x, const GroupHom& hom) {
  if (x.size() != hom.source.order()) fail(Errc::invalid_argument, "configuration is not over the source group");
  FiniteConfig out{std::vector<Symbol>(hom.target.order(), 0)};
  std::vector<bool> seen(hom.target.order(), false);
  for (ElementId g = 0; g < hom.source.order(); ++g) {
    const ElementId k = hom(g);
    if (!seen[k]) {
      seen[k] = true;
      out.cells[k] = x.cells[g];
    } else if (out.cells[k] != x.cells[g]) {
      fail(Errc::not_periodic, "configuration is not constant on the fibre over " + std::to_string(k));
    }
  }
  return out;
}

FiniteConfig project_config(const PeriodicConfigZ& x, const CyclicQuotientMapZ& map) {
  const auto p = static_cast<std::int64_t>(x.period());
  const std::int64_t m = map.modulus();
  for (std::int64_t k = 0; k < p; ++k) {
    if (x.at(k) != x.at(k + m)) {
      fail(Errc::not_periodic, "configuration is not fixed by " + std::to_string(m) + "Z");
    }
  }
  FiniteConfig out{std::vector<Symbol>(static_cast<std::size_t>(m))};
  for (std::int64_t k = 0; k < m; ++k) out.cells[static_cast<std::size_t>(k)] = x.at(k);
  return out;
}

namespace {

template <typename Map>
LocalRule induce(const LocalRule& rule, const Map& image_of) {
  std::vector<Offset> memory;
  std::vector<std::size_t> slot;  // memory position -> induced memory position
  for (Offset m : rule.memory()) {
    const auto k = static_cast<Offset>(image_of(m));
    auto it = std::find(memory.begin(), memory.end(), k);
    if (it == memory.end()) {
      slot.push_back(memory.size());
      memory.push_back(k);
    } else {
      slot.push_back(static_cast<std::size_t>(it - memory.begin()));
    }
  }
  std::vector<Symbol> z(rule.arity());
  return LocalRule::from_function(rule.q(), memory, [&](std::span<const Symbol> y) {
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = y[slot[i]];
    return rule(z);
  });
}

}  // namespace

LocalRule induce_quotient_ca(const LocalRule& rule, const GroupHom& hom) {
  for (Offset m : rule.memory()) {
    if (!hom.source.contains(m)) fail(Errc::memory_mismatch, "memory id outside the source group");
  }
  return induce(rule, [&](Offset m) { return hom(static_cast<ElementId>(m)); });
}

LocalRule induce_quotient_ca(const LocalRule& rule, const CyclicQuotientMapZ& map) {
  return induce(rule, [&](Offset m) { return map(m); });
}

LocalRule induce_supergroup_ca(const LocalRule& rule, const FiniteGroup& group,
                               std::span<const ElementId> subgroup) {
  if (!is_subgroup(group, subgroup)) fail(Errc::not_a_subgroup, "subset is not closed under the group law");
  for (Offset m : rule.memory()) {
    if (std::find(subgroup.begin(), subgroup.end(), static_cast<ElementId>(m)) == subgroup.end() ||
        !group.contains(m)) {
      fail(Errc::memory_not_in_subgroup, "memory id " + std::to_string(m) + " is not in the subgroup");
    }
  }
  return rule;
}

LocalRule restrict_to_subgroup(const LocalRule& rule, const SubgroupView& view) {
  std::vector<Offset> memory;
  for (Offset m : rule.memory()) {
    if (m < 0 || static_cast<std::size_t>(m) >= view.local_of.size() || view.local_of[static_cast<std::size_t>(m)] < 0) {
      fail(Errc::memory_not_in_subgroup, "memory id " + std::to_string(m) + " is not in the subgroup");
    }
    memory.push_back(view.local_of[static_cast<std::size_t>(m)]);
  }
  return LocalRule(rule.q(), std::move(memory), rule.table());
}

DecompositionCheck check_coset_decomposition(const LocalRule& sigma, const CosetTable& cosets,
                                             std::uint64_t budget, std::uint64_t samples,
                                             std::uint64_t seed) {
  const FiniteGroup& group = cosets.group;
  const std::size_t n = group.order();
  const std::uint32_t q = sigma.q();

  const bool memory_inside =
      std::all_of(sigma.memory().begin(), sigma.memory().end(), [&](Offset m) {
        return group.contains(m) &&
               std::binary_search(cosets.subgroup.begin(), cosets.subgroup.end(), static_cast<ElementId>(m));
      });

  std::optional<SubgroupView> view;
  std::optional<LocalRule> tau;
  if (memory_inside) {
    view = subgroup_view(group, cosets.subgroup);
    tau = restrict_to_subgroup(sigma, *view);
  }

  std::vector<std::vector<ElementId>> coset_members;
  std::vector<std::vector<bool>> in_coset;
  for (ElementId rep : cosets.representatives) {
    coset_members.push_back(cosets.coset(rep));
    std::vector<bool> mask(n, false);
    for (ElementId g : coset_members.back()) mask[g] = true;
    in_coset.push_back(std::move(mask));
  }

  auto check_one = [&](const FiniteConfig& x) -> bool {
    const FiniteConfig image = apply_finite(sigma, group, x);
    for (std::size_t c = 0; c < coset_members.size(); ++c) {
      const auto& members = coset_members[c];
      if (memory_inside) {
        FiniteConfig restricted{std::vector<Symbol>(members.size())};
        for (std::size_t i = 0; i < members.size(); ++i) restricted.cells[i] = x.cells[members[i]];
        const FiniteConfig local = apply_finite(*tau, view->group, restricted);
        for (std::size_t i = 0; i < members.size(); ++i) {
          if (image.cells[members[i]] != local.cells[i]) return false;
        }
      } else {
        // Single-cell edits outside the coset must leave the coset image alone.
        for (ElementId g = 0; g < n; ++g) {
          if (in_coset[c][g]) continue;
          FiniteConfig edited = x;
          for (Symbol s = 1; s < q; ++s) {
            edited.cells[g] = (x.cells[g] + s) % q;
            const FiniteConfig other = apply_finite(sigma, group, edited);
            for (ElementId member : members) {
              if (other.cells[member] != image.cells[member]) return false;
            }
          }
        }
      }
    }
    return true;
  };

  DecompositionCheck result;
  const std::uint64_t total = checked_power(q, n, budget);
  if (total != 0) {
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      FiniteConfig x = config_from_index(idx, q, n);
      ++result.configurations_checked;
      if (!check_one(x)) {
        result.holds = false;
        result.counterexample = std::move(x);
        return result;
      }
    }
    return result;
  }

  result.exhaustive = false;
  std::mt19937_64 rng(seed);
  for (std::uint64_t s = 0; s < samples; ++s) {
    FiniteConfig x = random_config(rng, q, n);
    ++result.configurations_checked;
    if (!check_one(x)) {
      result.holds = false;
      result.counterexample = std::move(x);
      return result;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------

BlockRecoding::BlockRecoding(std::uint32_t base_q, std::int64_t block) : base_q_(base_q), block_(block) {
  if (block < 1) fail(Errc::invalid_argument, "block length must be at least 1");
  const std::uint64_t size = checked_power(base_q, static_cast<std::uint64_t>(block), std::uint64_t{1} << 16);
  if (size == 0) fail(Errc::invalid_argument, "composite alphabet q^m exceeds 65536");
  composite_q_ = static_cast<std::uint32_t>(size);
}

Symbol BlockRecoding::pack_block(std::span<const Symbol> cells) const {
  Symbol s = 0;
  for (Symbol c : cells) s = s * base_q_ + c;
  return s;
}

std::vector<Symbol> BlockRecoding::unpack_block(Symbol s) const {
  std::vector<Symbol> cells(static_cast<std::size_t>(block_));
  for (std::size_t j = cells.size(); j-- > 0;) {
    cells[j] = s % base_q_;
    s /= base_q_;
  }
  return cells;
}

PeriodicConfigZ BlockRecoding::pack(const PeriodicConfigZ& x) const {
  const auto p = static_cast<std::int64_t>(x.period());
  const std::int64_t super_period = std::lcm(p, block_) / block_;
  std::vector<Symbol> word(static_cast<std::size_t>(super_period));
  std::vector<Symbol> cells(static_cast<std::size_t>(block_));
  for (std::int64_t i = 0; i < super_period; ++i) {
    for (std::int64_t j = 0; j < block_; ++j) cells[static_cast<std::size_t>(j)] = x.at(i * block_ + j);
    word[static_cast<std::size_t>(i)] = pack_block(cells);
  }
  return PeriodicConfigZ(std::move(word));
}

PeriodicConfigZ BlockRecoding::unpack(const PeriodicConfigZ& x) const {
  std::vector<Symbol> word;
  word.reserve(x.period() * static_cast<std::size_t>(block_));
  for (Symbol s : x.word()) {
    for (Symbol c : unpack_block(s)) word.push_back(c);
  }
  return PeriodicConfigZ(std::move(word));
}

PatchedConfigZ BlockRecoding::pack(const PatchedConfigZ& x) const {
  std::map<std::int64_t, Symbol> patch;
  std::vector<Symbol> cells(static_cast<std::size_t>(block_));
  for (const auto& [k, v] : x.patch()) {
    const std::int64_t i = floor_div(k, block_);
    if (patch.contains(i)) continue;
    for (std::int64_t j = 0; j < block_; ++j) cells[static_cast<std::size_t>(j)] = x.at(i * block_ + j);
    patch.emplace(i, pack_block(cells));
  }
  return PatchedConfigZ(pack(x.background()), std::move(patch));
}

PatchedConfigZ BlockRecoding::unpack(const PatchedConfigZ& x) const {
  std::map<std::int64_t, Symbol> patch;
  for (const auto& [i, s] : x.patch()) {
    const auto cells = unpack_block(s);
    for (std::int64_t j = 0; j < block_; ++j) patch.emplace(i * block_ + j, cells[static_cast<std::size_t>(j)]);
  }
  return PatchedConfigZ(unpack(x.background()), std::move(patch));
}

BlockRecoded block_recode_ca(const LocalRule& rule, std::int64_t block) {
  BlockRecoding recoding(rule.q(), block);
  if (block == 1) return BlockRecoded{rule, recoding};

  const auto [lo, hi] = rule.hull();
  const std::int64_t first = floor_div(lo, block);
  const std::int64_t last = floor_div(block - 1 + hi, block);
  std::vector<Offset> memory(static_cast<std::size_t>(last - first + 1));
  std::iota(memory.begin(), memory.end(), first);

  // Unpacked window covers original cells first*m .. last*m + m - 1.
  const std::int64_t base = first * block;
  std::vector<Symbol> cells(static_cast<std::size_t>((last - first + 1) * block));
  std::vector<Symbol> read(rule.arity());
  std::vector<Symbol> out(static_cast<std::size_t>(block));
  LocalRule composite = LocalRule::from_function(recoding.composite_q(), memory, [&](std::span<const Symbol> word) {
    for (std::size_t i = 0; i < word.size(); ++i) {
      const auto unpacked = recoding.unpack_block(word[i]);
      std::copy(unpacked.begin(), unpacked.end(), cells.begin() + static_cast<std::ptrdiff_t>(i) * block);
    }
    for (std::int64_t j = 0; j < block; ++j) {
      for (std::size_t r = 0; r < read.size(); ++r) {
        read[r] = cells[static_cast<std::size_t>(j + rule.memory()[r] - base)];
      }
      out[static_cast<std::size_t>(j)] = rule(read);
    }
    return recoding.pack_block(out);
  });
  return BlockRecoded{std::move(composite), recoding};
}

}  // namespace calab
