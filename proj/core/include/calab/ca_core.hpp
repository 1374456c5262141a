#pragma once

// Local rules, configurations over finite groups and over the integers, and
// the application of a cellular automaton to them.
//
// Conventions:
//  * A memory word (a_1, ..., a_k) read in memory order is stored at table
//    index sum a_i * q^(k-i): the first memory cell is the most significant
//    digit.
//  * tau(x)(g) = mu(x(g*m_1), ..., x(g*m_k)). Over the integers the group is
//    additive, so tau(x)(k) reads the cells k + m_i.
//  * Cell indices are reduced modulo a period to the non-negative remainder.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "calab/groups.hpp"

namespace calab {

using Symbol = std::uint32_t;
using Offset = std::int64_t;

/// Symbols are the ids 0..size-1.
struct Alphabet {
  std::uint32_t size = 2;
  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

/// Largest local-rule table the library will materialise.
inline constexpr std::uint64_t kMaxRuleTable = std::uint64_t{1} << 26;

/// Returns q^k, or 0 when the result would exceed `cap`.
std::uint64_t checked_power(std::uint64_t q, std::uint64_t k, std::uint64_t cap = UINT64_MAX);

class LocalRule {
 public:
  LocalRule(std::uint32_t q, std::vector<Offset> memory, std::vector<Symbol> table);

  using Function = std::function<Symbol(std::span<const Symbol>)>;
  static LocalRule from_function(std::uint32_t q, std::vector<Offset> memory, const Function& mu);

  static LocalRule identity(std::uint32_t q = 2);
  /// tau(x)(k) = x(k + offset).
  static LocalRule shift(std::uint32_t q = 2, Offset offset = 1);
  static LocalRule constant(std::uint32_t q = 2, Symbol value = 0, std::vector<Offset> memory = {0});
  /// Binary rule on memory {0,1,2} whose table is the bit pattern of `number`.
  static LocalRule elementary(std::uint32_t number);
  /// mu(x, y, z) = x + y + z mod 2 on memory {0, 1, 2}.
  static LocalRule rule150w();

  std::uint32_t q() const noexcept { return q_; }
  Alphabet alphabet() const noexcept { return Alphabet{q_}; }
  const std::vector<Offset>& memory() const noexcept { return memory_; }
  const std::vector<Symbol>& table() const noexcept { return table_; }
  std::size_t arity() const noexcept { return memory_.size(); }

  std::size_t index_of(std::span<const Symbol> word) const;
  std::vector<Symbol> word_at(std::size_t index) const;
  Symbol operator()(std::span<const Symbol> word) const { return table_[index_of(word)]; }

  /// Smallest and largest memory offset.
  std::pair<Offset, Offset> hull() const;
  Offset width() const { auto [lo, hi] = hull(); return hi - lo + 1; }

  friend bool operator==(const LocalRule&, const LocalRule&) = default;

 private:
  std::uint32_t q_;
  std::vector<Offset> memory_;
  std::vector<Symbol> table_;
};

/// Same map over the integers, memory replaced by the contiguous hull
/// lo..hi (extra cells are read and ignored).
LocalRule pad_to_hull(const LocalRule& rule);

/// Same map with every memory cell the table ignores removed. A rule that
/// depends on nothing keeps a single memory cell.
LocalRule drop_unused_memory(const LocalRule& rule);

/// The integer-universe rule of outer o inner.
LocalRule compose_z(const LocalRule& outer, const LocalRule& inner);

// ---------------------------------------------------------------------------
// Finite groups

struct FiniteConfig {
  std::vector<Symbol> cells;

  std::size_t size() const noexcept { return cells.size(); }
  Symbol operator[](std::size_t g) const { return cells[g]; }
  friend auto operator<=>(const FiniteConfig&, const FiniteConfig&) = default;
};

/// Base-q counter over element ids, element 0 least significant.
std::uint64_t config_index(const FiniteConfig& x, std::uint32_t q);
FiniteConfig config_from_index(std::uint64_t index, std::uint32_t q, std::size_t cells);

FiniteConfig apply_finite(const LocalRule& rule, const FiniteGroup& group, const FiniteConfig& x);

/// (g x)(h) = x(g^-1 h).
FiniteConfig shift(const FiniteGroup& group, ElementId g, const FiniteConfig& x);

std::vector<ElementId> diff(const FiniteConfig& x, const FiniteConfig& y);

// ---------------------------------------------------------------------------
// The integers

class PeriodicConfigZ {
 public:
  explicit PeriodicConfigZ(std::vector<Symbol> word);
  static PeriodicConfigZ constant(Symbol value) { return PeriodicConfigZ({value}); }

  std::size_t period() const noexcept { return word_.size(); }
  const std::vector<Symbol>& word() const noexcept { return word_; }
  Symbol at(std::int64_t k) const;

  /// Same configuration written with its minimal period.
  PeriodicConfigZ minimal() const;

  /// Equality as functions on the integers.
  friend bool operator==(const PeriodicConfigZ& a, const PeriodicConfigZ& b);

 private:
  std::vector<Symbol> word_;
};

/// A periodic background with finitely many overridden cells: the canonical
/// representative of an asymptotic class. Patch entries always differ from
/// the background.
class PatchedConfigZ {
 public:
  explicit PatchedConfigZ(PeriodicConfigZ background, std::map<std::int64_t, Symbol> patch = {});

  const PeriodicConfigZ& background() const noexcept { return background_; }
  const std::map<std::int64_t, Symbol>& patch() const noexcept { return patch_; }
  Symbol at(std::int64_t k) const;

  /// Copy with cell k set to `value`, re-canonicalised.
  PatchedConfigZ with(std::int64_t k, Symbol value) const;

  friend bool operator==(const PatchedConfigZ&, const PatchedConfigZ&) = default;

 private:
  PeriodicConfigZ background_;
  std::map<std::int64_t, Symbol> patch_;
};

using DiffSet = std::vector<std::int64_t>;

PeriodicConfigZ apply_periodic(const LocalRule& rule, const PeriodicConfigZ& x);
PatchedConfigZ apply_patched(const LocalRule& rule, const PatchedConfigZ& x);

/// output(k) = x(k - g).
PeriodicConfigZ shift(std::int64_t g, const PeriodicConfigZ& x);
PatchedConfigZ shift(std::int64_t g, const PatchedConfigZ& x);

/// Exact disagreement set; throws AsymptoticMismatch when the backgrounds
/// differ as functions.
DiffSet diff(const PatchedConfigZ& x, const PatchedConfigZ& y);

bool asymptotic(const PatchedConfigZ& x, const PatchedConfigZ& y);

/// Image of a finite word: output cell i reads word[i + m - lo] for the
/// hull lo..hi, so the result has word.size() - width + 1 cells.
std::vector<Symbol> apply_word(const LocalRule& rule, std::span<const Symbol> word);

}  // namespace calab
