#include "calab/ca_core.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "calab/error.hpp"

namespace calab {

namespace {

std::int64_t floor_mod(std::int64_t k, std::int64_t p) {
  std::int64_t r = k % p;
  return r < 0 ? r + p : r;
}

// Removes memory position `pos`, keeping the entries where that digit is 0.
LocalRule drop_position(const LocalRule& rule, std::size_t pos) {
  std::vector<Offset> memory = rule.memory();
  memory.erase(memory.begin() + static_cast<std::ptrdiff_t>(pos));
  const std::uint32_t q = rule.q();
  return LocalRule::from_function(q, memory, [&](std::span<const Symbol> word) {
    std::vector<Symbol> full(word.begin(), word.end());
    full.insert(full.begin() + static_cast<std::ptrdiff_t>(pos), Symbol{0});
    return rule(full);
  });
}

bool depends_on(const LocalRule& rule, std::size_t pos) {
  const std::size_t k = rule.arity();
  const auto q = static_cast<std::size_t>(rule.q());
  std::size_t stride = 1;
  for (std::size_t i = pos + 1; i < k; ++i) stride *= q;
  const auto& table = rule.table();
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    if ((idx / stride) % q != 0) continue;
    for (std::size_t d = 1; d < q; ++d) {
      if (table[idx + d * stride] != table[idx]) return true;
    }
  }
  return false;
}

}  // namespace

std::uint64_t checked_power(std::uint64_t q, std::uint64_t k, std::uint64_t cap) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (q != 0 && result > cap / q) return 0;
    result *= q;
  }
  return result;
}

LocalRule::LocalRule(std::uint32_t q, std::vector<Offset> memory, std::vector<Symbol> table)
    : q_(q), memory_(std::move(memory)), table_(std::move(table)) {
  if (q_ < 1) fail(Errc::invalid_argument, "alphabet size must be at least 1");
  if (memory_.empty()) fail(Errc::invalid_argument, "memory must be nonempty");
  std::vector<Offset> sorted = memory_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    fail(Errc::invalid_argument, "memory entries must be pairwise distinct");
  }
  const std::uint64_t expected = checked_power(q_, memory_.size(), kMaxRuleTable);
  if (expected == 0) fail(Errc::invalid_argument, "rule table would exceed the supported size");
  if (table_.size() != expected) {
    fail(Errc::invalid_argument, "table length " + std::to_string(table_.size()) + " != q^|M| = " +
                                     std::to_string(expected));
  }
  for (Symbol s : table_) {
    if (s >= q_) fail(Errc::invalid_argument, "table symbol out of range");
  }
}

LocalRule LocalRule::from_function(std::uint32_t q, std::vector<Offset> memory, const Function& mu) {
  const std::uint64_t size = checked_power(q, memory.size(), kMaxRuleTable);
  if (size == 0) fail(Errc::invalid_argument, "rule table would exceed the supported size");
  std::vector<Symbol> table(size);
  std::vector<Symbol> word(memory.size(), 0);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    table[idx] = mu(word);
    // Increment with the last memory cell least significant.
    for (std::size_t i = word.size(); i-- > 0;) {
      if (++word[i] < q) break;
      word[i] = 0;
    }
  }
  return LocalRule(q, std::move(memory), std::move(table));
}

LocalRule LocalRule::identity(std::uint32_t q) {
  return from_function(q, {0}, [](std::span<const Symbol> w) { return w[0]; });
}

LocalRule LocalRule::shift(std::uint32_t q, Offset offset) {
  return from_function(q, {offset}, [](std::span<const Symbol> w) { return w[0]; });
}

LocalRule LocalRule::constant(std::uint32_t q, Symbol value, std::vector<Offset> memory) {
  return from_function(q, std::move(memory), [value](std::span<const Symbol>) { return value; });
}

LocalRule LocalRule::elementary(std::uint32_t number) {
  if (number > 255) fail(Errc::invalid_argument, "elementary rule number must be in 0..255");
  std::vector<Symbol> table(8);
  for (std::size_t i = 0; i < 8; ++i) table[i] = (number >> i) & 1U;
  return LocalRule(2, {0, 1, 2}, std::move(table));
}

LocalRule LocalRule::rule150w() {
  return from_function(2, {0, 1, 2}, [](std::span<const Symbol> w) { return (w[0] + w[1] + w[2]) % 2; });
}

std::size_t LocalRule::index_of(std::span<const Symbol> word) const {
  std::size_t idx = 0;
  for (Symbol s : word) idx = idx * q_ + s;
  return idx;
}

std::vector<Symbol> LocalRule::word_at(std::size_t index) const {
  std::vector<Symbol> word(memory_.size());
  for (std::size_t i = word.size(); i-- > 0;) {
    word[i] = static_cast<Symbol>(index % q_);
    index /= q_;
  }
  return word;
}

std::pair<Offset, Offset> LocalRule::hull() const {
  auto [lo, hi] = std::minmax_element(memory_.begin(), memory_.end());
  return {*lo, *hi};
}

LocalRule pad_to_hull(const LocalRule& rule) {
  auto [lo, hi] = rule.hull();
  std::vector<Offset> memory(static_cast<std::size_t>(hi - lo + 1));
  std::iota(memory.begin(), memory.end(), lo);
  if (memory == rule.memory()) return rule;
  std::vector<std::size_t> position;
  for (Offset m : rule.memory()) position.push_back(static_cast<std::size_t>(m - lo));
  std::vector<Symbol> read(rule.arity());
  return LocalRule::from_function(rule.q(), memory, [&](std::span<const Symbol> word) {
    for (std::size_t i = 0; i < position.size(); ++i) read[i] = word[position[i]];
    return rule(read);
  });
}

LocalRule drop_unused_memory(const LocalRule& rule) {
  LocalRule current = rule;
  std::size_t pos = 0;
  while (pos < current.arity()) {
    if (current.arity() > 1 && !depends_on(current, pos)) {
      current = drop_position(current, pos);
    } else {
      ++pos;
    }
  }
  return current;
}

LocalRule compose_z(const LocalRule& outer, const LocalRule& inner) {
  if (outer.q() != inner.q()) fail(Errc::invalid_argument, "composed rules must share an alphabet");
  const auto [lo_o, hi_o] = outer.hull();
  const auto [lo_i, hi_i] = inner.hull();
  std::vector<Offset> memory(static_cast<std::size_t>((hi_o + hi_i) - (lo_o + lo_i) + 1));
  std::iota(memory.begin(), memory.end(), lo_o + lo_i);
  return LocalRule::from_function(outer.q(), memory, [&](std::span<const Symbol> word) {
    const auto middle = apply_word(inner, word);
    return apply_word(outer, middle).at(0);
  });
}

// ---------------------------------------------------------------------------

std::uint64_t config_index(const FiniteConfig& x, std::uint32_t q) {
  std::uint64_t idx = 0;
  for (std::size_t i = x.cells.size(); i-- > 0;) idx = idx * q + x.cells[i];
  return idx;
}

FiniteConfig config_from_index(std::uint64_t index, std::uint32_t q, std::size_t cells) {
  FiniteConfig x{std::vector<Symbol>(cells)};
  for (std::size_t i = 0; i < cells; ++i) {
    x.cells[i] = static_cast<Symbol>(index % q);
    index /= q;
  }
  return x;
}

FiniteConfig apply_finite(const LocalRule& rule, const FiniteGroup& group, const FiniteConfig& x) {
  for (Offset m : rule.memory()) {
    if (!group.contains(m)) {
      fail(Errc::memory_mismatch, "memory id " + std::to_string(m) + " not in group of order " +
                                      std::to_string(group.order()));
    }
  }
  if (x.size() != group.order()) fail(Errc::invalid_argument, "configuration size != group order");
  FiniteConfig out{std::vector<Symbol>(group.order())};
  std::vector<Symbol> word(rule.arity());
  for (ElementId g = 0; g < group.order(); ++g) {
    for (std::size_t i = 0; i < word.size(); ++i) {
      word[i] = x.cells[group.mul(g, static_cast<ElementId>(rule.memory()[i]))];
    }
    out.cells[g] = rule(word);
  }
  return out;
}

FiniteConfig shift(const FiniteGroup& group, ElementId g, const FiniteConfig& x) {
  FiniteConfig out{std::vector<Symbol>(x.size())};
  const ElementId g_inv = group.inv(g);
  for (ElementId h = 0; h < group.order(); ++h) out.cells[h] = x.cells[group.mul(g_inv, h)];
  return out;
}

std::vector<ElementId> diff(const FiniteConfig& x, const FiniteConfig& y) {
  if (x.size() != y.size()) fail(Errc::invalid_argument, "configurations over different groups");
  std::vector<ElementId> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x.cells[i] != y.cells[i]) out.push_back(static_cast<ElementId>(i));
  }
  return out;
}

// ---------------------------------------------------------------------------

PeriodicConfigZ::PeriodicConfigZ(std::vector<Symbol> word) : word_(std::move(word)) {
  if (word_.empty()) fail(Errc::invalid_argument, "period must be at least 1");
}

Symbol PeriodicConfigZ::at(std::int64_t k) const {
  return word_[static_cast<std::size_t>(floor_mod(k, static_cast<std::int64_t>(word_.size())))];
}

PeriodicConfigZ PeriodicConfigZ::minimal() const {
  const std::size_t p = word_.size();
  for (std::size_t d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < p && ok; ++i) ok = word_[i] == word_[i - d];
    if (ok) return PeriodicConfigZ(std::vector<Symbol>(word_.begin(), word_.begin() + static_cast<std::ptrdiff_t>(d)));
  }
  return *this;
}

bool operator==(const PeriodicConfigZ& a, const PeriodicConfigZ& b) {
  const auto pa = static_cast<std::int64_t>(a.period());
  const auto pb = static_cast<std::int64_t>(b.period());
  const std::int64_t l = std::lcm(pa, pb);
  for (std::int64_t k = 0; k < l; ++k) {
    if (a.at(k) != b.at(k)) return false;
  }
  return true;
}

PatchedConfigZ::PatchedConfigZ(PeriodicConfigZ background, std::map<std::int64_t, Symbol> patch)
    : background_(std::move(background)) {
  for (const auto& [k, v] : patch) {
    if (v != background_.at(k)) patch_.emplace(k, v);
  }
}

Symbol PatchedConfigZ::at(std::int64_t k) const {
  auto it = patch_.find(k);
  return it == patch_.end() ? background_.at(k) : it->second;
}

PatchedConfigZ PatchedConfigZ::with(std::int64_t k, Symbol value) const {
  auto patch = patch_;
  patch[k] = value;
  return PatchedConfigZ(background_, std::move(patch));
}

std::vector<Symbol> apply_word(const LocalRule& rule, std::span<const Symbol> word) {
  const auto [lo, hi] = rule.hull();
  const auto width = static_cast<std::size_t>(hi - lo + 1);
  if (word.size() < width) return {};
  std::vector<Symbol> out(word.size() - width + 1);
  std::vector<Symbol> read(rule.arity());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < read.size(); ++j) {
      read[j] = word[i + static_cast<std::size_t>(rule.memory()[j] - lo)];
    }
    out[i] = rule(read);
  }
  return out;
}

PeriodicConfigZ apply_periodic(const LocalRule& rule, const PeriodicConfigZ& x) {
  const auto p = static_cast<std::int64_t>(x.period());
  std::vector<Symbol> out(x.period());
  std::vector<Symbol> read(rule.arity());
  for (std::int64_t k = 0; k < p; ++k) {
    for (std::size_t j = 0; j < read.size(); ++j) read[j] = x.at(k + rule.memory()[j]);
    out[static_cast<std::size_t>(k)] = rule(read);
  }
  return PeriodicConfigZ(std::move(out));
}

PatchedConfigZ apply_patched(const LocalRule& rule, const PatchedConfigZ& x) {
  PeriodicConfigZ background = apply_periodic(rule, x.background());
  std::set<std::int64_t> touched;
  for (const auto& [c, v] : x.patch()) {
    for (Offset m : rule.memory()) touched.insert(c - m);
  }
  std::map<std::int64_t, Symbol> patch;
  std::vector<Symbol> read(rule.arity());
  for (std::int64_t k : touched) {
    for (std::size_t j = 0; j < read.size(); ++j) read[j] = x.at(k + rule.memory()[j]);
    patch.emplace(k, rule(read));
  }
  return PatchedConfigZ(std::move(background), std::move(patch));
}

PeriodicConfigZ shift(std::int64_t g, const PeriodicConfigZ& x) {
  std::vector<Symbol> out(x.period());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = x.at(static_cast<std::int64_t>(k) - g);
  return PeriodicConfigZ(std::move(out));
}

PatchedConfigZ shift(std::int64_t g, const PatchedConfigZ& x) {
  std::map<std::int64_t, Symbol> patch;
  for (const auto& [k, v] : x.patch()) patch.emplace(k + g, v);
  return PatchedConfigZ(shift(g, x.background()), std::move(patch));
}

bool asymptotic(const PatchedConfigZ& x, const PatchedConfigZ& y) {
  return x.background() == y.background();
}

DiffSet diff(const PatchedConfigZ& x, const PatchedConfigZ& y) {
  if (!asymptotic(x, y)) {
    fail(Errc::asymptotic_mismatch, "backgrounds differ, the disagreement set is infinite");
  }
  std::set<std::int64_t> cells;
  for (const auto& [k, v] : x.patch()) cells.insert(k);
  for (const auto& [k, v] : y.patch()) cells.insert(k);
  DiffSet out;
  for (std::int64_t k : cells) {
    if (x.at(k) != y.at(k)) out.push_back(k);
  }
  return out;
}

}  // namespace calab
