#include "calab/deciders_onedim.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <string>

#include "calab/debruijn.hpp"
#include "calab/error.hpp"

namespace calab {

namespace {

constexpr std::uint64_t kMaxSubsetStates = std::uint64_t{1} << 20;
constexpr std::uint64_t kMaxInverseEnumeration = std::uint64_t{1} << 26;
constexpr std::uint64_t kPeriodicVerificationBudget = std::uint64_t{1} << 18;
constexpr std::uint64_t kDeBruijnVerificationBudget = std::uint64_t{1} << 22;

using Word = std::vector<Symbol>;

Word rotate(const Word& w, std::size_t s) {
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[(i + s) % w.size()];
  return out;
}

// Minimal period, phase anchored so the first configuration's least rotation
// starts at cell 0 (ties broken on the second), pair ordered lexicographically.
std::pair<PeriodicConfigZ, PeriodicConfigZ> canonical_pair(const Word& a, const Word& b) {
  std::optional<std::pair<Word, Word>> best;
  for (int order = 0; order < 2; ++order) {
    const Word& first = order == 0 ? a : b;
    const Word& second = order == 0 ? b : a;
    for (std::size_t s = 0; s < first.size(); ++s) {
      std::pair<Word, Word> candidate{PeriodicConfigZ(rotate(first, s)).minimal().word(),
                                      PeriodicConfigZ(rotate(second, s)).minimal().word()};
      if (!best || candidate < *best) best = std::move(candidate);
    }
  }
  return {PeriodicConfigZ(best->first), PeriodicConfigZ(best->second)};
}

std::vector<std::uint64_t> bitset_of_all(std::uint64_t n) {
  std::vector<std::uint64_t> bits((n + 63) / 64, ~std::uint64_t{0});
  if (n % 64 != 0) bits.back() = (std::uint64_t{1} << (n % 64)) - 1;
  return bits;
}

// Reachability over pair-graph edges, forwards or backwards, from a seed set.
std::vector<bool> reach(const PairGraph& pg, const std::vector<bool>& seed, bool forward) {
  const std::uint64_t n = pg.size();
  std::vector<std::vector<std::uint64_t>> reverse;
  if (!forward) {
    reverse.resize(n);
    for (std::uint64_t p = 0; p < n; ++p) {
      for (const auto& e : pg.edges(p)) reverse[e.to].push_back(p);
    }
  }
  std::vector<bool> seen = seed;
  std::deque<std::uint64_t> queue;
  for (std::uint64_t p = 0; p < n; ++p) {
    if (seen[p]) queue.push_back(p);
  }
  while (!queue.empty()) {
    const std::uint64_t p = queue.front();
    queue.pop_front();
    auto visit = [&](std::uint64_t r) {
      if (!seen[r]) {
        seen[r] = true;
        queue.push_back(r);
      }
    };
    if (forward) {
      for (const auto& e : pg.edges(p)) visit(e.to);
    } else {
      for (std::uint64_t r : reverse[p]) visit(r);
    }
  }
  return seen;
}

struct PathStep {
  std::uint64_t from;
  Symbol a;
  Symbol b;
};

// Shortest pair-graph path from any node in `sources` to a node accepted by
// `is_target`; returns the edges taken and the end node.
std::optional<std::pair<std::vector<PathStep>, std::uint64_t>> shortest_path(
    const PairGraph& pg, const std::vector<std::uint64_t>& sources,
    const std::function<bool(std::uint64_t)>& is_target) {
  constexpr std::uint64_t kNone = ~std::uint64_t{0};
  std::vector<std::uint64_t> parent(pg.size(), kNone);
  std::vector<PathStep> via(pg.size());
  std::vector<bool> seen(pg.size(), false);
  std::deque<std::uint64_t> queue;
  for (std::uint64_t s : sources) {
    if (!seen[s]) {
      seen[s] = true;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const std::uint64_t p = queue.front();
    queue.pop_front();
    if (is_target(p)) {
      std::vector<PathStep> steps;
      for (std::uint64_t cur = p; parent[cur] != kNone; cur = parent[cur]) steps.push_back(via[cur]);
      std::reverse(steps.begin(), steps.end());
      return std::make_pair(std::move(steps), p);
    }
    for (const auto& e : pg.edges(p)) {
      if (!seen[e.to]) {
        seen[e.to] = true;
        parent[e.to] = p;
        via[e.to] = PathStep{p, e.a, e.b};
        queue.push_back(e.to);
      }
    }
  }
  return std::nullopt;
}

// Sets R_t (ends of length-t walks) and S_t (starts of length-t walks) for
// t = 0..t_max.
std::vector<std::vector<bool>> walk_layers(const PairGraph& pg, std::int64_t t_max, bool forward) {
  const std::uint64_t n = pg.size();
  std::vector<std::vector<bool>> layers{std::vector<bool>(n, true)};
  for (std::int64_t t = 1; t <= t_max; ++t) {
    const auto& prev = layers.back();
    std::vector<bool> next(n, false);
    for (std::uint64_t p = 0; p < n; ++p) {
      for (const auto& e : pg.edges(p)) {
        if (forward && prev[p]) next[e.to] = true;
        if (!forward && prev[e.to]) next[p] = true;
      }
    }
    const bool stable = next == prev;
    layers.push_back(std::move(next));
    if (stable) {
      while (static_cast<std::int64_t>(layers.size()) <= t_max) layers.push_back(layers.back());
      break;
    }
  }
  return layers;
}

}  // namespace

SurjectivityVerdict decide_surjective(const LocalRule& rule) {
  const DeBruijnGraph graph(rule);
  const std::uint64_t n = graph.node_count();
  using NodeSet = std::vector<std::uint64_t>;

  std::vector<NodeSet> states{bitset_of_all(n)};
  std::vector<std::pair<std::size_t, Symbol>> parent{{0, 0}};
  std::map<NodeSet, std::size_t> index{{states[0], 0}};

  for (std::size_t head = 0; head < states.size(); ++head) {
    for (Symbol b = 0; b < graph.q(); ++b) {
      NodeSet next(states[head].size(), 0);
      bool empty = true;
      for (std::uint64_t u = 0; u < n; ++u) {
        if (!((states[head][u / 64] >> (u % 64)) & 1U)) continue;
        for (Symbol a = 0; a < graph.q(); ++a) {
          if (graph.output(u, a) != b) continue;
          const std::uint64_t v = graph.next(u, a);
          next[v / 64] |= std::uint64_t{1} << (v % 64);
          empty = false;
        }
      }
      if (empty) {
        Word orphan{b};
        for (std::size_t cur = head; cur != 0; cur = parent[cur].first) orphan.push_back(parent[cur].second);
        std::reverse(orphan.begin(), orphan.end());
        return SurjectivityVerdict{false, std::move(orphan)};
      }
      if (!index.contains(next)) {
        if (states.size() >= kMaxSubsetStates) {
          fail(Errc::budget_exceeded, "subset construction exceeded its state budget");
        }
        index.emplace(next, states.size());
        states.push_back(std::move(next));
        parent.emplace_back(head, b);
      }
    }
  }
  return SurjectivityVerdict{true, std::nullopt};
}

InjectivityVerdict decide_injective(const LocalRule& rule) {
  const DeBruijnGraph graph(rule);
  const PairGraph pg(graph);
  const auto component = pg.components();

  std::optional<std::pair<Word, Word>> shortest;
  for (std::uint64_t p = 0; p < pg.size(); ++p) {
    for (const auto& e : pg.edges(p)) {
      if (e.a == e.b || component[p] != component[e.to]) continue;
      auto path = shortest_path(pg, {e.to}, [p](std::uint64_t node) { return node == p; });
      if (!path) fail(Errc::internal, "strongly connected component without a return path");
      Word a{e.a};
      Word b{e.b};
      for (const auto& step : path->first) {
        a.push_back(step.a);
        b.push_back(step.b);
      }
      if (!shortest || a.size() < shortest->first.size()) shortest.emplace(std::move(a), std::move(b));
    }
  }
  if (!shortest) return InjectivityVerdict{true, std::nullopt};
  return InjectivityVerdict{false, canonical_pair(shortest->first, shortest->second)};
}

PreInjectivityVerdict decide_pre_injective(const LocalRule& rule) {
  const DeBruijnGraph graph(rule);
  const PairGraph pg(graph);
  std::vector<bool> diagonal(pg.size(), false);
  std::vector<std::uint64_t> diagonal_nodes;
  for (std::uint64_t p = 0; p < pg.size(); ++p) {
    if (pg.diagonal(p)) {
      diagonal[p] = true;
      diagonal_nodes.push_back(p);
    }
  }
  const auto from_diagonal = reach(pg, diagonal, true);
  const auto to_diagonal = reach(pg, diagonal, false);

  for (std::uint64_t p = 0; p < pg.size(); ++p) {
    if (!from_diagonal[p]) continue;
    for (const auto& e : pg.edges(p)) {
      if (e.a == e.b || !to_diagonal[e.to]) continue;

      auto head = shortest_path(pg, diagonal_nodes, [p](std::uint64_t node) { return node == p; });
      auto tail = shortest_path(pg, {e.to}, [&](std::uint64_t node) { return pg.diagonal(node); });
      if (!head || !tail) fail(Errc::internal, "diagonal walk disappeared");

      // Zero background; the walk starts at the diagonal node (d, d) reached
      // from the all-zero node by feeding d's symbols, and returns to zero by
      // feeding w-1 zeros after the final diagonal node.
      const std::uint64_t start = head->first.empty() ? p : head->first.front().from;
      Word x = graph.node_word(pg.first(start));
      Word y = x;
      for (const auto& step : head->first) {
        x.push_back(step.a);
        y.push_back(step.b);
      }
      x.push_back(e.a);
      y.push_back(e.b);
      for (const auto& step : tail->first) {
        x.push_back(step.a);
        y.push_back(step.b);
      }
      for (std::int64_t i = 0; i + 1 < graph.width(); ++i) {
        x.push_back(0);
        y.push_back(0);
      }
      std::map<std::int64_t, Symbol> px, py;
      for (std::size_t i = 0; i < x.size(); ++i) {
        px.emplace(static_cast<std::int64_t>(i), x[i]);
        py.emplace(static_cast<std::int64_t>(i), y[i]);
      }
      const auto zero = PeriodicConfigZ::constant(0);
      return PreInjectivityVerdict{false, std::make_pair(PatchedConfigZ(zero, std::move(px)),
                                                         PatchedConfigZ(zero, std::move(py)))};
    }
  }
  return PreInjectivityVerdict{true, std::nullopt};
}

LocalRule find_inverse_rule(const LocalRule& rule, std::int64_t max_radius) {
  if (!decide_injective(rule).injective) fail(Errc::not_bijective, "the rule is not injective");

  const DeBruijnGraph graph(rule);
  const PairGraph pg(graph);
  const Offset lo = graph.lo();
  const Offset hi = graph.hi();
  const std::int64_t w = graph.width();
  const std::uint32_t q = graph.q();

  // An inverse reading image cells [-hi - t1, -hi + t2] exists iff no edge
  // with differing inputs starts at the end of a length-t1 walk and ends at
  // the start of a length-t2 walk.
  const std::int64_t t_max = max_radius + std::abs(hi);
  const auto ends = walk_layers(pg, t_max, true);
  const auto starts = walk_layers(pg, t_max, false);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> differing;
  for (std::uint64_t p = 0; p < pg.size(); ++p) {
    for (const auto& e : pg.edges(p)) {
      if (e.a != e.b) differing.emplace_back(p, e.to);
    }
  }
  auto valid = [&](std::int64_t t1, std::int64_t t2) {
    return std::none_of(differing.begin(), differing.end(), [&](const auto& edge) {
      return ends[static_cast<std::size_t>(t1)][edge.first] && starts[static_cast<std::size_t>(t2)][edge.second];
    });
  };

  std::optional<std::pair<std::int64_t, std::int64_t>> window;
  for (std::int64_t r = 0; r <= max_radius && !window; ++r) {
    const std::int64_t t1_max = r - hi;
    const std::int64_t t2_max = r + hi;
    if (t1_max < 0 || t2_max < 0 || !valid(t1_max, t2_max)) continue;
    for (std::int64_t total = 0; total <= t1_max + t2_max && !window; ++total) {
      for (std::int64_t t1 = 0; t1 <= std::min(total, t1_max) && !window; ++t1) {
        const std::int64_t t2 = total - t1;
        if (t2 <= t2_max && valid(t1, t2)) window.emplace(t1, t2);
      }
    }
  }
  if (!window) {
    fail(Errc::inverse_bound_exceeded, "no inverse of radius <= " + std::to_string(max_radius));
  }

  const auto [t1, t2] = *window;
  const std::int64_t length = t1 + t2 + 1;
  const std::int64_t cells = length + w - 1;
  const std::uint64_t enumeration = checked_power(q, static_cast<std::uint64_t>(cells), kMaxInverseEnumeration);
  if (enumeration == 0) {
    fail(Errc::inverse_bound_exceeded, "inverse window too large to tabulate");
  }
  const std::uint64_t table_size = checked_power(q, static_cast<std::uint64_t>(length));
  std::vector<Symbol> table(table_size, 0);
  const std::int64_t center = hi + t1 - lo;  // preimage cell read by the inverse

  // Depth-first over preimage words: a start node, then `length` edges.
  std::function<void(std::int64_t, std::uint64_t, std::uint64_t, Symbol)> walk =
      [&](std::int64_t depth, std::uint64_t node, std::uint64_t image, Symbol center_symbol) {
        if (depth == length) {
          table[image] = center_symbol;
          return;
        }
        const std::int64_t position = w - 1 + depth;
        for (Symbol a = 0; a < q; ++a) {
          walk(depth + 1, graph.next(node, a), image * q + graph.output(node, a),
               position == center ? a : center_symbol);
        }
      };
  for (std::uint64_t node = 0; node < graph.node_count(); ++node) {
    const Word prefix = graph.node_word(node);
    const Symbol center_symbol = center < w - 1 ? prefix[static_cast<std::size_t>(center)] : Symbol{0};
    walk(0, node, 0, center_symbol);
  }

  std::vector<Offset> memory(static_cast<std::size_t>(length));
  for (std::int64_t i = 0; i < length; ++i) memory[static_cast<std::size_t>(i)] = -hi - t1 + i;
  return drop_unused_memory(LocalRule(q, std::move(memory), std::move(table)));
}

std::vector<Symbol> de_bruijn_sequence(std::uint32_t q, std::size_t n) {
  if (q == 1 || n == 0) return {0};
  std::vector<Symbol> a(q * n + 1, 0);
  std::vector<Symbol> sequence;
  std::function<void(std::size_t, std::size_t)> db = [&](std::size_t t, std::size_t p) {
    if (t > n) {
      if (n % p == 0) sequence.insert(sequence.end(), a.begin() + 1, a.begin() + static_cast<std::ptrdiff_t>(p) + 1);
      return;
    }
    a[t] = a[t - p];
    db(t + 1, p);
    for (Symbol j = a[t - p] + 1; j < q; ++j) {
      a[t] = j;
      db(t + 1, t);
    }
  };
  db(1, 1);
  return sequence;
}

bool verify_inverse(const LocalRule& rule, const LocalRule& inverse) {
  if (rule.q() != inverse.q()) return false;
  const std::uint32_t q = rule.q();
  // The composite reads [rl + il, rh + ih]; the window must also cover cell 0,
  // or a pure shift would pass on short periods.
  const auto [rl, rh] = rule.hull();
  const auto [il, ih] = inverse.hull();
  const std::int64_t composed_width = std::max<std::int64_t>(rh + ih, 0) - std::min<std::int64_t>(rl + il, 0) + 1;
  auto round_trip = [&](const PeriodicConfigZ& x) {
    return apply_periodic(inverse, apply_periodic(rule, x)) == x;
  };

  std::uint64_t spent = 0;
  for (std::int64_t p = 1; p <= 2 * composed_width; ++p) {
    const std::uint64_t count = checked_power(q, static_cast<std::uint64_t>(p), kPeriodicVerificationBudget);
    if (count == 0 || spent + count > kPeriodicVerificationBudget) break;
    spent += count;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      const FiniteConfig word = config_from_index(idx, q, static_cast<std::size_t>(p));
      if (!round_trip(PeriodicConfigZ(word.cells))) return false;
    }
  }

  if (checked_power(q, static_cast<std::uint64_t>(composed_width), kDeBruijnVerificationBudget) == 0) {
    fail(Errc::budget_exceeded, "composed window too wide for a de Bruijn verification");
  }
  return round_trip(PeriodicConfigZ(de_bruijn_sequence(q, static_cast<std::size_t>(composed_width))));
}

PatchedConfigZ random_patched(std::mt19937_64& rng, std::uint32_t q, std::size_t max_period,
                              std::size_t max_patch, std::int64_t span) {
  std::uniform_int_distribution<std::size_t> period_dist(1, max_period);
  std::uniform_int_distribution<std::size_t> patch_dist(0, max_patch);
  std::uniform_int_distribution<Symbol> symbol_dist(0, q - 1);
  std::uniform_int_distribution<std::int64_t> cell_dist(-span, span);
  Word background(period_dist(rng));
  for (auto& s : background) s = symbol_dist(rng);
  std::map<std::int64_t, Symbol> patch;
  const std::size_t count = patch_dist(rng);
  for (std::size_t i = 0; i < count; ++i) patch[cell_dist(rng)] = symbol_dist(rng);
  return PatchedConfigZ(PeriodicConfigZ(std::move(background)), std::move(patch));
}

namespace {

struct Edit {
  PatchedConfigZ x;
  PatchedConfigZ y;
  std::int64_t cell;
};

// Draws x and a single-cell edit y of tau(x).
Edit draw_edit(std::mt19937_64& rng, const LocalRule& rule) {
  const std::uint32_t q = rule.q();
  PatchedConfigZ x = random_patched(rng, q);
  const PatchedConfigZ image = apply_patched(rule, x);
  std::uniform_int_distribution<std::int64_t> cell_dist(-10, 10);
  std::uniform_int_distribution<Symbol> step_dist(1, q - 1);
  const std::int64_t g = cell_dist(rng);
  const Symbol changed = (image.at(g) + step_dist(rng)) % q;
  return Edit{std::move(x), image.with(g, changed), g};
}

}  // namespace

CorrectionCheck check_corrections(const LocalRule& rule, const LocalRule& inverse, std::uint64_t instances,
                                  std::uint64_t seed) {
  CorrectionCheck check;
  if (rule.q() < 2) return check;
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < instances; ++i) {
    const Edit edit = draw_edit(rng, rule);
    const PatchedConfigZ z = apply_patched(inverse, edit.y);
    ++check.attempted;
    if (asymptotic(z, edit.x) && apply_patched(rule, z) == edit.y) ++check.verified;
  }
  return check;
}

CorrectionRadius uniform_correction_radius(const LocalRule& rule, const LocalRule& inverse,
                                           std::uint64_t samples, std::uint64_t seed) {
  CorrectionRadius radius;
  if (rule.q() < 2) return radius;
  std::mt19937_64 rng(seed);
  bool first = true;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Edit edit = draw_edit(rng, rule);
    const PatchedConfigZ z = apply_patched(inverse, edit.y);
    if (apply_patched(rule, z) != edit.y) fail(Errc::internal, "inverse does not correct the edit");
    for (std::int64_t k : diff(z, edit.x)) {
      const Offset offset = k - edit.cell;
      if (first) {
        radius.lo = radius.hi = offset;
        first = false;
      } else {
        radius.lo = std::min(radius.lo, offset);
        radius.hi = std::max(radius.hi, offset);
      }
    }
    ++radius.samples;
  }
  return radius;
}

PostSurjectivityVerdict decide_post_surjective(const LocalRule& rule, const OneDimOptions& options) {
  PostSurjectivityVerdict verdict;
  verdict.post_surjective = decide_injective(rule).injective;
  if (!verdict.post_surjective) return verdict;
  try {
    LocalRule inverse = find_inverse_rule(rule, options.max_radius);
    if (!verify_inverse(rule, inverse)) fail(Errc::internal, "constructed inverse fails verification");
    verdict.corrections = check_corrections(rule, inverse, options.correction_instances, options.seed);
    verdict.inverse = std::move(inverse);
  } catch (const Error& e) {
    if (e.code() != Errc::inverse_bound_exceeded) throw;
    verdict.inverse_bound_exceeded = true;
  }
  return verdict;
}

PropertyReport1D analyze_onedim(const LocalRule& rule, const OneDimOptions& options) {
  PropertyReport1D report{rule};
  auto surjectivity = decide_surjective(rule);
  auto injectivity = decide_injective(rule);
  auto pre_injectivity = decide_pre_injective(rule);
  auto post = decide_post_surjective(rule, options);

  report.surjective = surjectivity.surjective;
  report.orphan = std::move(surjectivity.orphan);
  report.injective = injectivity.injective;
  report.non_injectivity_witness = std::move(injectivity.witness);
  report.pre_injective = pre_injectivity.pre_injective;
  report.non_pre_injectivity_witness = std::move(pre_injectivity.witness);
  report.post_surjective = post.post_surjective;
  report.invertible = report.injective;
  report.inverse = std::move(post.inverse);
  report.corrections = post.corrections;
  report.inverse_bound_exceeded = post.inverse_bound_exceeded;

  if (report.surjective != report.pre_injective) {
    fail(Errc::internal, "Garden of Eden agreement violated: surjective != pre-injective");
  }
  if (report.injective && !report.surjective) fail(Errc::internal, "injective rule reported non-surjective");
  return report;
}

}  // namespace calab
