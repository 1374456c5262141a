#include "calab/debruijn.hpp"

#include <string>

#include "calab/error.hpp"

namespace calab {

namespace {

constexpr std::uint64_t kMaxPairNodes = std::uint64_t{1} << 22;

}  // namespace

DeBruijnGraph::DeBruijnGraph(const LocalRule& rule)
    : window_(pad_to_hull(rule)), q_(rule.q()), width_(rule.width()), lo_(rule.hull().first),
      hi_(rule.hull().second),
      nodes_(checked_power(rule.q(), static_cast<std::uint64_t>(width_ - 1), kMaxPairNodes)) {
  if (nodes_ == 0) fail(Errc::budget_exceeded, "de Bruijn graph has too many nodes");
}

std::vector<Symbol> DeBruijnGraph::node_word(std::uint64_t node) const {
  std::vector<Symbol> word(static_cast<std::size_t>(width_ - 1));
  for (std::size_t i = word.size(); i-- > 0;) {
    word[i] = static_cast<Symbol>(node % q_);
    node /= q_;
  }
  return word;
}

PairGraph::PairGraph(const DeBruijnGraph& graph) : graph_(&graph) {
  const std::uint64_t n = graph.node_count();
  if (n > kMaxPairNodes / n) {
    fail(Errc::budget_exceeded, "pair graph with " + std::to_string(n) + "^2 nodes is too large");
  }
  adjacency_.resize(n * n);
  for (std::uint64_t u = 0; u < n; ++u) {
    for (std::uint64_t v = 0; v < n; ++v) {
      auto& out = adjacency_[u * n + v];
      for (Symbol a = 0; a < graph.q(); ++a) {
        for (Symbol b = 0; b < graph.q(); ++b) {
          if (graph.output(u, a) == graph.output(v, b)) {
            out.push_back(Edge{graph.next(u, a) * n + graph.next(v, b), a, b});
          }
        }
      }
    }
  }
}

std::vector<std::uint64_t> PairGraph::components() const {
  // Iterative Tarjan.
  constexpr std::uint64_t kNone = ~std::uint64_t{0};
  const std::uint64_t n = size();
  std::vector<std::uint64_t> index(n, kNone), low(n, 0), component(n, kNone);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint64_t> stack;
  std::vector<std::pair<std::uint64_t, std::size_t>> call;
  std::uint64_t counter = 0;
  std::uint64_t next_component = 0;

  for (std::uint64_t root = 0; root < n; ++root) {
    if (index[root] != kNone) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [node, edge] = call.back();
      const auto& out = adjacency_[node];
      if (edge < out.size()) {
        const std::uint64_t to = out[edge++].to;
        if (index[to] == kNone) {
          index[to] = low[to] = counter++;
          stack.push_back(to);
          on_stack[to] = true;
          call.emplace_back(to, 0);
        } else if (on_stack[to]) {
          low[node] = std::min(low[node], index[to]);
        }
        continue;
      }
      const std::uint64_t finished = node;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[finished]);
      if (low[finished] == index[finished]) {
        std::uint64_t member;
        do {
          member = stack.back();
          stack.pop_back();
          on_stack[member] = false;
          component[member] = next_component;
        } while (member != finished);
        ++next_component;
      }
    }
  }
  return component;
}

}  // namespace calab
