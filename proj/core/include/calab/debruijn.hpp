#pragma once

#include <cstdint>
#include <vector>

#include "calab/ca_core.hpp"

namespace calab {

/// Transition graph of an integer-universe rule padded to its memory hull
/// lo..hi of width w. Nodes are words of length w-1 (base-q, first symbol
/// most significant); the edge from u on input a goes to the last w-1
/// symbols of u.a and carries the rule's output on the window u.a.
///
/// An edge whose input is cell j outputs image cell j - hi.
class DeBruijnGraph {
 public:
  explicit DeBruijnGraph(const LocalRule& rule);

  std::uint32_t q() const noexcept { return q_; }
  std::int64_t width() const noexcept { return width_; }
  Offset lo() const noexcept { return lo_; }
  Offset hi() const noexcept { return hi_; }
  std::uint64_t node_count() const noexcept { return nodes_; }
  std::uint64_t edge_count() const noexcept { return nodes_ * q_; }

  std::uint64_t next(std::uint64_t node, Symbol input) const { return (node * q_ + input) % nodes_; }
  Symbol output(std::uint64_t node, Symbol input) const { return window_.table()[node * q_ + input]; }

  /// Symbols of a node, first symbol first.
  std::vector<Symbol> node_word(std::uint64_t node) const;

  const LocalRule& window_rule() const noexcept { return window_; }

 private:
  LocalRule window_;
  std::uint32_t q_;
  std::int64_t width_;
  Offset lo_;
  Offset hi_;
  std::uint64_t nodes_;
};

/// Product of the de Bruijn graph with itself restricted to edge pairs with
/// equal outputs. Pair node id = u * node_count + v.
class PairGraph {
 public:
  struct Edge {
    std::uint64_t to;
    Symbol a;
    Symbol b;
  };

  explicit PairGraph(const DeBruijnGraph& graph);

  const DeBruijnGraph& base() const noexcept { return *graph_; }
  std::uint64_t size() const noexcept { return adjacency_.size(); }
  const std::vector<Edge>& edges(std::uint64_t node) const { return adjacency_[node]; }
  bool diagonal(std::uint64_t node) const { return node / graph_->node_count() == node % graph_->node_count(); }
  std::uint64_t first(std::uint64_t node) const { return node / graph_->node_count(); }
  std::uint64_t second(std::uint64_t node) const { return node % graph_->node_count(); }
  std::uint64_t pair(std::uint64_t u, std::uint64_t v) const { return u * graph_->node_count() + v; }

  /// Strongly connected component id of every node.
  std::vector<std::uint64_t> components() const;

 private:
  const DeBruijnGraph* graph_;
  std::vector<std::vector<Edge>> adjacency_;
};

}  // namespace calab
