#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "relmine/node_table.hpp"

namespace relmine {

using WindowIndex = std::int64_t;

// Unordered node pair, stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Normalizes endpoint order. Self pairs are a caller bug.
Edge make_edge(NodeId a, NodeId b);

// One materialized time window. Edges are sorted and unique; `counts[i]` is
// the number of raw interactions that collapsed into `edges[i]`.
struct Snapshot {
  WindowIndex index = 0;
  std::vector<Edge> edges;
  std::vector<std::uint32_t> counts;

  bool contains(Edge e) const;
};

// Sequence of non-empty snapshots spanning `window_count` windows. Empty
// windows are not materialized but still count towards `window_count`.
struct TemporalNetwork {
  std::vector<Snapshot> snapshots;
  WindowIndex window_count = 0;
  std::vector<NodeId> nodes;  // sorted universe

  std::size_t event_pair_count() const;  // sum over snapshots of |E_t|
  bool empty() const noexcept { return snapshots.empty(); }

  // Throws DataError when the structural invariants are violated.
  void validate() const;

  friend bool operator==(const TemporalNetwork&, const TemporalNetwork&);
};

bool operator==(const Snapshot& a, const Snapshot& b);

struct WeightedEdge {
  Edge edge;
  std::uint32_t weight = 1;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// Simple undirected static graph over a subset of a NodeTable's ids.
// Neighbor lists are sorted; edges are sorted by (u, v).
class AggregatedGraph {
 public:
  AggregatedGraph() = default;

  // Duplicate edges are rejected. `extra_nodes` adds isolated nodes.
  static AggregatedGraph from_edges(std::vector<WeightedEdge> edges,
                                    std::span<const NodeId> extra_nodes = {});

  std::span<const NodeId> nodes() const noexcept { return nodes_; }
  std::span<const WeightedEdge> edges() const noexcept { return edges_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool has_node(NodeId n) const;
  bool has_edge(NodeId a, NodeId b) const;
  std::span<const NodeId> neighbors(NodeId n) const;
  std::size_t degree(NodeId n) const { return neighbors(n).size(); }
  // 0 when absent.
  std::uint32_t weight(NodeId a, NodeId b) const;

  friend bool operator==(const AggregatedGraph& a, const AggregatedGraph& b) {
    return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<NodeId> nodes_;
  std::vector<WeightedEdge> edges_;
  std::vector<std::vector<NodeId>> adjacency_;  // indexed by NodeId
};

struct GraphCharacterization {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_degree = 0;

  friend bool operator==(const GraphCharacterization&,
                         const GraphCharacterization&) = default;
};

AggregatedGraph aggregate(const TemporalNetwork& net);
GraphCharacterization characterize(const AggregatedGraph& g);
AggregatedGraph remove_isolated(const AggregatedGraph& g);

// Compressed view with local indices 0..n-1 in ascending NodeId order, used
// by the detection and metric kernels.
struct IndexedGraph {
  std::vector<NodeId> global;        // local -> NodeId
  std::vector<std::size_t> offsets;  // size n + 1
  std::vector<std::uint32_t> targets;

  explicit IndexedGraph(const AggregatedGraph& g);

  std::size_t size() const noexcept { return global.size(); }
  std::size_t edge_count() const noexcept { return targets.size() / 2; }
  std::span<const std::uint32_t> neighbors(std::size_t i) const {
    return {targets.data() + offsets[i], offsets[i + 1] - offsets[i]};
  }
  std::size_t degree(std::size_t i) const { return offsets[i + 1] - offsets[i]; }
};

}  // namespace relmine
