#include "relmine/tempgraph.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "relmine/error.hpp"

namespace relmine {

Edge make_edge(NodeId a, NodeId b) {
  assert(a != b);
  return a < b ? Edge{a, b} : Edge{b, a};
}

bool Snapshot::contains(Edge e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

bool operator==(const Snapshot& a, const Snapshot& b) {
  return a.index == b.index && a.edges == b.edges && a.counts == b.counts;
}

bool operator==(const TemporalNetwork& a, const TemporalNetwork& b) {
  return a.window_count == b.window_count && a.nodes == b.nodes && a.snapshots == b.snapshots;
}

std::size_t TemporalNetwork::event_pair_count() const {
  std::size_t total = 0;
  for (const auto& s : snapshots) total += s.edges.size();
  return total;
}

void TemporalNetwork::validate() const {
  WindowIndex previous = -1;
  for (const auto& s : snapshots) {
    if (s.index <= previous || s.index >= window_count)
      throw DataError("snapshot indices must increase and stay below window_count");
    previous = s.index;
    if (s.edges.empty()) throw DataError("materialized snapshot without edges");
    if (s.counts.size() != s.edges.size()) throw DataError("snapshot count/edge size mismatch");
    for (std::size_t i = 0; i < s.edges.size(); ++i) {
      const Edge& e = s.edges[i];
      if (e.u >= e.v) throw DataError("snapshot edge not normalized or self-loop");
      if (i > 0 && !(s.edges[i - 1] < e)) throw DataError("snapshot edges not sorted/unique");
      if (!std::binary_search(nodes.begin(), nodes.end(), e.u) ||
          !std::binary_search(nodes.begin(), nodes.end(), e.v))
        throw DataError("snapshot endpoint outside the node universe");
    }
  }
  if (!std::is_sorted(nodes.begin(), nodes.end()) ||
      std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end())
    throw DataError("node universe not sorted/unique");
}

AggregatedGraph AggregatedGraph::from_edges(std::vector<WeightedEdge> edges,
                                            std::span<const NodeId> extra_nodes) {
  AggregatedGraph g;
  std::sort(edges.begin(), edges.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) { return a.edge < b.edge; });
  std::vector<NodeId> nodes(extra_nodes.begin(), extra_nodes.end());
  nodes.reserve(nodes.size() + 2 * edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i].edge;
    if (e.u == e.v) throw DataError("self-loop in aggregated graph");
    if (e.u > e.v) throw DataError("edge endpoints not normalized");
    if (i > 0 && edges[i - 1].edge == e) throw DataError("duplicate edge in aggregated graph");
    if (edges[i].weight == 0) throw DataError("edge weight must be positive");
    nodes.push_back(e.u);
    nodes.push_back(e.v);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  if (!nodes.empty()) g.adjacency_.resize(static_cast<std::size_t>(nodes.back()) + 1);
  for (const auto& we : edges) {
    g.adjacency_[we.edge.u].push_back(we.edge.v);
    g.adjacency_[we.edge.v].push_back(we.edge.u);
  }
  for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());
  g.nodes_ = std::move(nodes);
  g.edges_ = std::move(edges);
  return g;
}

bool AggregatedGraph::has_node(NodeId n) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), n);
}

std::span<const NodeId> AggregatedGraph::neighbors(NodeId n) const {
  if (n >= adjacency_.size()) return {};
  return adjacency_[n];
}

bool AggregatedGraph::has_edge(NodeId a, NodeId b) const {
  auto adj = neighbors(a);
  return std::binary_search(adj.begin(), adj.end(), b);
}

std::uint32_t AggregatedGraph::weight(NodeId a, NodeId b) const {
  if (a == b) return 0;
  Edge e = make_edge(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const WeightedEdge& we, const Edge& key) { return we.edge < key; });
  return it != edges_.end() && it->edge == e ? it->weight : 0;
}

AggregatedGraph aggregate(const TemporalNetwork& net) {
  std::map<Edge, std::uint32_t> counts;
  for (const auto& s : net.snapshots)
    for (const Edge& e : s.edges) ++counts[e];
  std::vector<WeightedEdge> edges;
  edges.reserve(counts.size());
  for (const auto& [e, w] : counts) edges.push_back({e, w});
  return AggregatedGraph::from_edges(std::move(edges));
}

GraphCharacterization characterize(const AggregatedGraph& g) {
  GraphCharacterization c{g.node_count(), g.edge_count(), 0};
  for (NodeId n : g.nodes()) c.max_degree = std::max(c.max_degree, g.degree(n));
  return c;
}

AggregatedGraph remove_isolated(const AggregatedGraph& g) {
  return AggregatedGraph::from_edges({g.edges().begin(), g.edges().end()});
}

IndexedGraph::IndexedGraph(const AggregatedGraph& g)
    : global(g.nodes().begin(), g.nodes().end()) {
  const std::size_t n = global.size();
  offsets.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] = offsets[i] + g.degree(global[i]);
  targets.resize(offsets[n]);
  auto local = [&](NodeId id) {
    return static_cast<std::uint32_t>(
        std::lower_bound(global.begin(), global.end(), id) - global.begin());
  };
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t k = offsets[i];
    // neighbor lists are sorted by NodeId, so local indices stay sorted
    for (NodeId nb : g.neighbors(global[i])) targets[k++] = local(nb);
  }
}

}  // namespace relmine
