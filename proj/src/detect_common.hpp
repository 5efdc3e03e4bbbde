#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "relmine/error.hpp"
#include "relmine/partition.hpp"
#include "relmine/tempgraph.hpp"

namespace relmine::detail {

// Modularity of a labeling of an IndexedGraph's local nodes.
inline double local_modularity(const IndexedGraph& g, std::span<const std::uint32_t> label) {
  const double m = static_cast<double>(g.edge_count());
  std::vector<double> internal(g.size(), 0.0), degree(g.size(), 0.0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    degree[label[i]] += static_cast<double>(g.degree(i));
    for (std::uint32_t j : g.neighbors(i))
      if (i < j && label[i] == label[j]) internal[label[i]] += 1.0;
  }
  double q = 0.0;
  for (std::size_t c = 0; c < g.size(); ++c) {
    const double share = degree[c] / (2.0 * m);
    q += internal[c] / m - share * share;
  }
  return q;
}

inline Partition to_partition(const IndexedGraph& g, std::span<const std::uint32_t> label) {
  std::vector<std::uint64_t> wide(label.begin(), label.end());
  return Partition::from_labels(g.global, wide);
}

inline void require_nodes(const AggregatedGraph& g) {
  if (g.node_count() == 0) throw DataError("community detection on an empty graph");
}

}  // namespace relmine::detail
