#include "relmine/partition.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "relmine/error.hpp"

namespace relmine {

Partition Partition::from_labels(std::span<const NodeId> nodes,
                                 std::span<const std::uint64_t> labels) {
  if (nodes.size() != labels.size()) throw DataError("partition node/label size mismatch");
  std::vector<std::size_t> order(nodes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return nodes[a] < nodes[b]; });

  Partition p;
  p.nodes_.reserve(nodes.size());
  p.labels_.reserve(nodes.size());
  std::unordered_map<std::uint64_t, CommunityId> dense;
  for (std::size_t i : order) {
    if (!p.nodes_.empty() && p.nodes_.back() == nodes[i]) throw DataError("node assigned twice");
    auto [it, fresh] = dense.try_emplace(labels[i], static_cast<CommunityId>(dense.size()));
    p.nodes_.push_back(nodes[i]);
    p.labels_.push_back(it->second);
  }
  p.community_count_ = dense.size();
  return p;
}

Partition Partition::singletons(std::span<const NodeId> nodes) {
  std::vector<std::uint64_t> labels(nodes.size());
  std::iota(labels.begin(), labels.end(), 0);
  return from_labels(nodes, labels);
}

Partition Partition::single_block(std::span<const NodeId> nodes) {
  std::vector<std::uint64_t> labels(nodes.size(), 0);
  return from_labels(nodes, labels);
}

bool Partition::contains(NodeId n) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), n);
}

CommunityId Partition::community_of(NodeId n) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), n);
  if (it == nodes_.end() || *it != n) throw DataError("node not covered by partition");
  return labels_[static_cast<std::size_t>(it - nodes_.begin())];
}

std::vector<std::vector<NodeId>> Partition::communities() const {
  std::vector<std::vector<NodeId>> out(community_count_);
  for (std::size_t i = 0; i < nodes_.size(); ++i) out[labels_[i]].push_back(nodes_[i]);
  return out;
}

Partition Partition::restricted_to(std::span<const NodeId> keep) const {
  std::vector<NodeId> sorted_keep(keep.begin(), keep.end());
  std::sort(sorted_keep.begin(), sorted_keep.end());
  std::vector<NodeId> nodes;
  std::vector<std::uint64_t> labels;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!std::binary_search(sorted_keep.begin(), sorted_keep.end(), nodes_[i])) continue;
    nodes.push_back(nodes_[i]);
    labels.push_back(labels_[i]);
  }
  return from_labels(nodes, labels);
}

std::vector<NodeId> common_nodes(const Partition& a, const Partition& b) {
  std::vector<NodeId> out;
  std::set_intersection(a.nodes().begin(), a.nodes().end(), b.nodes().begin(), b.nodes().end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace relmine
