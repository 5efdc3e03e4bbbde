#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "relmine/node_table.hpp"

namespace relmine {

using CommunityId = std::uint32_t;

// Non-overlapping assignment of a node set to communities 0..k-1. Ids are
// canonical: numbered in order of first appearance along ascending NodeId,
// so two Partitions compare equal iff they group the nodes identically.
class Partition {
 public:
  Partition() = default;

  // `nodes` need not be sorted; `labels[i]` is an arbitrary label for nodes[i].
  static Partition from_labels(std::span<const NodeId> nodes,
                               std::span<const std::uint64_t> labels);
  static Partition singletons(std::span<const NodeId> nodes);
  static Partition single_block(std::span<const NodeId> nodes);

  std::span<const NodeId> nodes() const noexcept { return nodes_; }
  std::span<const CommunityId> labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::size_t community_count() const noexcept { return community_count_; }

  bool contains(NodeId n) const;
  // Throws DataError for unknown nodes.
  CommunityId community_of(NodeId n) const;
  std::vector<std::vector<NodeId>> communities() const;

  Partition restricted_to(std::span<const NodeId> keep) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<NodeId> nodes_;  // sorted
  std::vector<CommunityId> labels_;
  std::size_t community_count_ = 0;
};

// Sorted intersection of the two node sets.
std::vector<NodeId> common_nodes(const Partition& a, const Partition& b);

}  // namespace relmine
