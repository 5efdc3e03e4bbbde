#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace relmine {

using NodeId = std::uint32_t;

// Maps opaque external node names onto dense indices, in order of first
// insertion.
class NodeTable {
 public:
  NodeId intern(std::string_view name);
  std::optional<NodeId> find(std::string_view name) const;
  const std::string& name(NodeId id) const { return names_.at(id); }
  std::size_t size() const noexcept { return names_.size(); }

  // Table whose names are the decimal renderings of 0..count-1.
  static NodeTable numbered(std::size_t count);

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> index_;
};

}  // namespace relmine
