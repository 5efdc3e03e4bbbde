#include "relmine/node_table.hpp"

#include <limits>
#include <stdexcept>

namespace relmine {

NodeId NodeTable::intern(std::string_view name) {
  std::string key(name);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  if (names_.size() >= std::numeric_limits<NodeId>::max())
    throw std::length_error("node table full");
  auto id = static_cast<NodeId>(names_.size());
  names_.push_back(key);
  index_.emplace(std::move(key), id);
  return id;
}

std::optional<NodeId> NodeTable::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeTable NodeTable::numbered(std::size_t count) {
  NodeTable table;
  for (std::size_t i = 0; i < count; ++i) table.intern(std::to_string(i));
  return table;
}

}  // namespace relmine
