#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <vector>

#include "relmine/node_table.hpp"
#include "relmine/tempgraph.hpp"

namespace relmine {

using Timestamp = std::int64_t;

struct InteractionEvent {
  Timestamp t = 0;
  NodeId u = 0;
  NodeId v = 0;

  friend bool operator==(const InteractionEvent&, const InteractionEvent&) = default;
};

struct WindowingPolicy {
  Timestamp window_length = 1;
  Timestamp origin = 0;

  WindowIndex window_of(Timestamp t) const { return (t - origin) / window_length; }
};

struct EventLog {
  std::vector<InteractionEvent> events;  // non-decreasing t
  NodeTable nodes;
  std::size_t dropped_self_loops = 0;
};

// Reads `timestamp,u,v` lines; `#` comments and blank lines are skipped.
// Throws ParseError with the 1-based line number on malformed input or a
// negative timestamp. Node ids are assigned in order of first appearance.
EventLog parse_events(std::istream& in);

// Interns names into an existing table, for callers that need a shared id
// space across several files.
EventLog parse_events(std::istream& in, NodeTable nodes);

// Collapses the events of each window into one snapshot per non-empty
// window. Events must be sorted by t and satisfy t >= policy.origin.
TemporalNetwork build_windows(std::span<const InteractionEvent> events,
                              const WindowingPolicy& policy);

}  // namespace relmine
