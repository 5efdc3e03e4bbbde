#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "relmine/ingest.hpp"
#include "relmine/partition.hpp"
#include "relmine/tempgraph.hpp"

namespace relmine {

struct SynthParams {
  std::vector<std::size_t> community_sizes{25, 25, 25, 25};
  std::size_t windows = 50;
  double p_intra = 0.3;
  double social_density = 0.3;
  std::size_t noise_edges = 200;
  std::size_t noise_repeat = 1;
  std::uint64_t seed = 0;

  // Throws std::invalid_argument.
  void validate() const;
};

enum class EdgeOrigin : std::uint8_t { Social, Noise };

struct SynthNetwork {
  EventLog log;  // one event per (window, pair); window w happens at t = w
  TemporalNetwork network;
  Partition ground_truth;
  std::vector<std::pair<Edge, EdgeOrigin>> origin;  // per aggregated edge, sorted
};

// Planted-partition temporal network: a `social_density` share of each
// community's pairs interact per window with probability `p_intra`; each of
// `noise_edges` random cross-community pairs interacts in `noise_repeat`
// distinct random windows. Throws DataError when noise_edges exceeds the
// number of cross-community pairs.
SynthNetwork generate_planted(const SynthParams& params);

}  // namespace relmine
