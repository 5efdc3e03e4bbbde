#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "relmine/classify.hpp"
#include "relmine/tempgraph.hpp"

namespace relmine {

using ClassCounts = std::array<std::size_t, 4>;  // indexed by RelationshipClass

struct FilterIteration {
  ClassCounts class_counts{};
  std::size_t edges_at_start = 0;
  std::size_t edges_removed = 0;
  std::size_t nodes_removed = 0;
  Thresholds thresholds;
  std::vector<Edge> removed;  // sorted
};

struct FilterTrace {
  std::vector<FilterIteration> iterations;
  bool converged = false;
};

struct FilterOptions {
  double p_rnd = 0.05;
  std::uint64_t seed = 0;
  std::size_t shuffles = 10;
  std::size_t max_iterations = 100;
};

struct FilterResult {
  TemporalNetwork network;
  FilterTrace trace;
  std::vector<EdgeAssessment> final_assessment;  // last iteration's classification
};

// Raised when the iteration budget runs out; carries what was done so far.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, FilterTrace partial)
      : std::runtime_error(what), trace_(std::move(partial)) {}
  const FilterTrace& trace() const noexcept { return trace_; }

 private:
  FilterTrace trace_;
};

// Deletes every Random-labeled pair from every snapshot and drops nodes left
// without edges. window_count is preserved. Throws DataError when a present
// edge has no label.
TemporalNetwork remove_random(const TemporalNetwork& net, const EdgeLabels& labels);

// calibrate -> classify -> remove, repeated until an iteration removes no
// edge. Thresholds are recalibrated on the current network every iteration
// with a per-iteration seed derived from options.seed.
FilterResult filter_to_fixpoint(const TemporalNetwork& net, const FilterOptions& options);

// Deletes exactly k uniformly chosen edges, then prunes isolated nodes.
AggregatedGraph null_model_filter(const AggregatedGraph& g, std::size_t k,
                                  std::uint64_t seed);

// Subgraph of the Random-labeled edges and their endpoints.
AggregatedGraph random_induced_subgraph(const AggregatedGraph& g,
                                        const EdgeLabels& labels);

// Labels for the edges of the unfiltered aggregate `g`: Random for every edge
// removed by some iteration, the final classification otherwise.
EdgeLabels cumulative_labels(const AggregatedGraph& g, const FilterResult& result);

}  // namespace relmine
