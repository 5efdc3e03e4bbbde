#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "relmine/tempgraph.hpp"

namespace relmine {

// Temporal and topological strength of one relationship.
struct EdgeFeatures {
  double persistence = 0.0;  // fraction of windows containing the pair
  double overlap = 0.0;      // neighborhood overlap (Jaccard) on the aggregate

  friend bool operator==(const EdgeFeatures&, const EdgeFeatures&) = default;
};

enum class RelationshipClass : std::uint8_t { Friend, Bridge, Acquaintance, Random };

inline constexpr std::array<RelationshipClass, 4> kAllClasses = {
    RelationshipClass::Friend, RelationshipClass::Bridge,
    RelationshipClass::Acquaintance, RelationshipClass::Random};

std::string_view to_string(RelationshipClass c);

struct Thresholds {
  double persistence = 0.0;
  double overlap = 0.0;
  double p_rnd = 0.05;

  friend bool operator==(const Thresholds&, const Thresholds&) = default;
};

struct EdgeAssessment {
  Edge edge;
  EdgeFeatures features;
  RelationshipClass label = RelationshipClass::Random;
};

// Sorted edge -> class lookup.
class EdgeLabels {
 public:
  EdgeLabels() = default;
  explicit EdgeLabels(std::vector<std::pair<Edge, RelationshipClass>> entries);
  explicit EdgeLabels(std::span<const EdgeAssessment> assessments);

  std::optional<RelationshipClass> find(Edge e) const;
  std::size_t size() const noexcept { return entries_.size(); }
  std::span<const std::pair<Edge, RelationshipClass>> entries() const noexcept {
    return entries_;
  }

 private:
  std::vector<std::pair<Edge, RelationshipClass>> entries_;
};

// Snapshots containing `pair` over net.window_count. Throws DataError when
// the pair never occurs or the network spans no windows.
double persistence(Edge pair, const TemporalNetwork& net);

// |N(u) ∩ N(v)| / |(N(u) ∪ N(v)) \ {u, v}|, 0 for an empty reduced union.
// Throws DataError if {u, v} is not an edge of g.
double neighborhood_overlap(const AggregatedGraph& g, NodeId u, NodeId v);

RelationshipClass classify_features(const EdgeFeatures& f, const Thresholds& th);

// Degree-preserving double-edge swap rewiring of one snapshot's edge set.
// Performs `swaps_per_edge * |edges|` attempts; inputs with fewer than two
// edges are returned unchanged. Output is sorted.
std::vector<Edge> degree_preserving_shuffle(std::span<const Edge> edges,
                                            std::mt19937_64& rng,
                                            std::size_t swaps_per_edge = 10);

struct ReferencePool {
  std::vector<double> persistence;
  std::vector<double> overlap;
};

// Features of every edge of every reference network, pooled. Each reference
// rewires all snapshots of `net` independently.
ReferencePool reference_features(const TemporalNetwork& net, std::uint64_t seed,
                                 std::size_t shuffles);

// Nearest-rank empirical quantile: the ceil(q * N)-th smallest value.
double empirical_quantile(std::vector<double> values, double q);

// Thresholds at the (1 - p_rnd) quantile of the pooled reference features.
// Throws std::invalid_argument on bad p_rnd/shuffles, DataError when the
// references contain no edges.
Thresholds calibrate_thresholds(const TemporalNetwork& net, double p_rnd,
                                std::uint64_t seed, std::size_t shuffles);

// One assessment per edge of aggregate(net), sorted by edge.
std::vector<EdgeAssessment> classify_edges(const TemporalNetwork& net,
                                           const Thresholds& th);

}  // namespace relmine
