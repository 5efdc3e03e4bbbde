#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "relmine/partition.hpp"
#include "relmine/tempgraph.hpp"

namespace relmine {

enum class Algorithm : std::uint8_t { LabelPropagation, Louvain, Cnm, EdgeBetweenness, Walktrap };

std::string_view to_string(Algorithm a);  // lp, louvain, cnm, eb, walktrap
std::optional<Algorithm> parse_algorithm(std::string_view name);
inline constexpr Algorithm kAllAlgorithms[] = {
    Algorithm::LabelPropagation, Algorithm::Louvain, Algorithm::Cnm,
    Algorithm::EdgeBetweenness, Algorithm::Walktrap};

// Asynchronous label propagation with seeded visit order and tie breaking.
Partition label_propagation(const AggregatedGraph& g, std::uint64_t seed);

// Multi-level local moving + coarsening modularity optimization.
Partition louvain(const AggregatedGraph& g, std::uint64_t seed);

// Clauset-Newman-Moore greedy agglomeration.
Partition greedy_modularity_cnm(const AggregatedGraph& g);

inline constexpr std::size_t kDefaultEdgeBudget = 50'000;

// Brandes edge betweenness on the unweighted graph, one value per entry of
// g.edges(). Each unordered source/target pair contributes once.
std::vector<double> edge_betweenness(const AggregatedGraph& g);

// Girvan-Newman divisive clustering; returns the recorded component
// partition with the highest modularity. Throws DataError above the budget.
Partition edge_betweenness_gn(const AggregatedGraph& g,
                              std::size_t edge_budget = kDefaultEdgeBudget);

inline constexpr std::size_t kDefaultWalkLength = 4;

// Pons-Latapy random-walk agglomeration cut at maximum modularity.
Partition walktrap(const AggregatedGraph& g, std::size_t walk_length = kDefaultWalkLength);

struct DetectOptions {
  std::uint64_t seed = 0;
  std::size_t edge_budget = kDefaultEdgeBudget;
  std::size_t walk_length = kDefaultWalkLength;
};

Partition run_algorithm(Algorithm a, const AggregatedGraph& g, const DetectOptions& options);

}  // namespace relmine
