#include "relmine/detect.hpp"

namespace relmine {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::LabelPropagation: return "lp";
    case Algorithm::Louvain: return "louvain";
    case Algorithm::Cnm: return "cnm";
    case Algorithm::EdgeBetweenness: return "eb";
    case Algorithm::Walktrap: return "walktrap";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (Algorithm a : kAllAlgorithms)
    if (to_string(a) == name) return a;
  return std::nullopt;
}

Partition run_algorithm(Algorithm a, const AggregatedGraph& g, const DetectOptions& options) {
  switch (a) {
    case Algorithm::LabelPropagation: return label_propagation(g, options.seed);
    case Algorithm::Louvain: return louvain(g, options.seed);
    case Algorithm::Cnm: return greedy_modularity_cnm(g);
    case Algorithm::EdgeBetweenness: return edge_betweenness_gn(g, options.edge_budget);
    case Algorithm::Walktrap: return walktrap(g, options.walk_length);
  }
  return {};
}

}  // namespace relmine
