#include "relmine/filter.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "relmine/error.hpp"
#include "relmine/seed.hpp"

namespace relmine {

TemporalNetwork remove_random(const TemporalNetwork& net, const EdgeLabels& labels) {
  TemporalNetwork out;
  out.window_count = net.window_count;
  std::vector<NodeId> nodes;
  for (const auto& snap : net.snapshots) {
    Snapshot kept;
    kept.index = snap.index;
    for (std::size_t i = 0; i < snap.edges.size(); ++i) {
      const Edge e = snap.edges[i];
      auto label = labels.find(e);
      if (!label) throw DataError("no relationship class for a present edge");
      if (*label == RelationshipClass::Random) continue;
      kept.edges.push_back(e);
      kept.counts.push_back(snap.counts[i]);
      nodes.push_back(e.u);
      nodes.push_back(e.v);
    }
    if (!kept.edges.empty()) out.snapshots.push_back(std::move(kept));
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  out.nodes = std::move(nodes);
  return out;
}

FilterResult filter_to_fixpoint(const TemporalNetwork& net, const FilterOptions& options) {
  if (options.max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
  FilterResult result;
  result.network = net;
  FilterTrace& trace = result.trace;

  for (std::size_t iter = 0; iter < options.max_iterations; ++iter) {
    const TemporalNetwork& current = result.network;
    FilterIteration record;
    const AggregatedGraph g = aggregate(current);
    record.edges_at_start = g.edge_count();
    if (g.edge_count() == 0) {
      trace.iterations.push_back(std::move(record));
      trace.converged = true;
      result.final_assessment.clear();
      return result;
    }

    record.thresholds = calibrate_thresholds(current, options.p_rnd,
                                             derive_seed(options.seed, "calibrate", iter),
                                             options.shuffles);
    std::vector<EdgeAssessment> assessment = classify_edges(current, record.thresholds);
    for (const auto& a : assessment) {
      ++record.class_counts[static_cast<std::size_t>(a.label)];
      if (a.label == RelationshipClass::Random) record.removed.push_back(a.edge);
    }
    record.edges_removed = record.removed.size();

    if (record.edges_removed == 0) {
      trace.iterations.push_back(std::move(record));
      trace.converged = true;
      result.final_assessment = std::move(assessment);
      return result;
    }

    TemporalNetwork next = remove_random(current, EdgeLabels(assessment));
    record.nodes_removed = current.nodes.size() - next.nodes.size();
    trace.iterations.push_back(std::move(record));
    result.network = std::move(next);
    result.final_assessment = std::move(assessment);
  }
  throw ConvergenceError("no fixpoint within " + std::to_string(options.max_iterations) +
                             " iterations",
                         trace);
}

AggregatedGraph null_model_filter(const AggregatedGraph& g, std::size_t k, std::uint64_t seed) {
  const std::size_t m = g.edge_count();
  if (k > m) throw DataError("null model asked to remove more edges than the graph has");
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  // partial Fisher-Yates: the first k slots are the removed edges
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, m - 1);
    std::swap(order[i], order[pick(rng)]);
  }
  std::vector<WeightedEdge> kept;
  kept.reserve(m - k);
  for (std::size_t i = k; i < m; ++i) kept.push_back(g.edges()[order[i]]);
  return AggregatedGraph::from_edges(std::move(kept));
}

AggregatedGraph random_induced_subgraph(const AggregatedGraph& g, const EdgeLabels& labels) {
  std::vector<WeightedEdge> kept;
  for (const auto& we : g.edges()) {
    auto label = labels.find(we.edge);
    if (!label) throw DataError("no relationship class for a present edge");
    if (*label == RelationshipClass::Random) kept.push_back(we);
  }
  return AggregatedGraph::from_edges(std::move(kept));
}

EdgeLabels cumulative_labels(const AggregatedGraph& g, const FilterResult& result) {
  std::vector<Edge> removed;
  for (const auto& it : result.trace.iterations)
    removed.insert(removed.end(), it.removed.begin(), it.removed.end());
  std::sort(removed.begin(), removed.end());
  const EdgeLabels survivors(result.final_assessment);

  std::vector<std::pair<Edge, RelationshipClass>> entries;
  entries.reserve(g.edge_count());
  for (const auto& we : g.edges()) {
    if (std::binary_search(removed.begin(), removed.end(), we.edge)) {
      entries.emplace_back(we.edge, RelationshipClass::Random);
    } else if (auto label = survivors.find(we.edge)) {
      entries.emplace_back(we.edge, *label);
    } else {
      throw DataError("edge neither removed nor classified by the filter");
    }
  }
  return EdgeLabels(std::move(entries));
}

}  // namespace relmine
