#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "relmine/classify.hpp"
#include "relmine/detect.hpp"
#include "relmine/filter.hpp"
#include "relmine/ingest.hpp"
#include "relmine/metrics.hpp"
#include "relmine/synth.hpp"

namespace relmine {

inline constexpr int kReportSchemaVersion = 1;

struct ExperimentConfig {
  std::filesystem::path input_events;
  Timestamp window_length = 0;
  std::optional<Timestamp> origin;  // defaults to the earliest event
  double p_rnd = 0.05;
  std::size_t shuffles = 10;
  std::uint64_t seed = 0;
  std::vector<Algorithm> algorithms{std::begin(kAllAlgorithms), std::end(kAllAlgorithms)};
  std::optional<std::filesystem::path> ground_truth;
  std::filesystem::path output_dir;
  std::size_t max_iterations = 100;
  std::size_t eb_edge_budget = kDefaultEdgeBudget;
  std::size_t walk_length = kDefaultWalkLength;

  // Throws std::invalid_argument.
  void validate() const;
};

enum class GraphVariant : std::uint8_t { Original, NullModel, Filtered, RandomSubgraph };
std::string_view to_string(GraphVariant v);

struct AlgorithmResult {
  Algorithm algorithm;
  std::optional<Partition> partition;  // nullopt when the variant has no edges
  std::optional<QualityReport> quality;
};

struct VariantResult {
  GraphVariant variant;
  AggregatedGraph graph;
  std::vector<AlgorithmResult> algorithms;
  std::optional<ConsensusMatrix> consensus;
};

struct TruthComparison {
  Algorithm algorithm;
  // split-join against the ground truth per variant; nullopt when no partition
  std::optional<std::int64_t> original;
  std::optional<std::int64_t> null_model;
  std::optional<std::int64_t> filtered;
};

// Everything the pipeline computes, independent of where it is written.
struct ExperimentResult {
  EventLog log;
  TemporalNetwork network;
  FilterResult filter;
  std::size_t null_model_k = 0;
  std::vector<VariantResult> variants;  // Original, NullModel, Filtered, RandomSubgraph
  std::optional<std::vector<TruthComparison>> truth;
  std::size_t truth_common_nodes_original = 0;
  std::size_t truth_common_nodes_filtered = 0;
};

// In-memory core of the pipeline, shared by the CLI and the acceptance
// suite. `truth` is expressed in log.nodes ids.
// Only the non-path fields of `cfg` are used. Randomness derives from
// cfg.seed per stage: "filter", "null_model" and "detect/<variant>/<algo>".
ExperimentResult run_experiment(EventLog log, const WindowingPolicy& policy,
                                const ExperimentConfig& cfg,
                                const std::optional<Partition>& truth);

// Reads the configured inputs, runs the experiment and writes every report
// into cfg.output_dir.
ExperimentResult run_pipeline(const ExperimentConfig& cfg);

void write_reports(const ExperimentResult& result, const ExperimentConfig& cfg);

// trace.json and trace.txt; also written for a partial trace on non-convergence.
void write_trace(const FilterTrace& trace, const std::filesystem::path& dir);

// Writes events.csv, ground_truth.csv and noise_labels.csv.
void write_synth(const SynthNetwork& synth, const std::filesystem::path& output_dir);

}  // namespace relmine
