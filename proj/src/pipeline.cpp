#include "relmine/pipeline.hpp"

#include <algorithm>
#include <future>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "relmine/error.hpp"
#include "relmine/io.hpp"
#include "relmine/seed.hpp"

namespace relmine {

using Json = nlohmann::ordered_json;

void ExperimentConfig::validate() const {
  if (window_length < 1) throw std::invalid_argument("window length must be >= 1");
  if (!(p_rnd > 0.0 && p_rnd < 1.0)) throw std::invalid_argument("p-rnd must lie in (0, 1)");
  if (shuffles < 1) throw std::invalid_argument("shuffles must be >= 1");
  if (max_iterations < 1) throw std::invalid_argument("max-iterations must be >= 1");
  if (walk_length < 1) throw std::invalid_argument("walk length must be >= 1");
  if (algorithms.empty()) throw std::invalid_argument("at least one algorithm is required");
}

std::string_view to_string(GraphVariant v) {
  switch (v) {
    case GraphVariant::Original: return "original";
    case GraphVariant::NullModel: return "null_model";
    case GraphVariant::Filtered: return "filtered";
    case GraphVariant::RandomSubgraph: return "random_subgraph";
  }
  return "?";
}

namespace {

constexpr GraphVariant kVariants[] = {GraphVariant::Original, GraphVariant::NullModel,
                                      GraphVariant::Filtered, GraphVariant::RandomSubgraph};

std::optional<std::int64_t> truth_distance(const VariantResult& variant, std::size_t algo_index,
                                           const Partition& truth) {
  const auto& detected = variant.algorithms[algo_index].partition;
  if (!detected) return std::nullopt;
  const std::vector<NodeId> common = common_nodes(*detected, truth);
  return split_join(detected->restricted_to(common), truth.restricted_to(common));
}

}  // namespace

ExperimentResult run_experiment(EventLog log, const WindowingPolicy& policy,
                                const ExperimentConfig& cfg,
                                const std::optional<Partition>& truth) {
  ExperimentResult result;
  result.network = build_windows(log.events, policy);
  result.log = std::move(log);

  FilterOptions filter_options{cfg.p_rnd, derive_seed(cfg.seed, "filter"), cfg.shuffles,
                               cfg.max_iterations};
  result.filter = filter_to_fixpoint(result.network, filter_options);

  AggregatedGraph original = aggregate(result.network);
  AggregatedGraph filtered = aggregate(result.filter.network);
  result.null_model_k = original.edge_count() - filtered.edge_count();
  AggregatedGraph null_model =
      null_model_filter(original, result.null_model_k, derive_seed(cfg.seed, "null_model"));
  AggregatedGraph random_part =
      random_induced_subgraph(original, cumulative_labels(original, result.filter));

  result.variants.push_back({GraphVariant::Original, std::move(original), {}, {}});
  result.variants.push_back({GraphVariant::NullModel, std::move(null_model), {}, {}});
  result.variants.push_back({GraphVariant::Filtered, std::move(filtered), {}, {}});
  result.variants.push_back({GraphVariant::RandomSubgraph, std::move(random_part), {}, {}});

  // Algorithm runs are independent; collect them in a fixed order.
  std::vector<std::future<AlgorithmResult>> pending;
  for (const auto& variant : result.variants) {
    for (Algorithm a : cfg.algorithms) {
      const AggregatedGraph* graph = &variant.graph;
      DetectOptions options{0, cfg.eb_edge_budget, cfg.walk_length};
      options.seed = derive_seed(cfg.seed, "detect/" + std::string(to_string(variant.variant)) +
                                               "/" + std::string(to_string(a)));
      pending.push_back(std::async(std::launch::async, [graph, a, options] {
        AlgorithmResult r{a, std::nullopt, std::nullopt};
        if (graph->edge_count() == 0) return r;
        r.partition = run_algorithm(a, *graph, options);
        r.quality = quality(*graph, *r.partition);
        return r;
      }));
    }
  }
  std::size_t next = 0;
  for (auto& variant : result.variants) {
    for (std::size_t i = 0; i < cfg.algorithms.size(); ++i)
      variant.algorithms.push_back(pending[next++].get());
    std::vector<NamedPartition> named;
    for (const auto& r : variant.algorithms)
      if (r.partition) named.push_back({std::string(to_string(r.algorithm)), *r.partition});
    if (!named.empty()) variant.consensus = consensus_matrix(named);
  }

  if (truth) {
    std::vector<TruthComparison> rows;
    for (std::size_t i = 0; i < cfg.algorithms.size(); ++i) {
      rows.push_back({cfg.algorithms[i], truth_distance(result.variants[0], i, *truth),
                      truth_distance(result.variants[1], i, *truth),
                      truth_distance(result.variants[2], i, *truth)});
    }
    result.truth = std::move(rows);
    result.truth_common_nodes_original =
        common_nodes(Partition::single_block(result.variants[0].graph.nodes()), *truth).size();
    result.truth_common_nodes_filtered =
        common_nodes(Partition::single_block(result.variants[2].graph.nodes()), *truth).size();
  }
  return result;
}

namespace {

Json trace_json(const FilterTrace& trace) {
  Json iterations = Json::array();
  for (std::size_t i = 0; i < trace.iterations.size(); ++i) {
    const auto& it = trace.iterations[i];
    Json counts, proportions;
    for (RelationshipClass c : kAllClasses) {
      const auto count = it.class_counts[static_cast<std::size_t>(c)];
      counts[std::string(to_string(c))] = count;
      proportions[std::string(to_string(c))] =
          it.edges_at_start == 0 ? 0.0
                                 : static_cast<double>(count) / static_cast<double>(it.edges_at_start);
    }
    iterations.push_back({{"iteration", i + 1},
                          {"edges_at_start", it.edges_at_start},
                          {"class_counts", counts},
                          {"class_proportions", proportions},
                          {"edges_removed", it.edges_removed},
                          {"nodes_removed", it.nodes_removed},
                          {"thresholds",
                           {{"persistence", it.thresholds.persistence},
                            {"overlap", it.thresholds.overlap},
                            {"p_rnd", it.thresholds.p_rnd}}}});
  }
  return {{"schema_version", kReportSchemaVersion},
          {"kind", "filter_trace"},
          {"converged", trace.converged},
          {"iterations", iterations}};
}

std::string trace_table(const FilterTrace& trace) {
  std::ostringstream out;
  out << "iteration  edges    friend   bridge   acquaint random   removed  nodes_removed\n";
  for (std::size_t i = 0; i < trace.iterations.size(); ++i) {
    const auto& it = trace.iterations[i];
    out << std::left << std::setw(11) << i + 1 << std::setw(9) << it.edges_at_start;
    for (auto c : it.class_counts) out << std::setw(9) << c;
    out << std::setw(9) << it.edges_removed << it.nodes_removed << '\n';
  }
  out << (trace.converged ? "converged\n" : "NOT converged\n");
  return out.str();
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json quality_json(const ExperimentResult& r, const ExperimentConfig& cfg) {
  Json graphs, results;
  for (const auto& variant : r.variants) {
    const auto c = characterize(variant.graph);
    const std::string name(to_string(variant.variant));
    graphs[name] = {{"n", c.n}, {"m", c.m}, {"max_degree", c.max_degree}};
    Json per_algo;
    for (const auto& a : variant.algorithms) {
      Json entry;
      if (a.quality) {
        Json cut_over_internal = Json::array();
        for (const auto& x : a.quality->conductance.cut_over_internal)
          cut_over_internal.push_back(optional_number(x));
        entry = {{"communities", a.partition->community_count()},
                 {"modularity", a.quality->modularity},
                 {"mean_conductance", a.quality->conductance.mean},
                 {"conductance", a.quality->conductance.per_community},
                 {"cut_over_internal", cut_over_internal},
                 {"skipped_communities", a.quality->conductance.skipped}};
      }
      per_algo[std::string(to_string(a.algorithm))] = entry;
    }
    results[name] = per_algo;
  }
  Json algorithms = Json::array();
  for (Algorithm a : cfg.algorithms) algorithms.push_back(to_string(a));
  return {{"schema_version", kReportSchemaVersion},
          {"kind", "quality"},
          {"seed", cfg.seed},
          {"algorithms", algorithms},
          {"null_model_k", r.null_model_k},
          {"graphs", graphs},
          {"results", results}};
}

std::string format_cell(const std::optional<double>& v) {
  if (!v) return "-";
  std::ostringstream s;
  s << std::fixed << std::setprecision(4) << *v;
  return s.str();
}

std::string modularity_table(const ExperimentResult& r, const ExperimentConfig& cfg) {
  std::ostringstream out;
  out << std::left << std::setw(17) << "modularity";
  for (Algorithm a : cfg.algorithms) out << std::setw(10) << to_string(a);
  out << '\n';
  for (const auto& variant : r.variants) {
    out << std::setw(17) << to_string(variant.variant);
    for (const auto& a : variant.algorithms)
      out << std::setw(10)
          << format_cell(a.quality ? std::optional<double>(a.quality->modularity) : std::nullopt);
    out << '\n';
  }
  out << "\nmean conductance\n";
  for (const auto& variant : r.variants) {
    out << std::setw(17) << to_string(variant.variant);
    for (const auto& a : variant.algorithms)
      out << std::setw(10)
          << format_cell(a.quality ? std::optional<double>(a.quality->conductance.mean)
                                   : std::nullopt);
    out << '\n';
  }
  return out.str();
}

Json consensus_json(const ExperimentResult& r) {
  Json variants;
  for (const auto& variant : r.variants) {
    const std::string name(to_string(variant.variant));
    if (!variant.consensus) {
      variants[name] = nullptr;
      continue;
    }
    variants[name] = {{"algorithms", variant.consensus->names},
                      {"split_join", variant.consensus->distance},
                      {"consensus_score", variant.consensus->score}};
  }
  return {{"schema_version", kReportSchemaVersion}, {"kind", "consensus"}, {"variants", variants}};
}

std::string consensus_table(const ExperimentResult& r) {
  std::ostringstream out;
  for (const auto& variant : r.variants) {
    out << to_string(variant.variant);
    if (!variant.consensus) {
      out << ": no edges\n\n";
      continue;
    }
    const auto& c = *variant.consensus;
    out << " (consensus score " << format_cell(c.score) << ")\n" << std::setw(10) << "";
    for (const auto& n : c.names) out << std::setw(10) << n;
    out << '\n';
    for (std::size_t i = 0; i < c.names.size(); ++i) {
      out << std::setw(10) << c.names[i];
      for (auto d : c.distance[i]) out << std::setw(10) << d;
      out << '\n';
    }
    out << '\n';
  }
  return out.str();
}

Json optional_int(const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<std::int64_t> gain_of(const TruthComparison& row) {
  if (!row.original || !row.filtered) return std::nullopt;
  return *row.original - *row.filtered;
}

Json truth_json(const ExperimentResult& r) {
  Json rows = Json::array();
  for (const auto& row : *r.truth) {
    rows.push_back({{"algorithm", to_string(row.algorithm)},
                    {"original", optional_int(row.original)},
                    {"null_model", optional_int(row.null_model)},
                    {"filtered", optional_int(row.filtered)},
                    {"gain", optional_int(gain_of(row))}});
  }
  return {{"schema_version", kReportSchemaVersion},
          {"kind", "split_join_vs_ground_truth"},
          {"common_nodes_original", r.truth_common_nodes_original},
          {"common_nodes_filtered", r.truth_common_nodes_filtered},
          {"rows", rows}};
}

std::string truth_table(const ExperimentResult& r) {
  auto cell = [](const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  std::ostringstream out;
  out << std::left << std::setw(10) << "algorithm" << std::setw(10) << "original" << std::setw(12)
      << "null_model" << std::setw(10) << "filtered" << "gain\n";
  for (const auto& row : *r.truth) {
    out << std::setw(10) << to_string(row.algorithm) << std::setw(10) << cell(row.original)
        << std::setw(12) << cell(row.null_model) << std::setw(10) << cell(row.filtered)
        << cell(gain_of(row)) << '\n';
  }
  return out.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  auto out = io::open_for_write(path);
  out << text;
}

void write_json(const std::filesystem::path& path, const Json& j) { write_text(path, j.dump(2) + "\n"); }

}  // namespace

void write_trace(const FilterTrace& trace, const std::filesystem::path& dir) {
  write_json(dir / "trace.json", trace_json(trace));
  write_text(dir / "trace.txt", trace_table(trace));
}

void write_reports(const ExperimentResult& result, const ExperimentConfig& cfg) {
  namespace fs = std::filesystem;
  const fs::path& dir = cfg.output_dir;
  fs::create_directories(dir / "partitions");
  fs::create_directories(dir / "graphs");
  const NodeTable& names = result.log.nodes;

  {
    auto out = io::open_for_write(dir / "nodes.csv");
    io::write_node_table(out, names);
  }
  write_trace(result.filter.trace, dir);
  {
    auto out = io::open_for_write(dir / "classification_final.csv");
    io::write_classification(out, result.filter.final_assessment, names);
  }
  for (const auto& variant : result.variants) {
    const std::string vname(to_string(variant.variant));
    {
      auto out = io::open_for_write(dir / "graphs" / (vname + ".csv"));
      io::write_edge_list(out, variant.graph, names);
    }
    for (const auto& a : variant.algorithms) {
      if (!a.partition) continue;
      auto out = io::open_for_write(dir / "partitions" /
                                    (vname + "__" + std::string(to_string(a.algorithm)) + ".csv"));
      io::write_partition(out, *a.partition, names);
    }
  }
  write_json(dir / "quality.json", quality_json(result, cfg));
  write_text(dir / "modularity.txt", modularity_table(result, cfg));
  write_json(dir / "consensus.json", consensus_json(result));
  write_text(dir / "consensus.txt", consensus_table(result));
  if (result.truth) {
    write_json(dir / "split_join.json", truth_json(result));
    write_text(dir / "split_join.txt", truth_table(result));
  }
}

ExperimentResult run_pipeline(const ExperimentConfig& cfg) {
  cfg.validate();
  EventLog log;
  {
    auto in = io::open_for_read(cfg.input_events);
    log = parse_events(in);
  }
  std::optional<Partition> truth;
  if (cfg.ground_truth) {
    auto in = io::open_for_read(*cfg.ground_truth);
    truth = io::read_partition(in, log.nodes);
  }
  WindowingPolicy policy{cfg.window_length, 0};
  if (cfg.origin) {
    policy.origin = *cfg.origin;
  } else if (!log.events.empty()) {
    policy.origin = log.events.front().t;
  }
  try {
    ExperimentResult result = run_experiment(std::move(log), policy, cfg, truth);
    write_reports(result, cfg);
    return result;
  } catch (const ConvergenceError& e) {
    std::filesystem::create_directories(cfg.output_dir);
    write_trace(e.trace(), cfg.output_dir);
    throw;
  }
}

void write_synth(const SynthNetwork& synth, const std::filesystem::path& output_dir) {
  std::error_code ec;
  std::filesystem::create_directories(output_dir, ec);
  if (ec) throw DataError("cannot create " + output_dir.string() + ": " + ec.message());
  {
    auto out = io::open_for_write(output_dir / "events.csv");
    io::write_events(out, synth.log);
  }
  {
    auto out = io::open_for_write(output_dir / "ground_truth.csv");
    io::write_partition(out, synth.ground_truth, synth.log.nodes);
  }
  {
    auto out = io::open_for_write(output_dir / "noise_labels.csv");
    io::write_edge_origins(out, synth.origin, synth.log.nodes);
  }
}

}  // namespace relmine
