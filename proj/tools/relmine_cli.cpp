// relmine: filter random relationships out of temporal interaction data and
// compare community detection before and after.
//
//   relmine synth    --out DIR [generator options]
//   relmine run      --input EVENTS --window-length L --out DIR [options]
//   relmine classify --input EVENTS --window-length L [--out FILE]
//   relmine detect   --input EDGELIST --algorithm NAME [--out FILE]
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 non-convergence.

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "relmine/classify.hpp"
#include "relmine/detect.hpp"
#include "relmine/error.hpp"
#include "relmine/filter.hpp"
#include "relmine/io.hpp"
#include "relmine/metrics.hpp"
#include "relmine/pipeline.hpp"
#include "relmine/seed.hpp"
#include "relmine/synth.hpp"

namespace {

constexpr int kUsageError = 1;
constexpr int kDataError = 2;
constexpr int kNonConvergence = 3;

std::vector<relmine::Algorithm> parse_algorithms(const std::vector<std::string>& names) {
  std::vector<relmine::Algorithm> out;
  for (const auto& n : names) {
    auto a = relmine::parse_algorithm(n);
    if (!a) throw std::invalid_argument("unknown algorithm '" + n + "'");
    if (std::find(out.begin(), out.end(), *a) == out.end()) out.push_back(*a);
  }
  return out;
}

// Writes to the file when a path is given, stdout otherwise.
template <class F>
void emit(const std::string& path, F&& write) {
  if (path.empty()) {
    write(std::cout);
  } else {
    auto out = relmine::io::open_for_write(path);
    write(out);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mine social relationships from temporal interaction data"};
  app.require_subcommand(1);
  app.fallthrough();
  // Subcommand options live under a section named after the subcommand, e.g. [run].
  app.set_config("--config", "", "Config file (TOML/INI); flags override it");

  // run
  relmine::ExperimentConfig cfg;
  std::string input, ground_truth, out_dir;
  std::vector<std::string> algorithm_names{"lp", "louvain", "cnm", "eb", "walktrap"};
  std::int64_t origin = 0;
  auto* run = app.add_subcommand("run", "Filter to fixpoint and compare detection before/after");
  run->add_option("--input", input, "Event file (timestamp,u,v)")->required()->check(CLI::ExistingFile);
  run->add_option("--window-length", cfg.window_length, "Time units per window")->required();
  auto* origin_opt = run->add_option("--origin", origin, "Start of window 0 (default: earliest event)");
  run->add_option("--p-rnd", cfg.p_rnd, "Significance fraction for threshold calibration")
      ->capture_default_str();
  run->add_option("--shuffles", cfg.shuffles, "Reference networks per calibration")->capture_default_str();
  run->add_option("--seed", cfg.seed, "Base random seed")->capture_default_str();
  run->add_option("--algorithms", algorithm_names, "Subset of lp,louvain,cnm,eb,walktrap")
      ->delimiter(',')
      ->capture_default_str();
  run->add_option("--ground-truth", ground_truth, "Partition file (node,community_id)")
      ->check(CLI::ExistingFile);
  run->add_option("--out", out_dir, "Output directory")->required();
  run->add_option("--max-iterations", cfg.max_iterations, "Filter iteration budget")
      ->capture_default_str();
  run->add_option("--eb-edge-budget", cfg.eb_edge_budget, "Largest graph edge betweenness accepts")
      ->capture_default_str();
  run->add_option("--walk-length", cfg.walk_length, "Walktrap random-walk length")->capture_default_str();

  // synth
  relmine::SynthParams params;
  std::string synth_out;
  auto* synth = app.add_subcommand("synth", "Generate a planted-partition temporal network");
  synth->add_option("--sizes", params.community_sizes, "Community sizes")
      ->delimiter(',')
      ->capture_default_str();
  synth->add_option("--windows", params.windows, "Number of windows")->capture_default_str();
  synth->add_option("--p-intra", params.p_intra, "Per-window interaction probability of social pairs")
      ->capture_default_str();
  synth->add_option("--social-density", params.social_density, "Share of intra pairs that are social")
      ->capture_default_str();
  synth->add_option("--noise-edges", params.noise_edges, "Random cross-community pairs")
      ->capture_default_str();
  synth->add_option("--noise-repeat", params.noise_repeat, "Windows each noise pair appears in")
      ->capture_default_str();
  synth->add_option("--seed", params.seed, "Random seed")->capture_default_str();
  synth->add_option("--out", synth_out, "Output directory")->required();

  // classify
  std::string classify_input, classify_out;
  relmine::Timestamp classify_window = 0;
  std::int64_t classify_origin = 0;
  double classify_p_rnd = 0.05;
  std::size_t classify_shuffles = 10;
  std::uint64_t classify_seed = 0;
  auto* classify = app.add_subcommand("classify", "One calibration + classification pass");
  classify->add_option("--input", classify_input, "Event file")->required()->check(CLI::ExistingFile);
  classify->add_option("--window-length", classify_window, "Time units per window")->required();
  auto* classify_origin_opt = classify->add_option("--origin", classify_origin, "Start of window 0");
  classify->add_option("--p-rnd", classify_p_rnd)->capture_default_str();
  classify->add_option("--shuffles", classify_shuffles)->capture_default_str();
  classify->add_option("--seed", classify_seed)->capture_default_str();
  classify->add_option("--out", classify_out, "Output file (default stdout)");

  // detect
  std::string detect_input, detect_out, detect_algorithm;
  relmine::DetectOptions detect_options;
  auto* detect = app.add_subcommand("detect", "Run one algorithm on an edge list");
  detect->add_option("--input", detect_input, "Edge list (u,v[,weight])")->required()->check(CLI::ExistingFile);
  detect->add_option("--algorithm", detect_algorithm, "lp|louvain|cnm|eb|walktrap")->required();
  detect->add_option("--seed", detect_options.seed)->capture_default_str();
  detect->add_option("--eb-edge-budget", detect_options.edge_budget)->capture_default_str();
  detect->add_option("--walk-length", detect_options.walk_length)->capture_default_str();
  detect->add_option("--out", detect_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*run) {
      cfg.input_events = input;
      cfg.output_dir = out_dir;
      if (!ground_truth.empty()) cfg.ground_truth = ground_truth;
      if (origin_opt->count() > 0) cfg.origin = origin;
      cfg.algorithms = parse_algorithms(algorithm_names);
      cfg.validate();
      const auto result = relmine::run_pipeline(cfg);
      const auto& trace = result.filter.trace;
      std::cerr << "filter converged after " << trace.iterations.size() << " iteration(s); "
                << result.null_model_k << " edges removed; reports in " << out_dir << '\n';
    } else if (*synth) {
      params.validate();
      relmine::write_synth(relmine::generate_planted(params), synth_out);
    } else if (*classify) {
      if (classify_window < 1) throw std::invalid_argument("window length must be >= 1");
      auto in = relmine::io::open_for_read(classify_input);
      const relmine::EventLog log = relmine::parse_events(in);
      relmine::WindowingPolicy policy{classify_window, 0};
      if (classify_origin_opt->count() > 0) {
        policy.origin = classify_origin;
      } else if (!log.events.empty()) {
        policy.origin = log.events.front().t;
      }
      const auto net = relmine::build_windows(log.events, policy);
      const auto th = relmine::calibrate_thresholds(
          net, classify_p_rnd, relmine::derive_seed(classify_seed, "classify"), classify_shuffles);
      const auto rows = relmine::classify_edges(net, th);
      std::cerr << "thresholds: persistence " << th.persistence << ", overlap " << th.overlap
                << "; " << log.dropped_self_loops << " self-loop line(s) dropped\n";
      emit(classify_out, [&](std::ostream& out) { relmine::io::write_classification(out, rows, log.nodes); });
    } else if (*detect) {
      const auto algorithm = relmine::parse_algorithm(detect_algorithm);
      if (!algorithm) throw std::invalid_argument("unknown algorithm '" + detect_algorithm + "'");
      relmine::NodeTable names;
      auto in = relmine::io::open_for_read(detect_input);
      const auto g = relmine::io::read_edge_list(in, names);
      const auto p = relmine::run_algorithm(*algorithm, g, detect_options);
      if (g.edge_count() > 0)
        std::cerr << p.community_count() << " communities, modularity "
                  << relmine::modularity(g, p) << '\n';
      emit(detect_out, [&](std::ostream& out) { relmine::io::write_partition(out, p, names); });
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const relmine::ConvergenceError& e) {
    std::cerr << "non-convergence: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  }
  return 0;
}
