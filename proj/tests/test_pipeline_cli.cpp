#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "relmine/io.hpp"
#include "relmine/metrics.hpp"
#include "relmine/pipeline.hpp"

using namespace relmine;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("relmine_test_" + std::to_string(::getpid())) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

int cli(const std::string& args) {
  const std::string cmd = std::string(RELMINE_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path synth_dir(std::uint64_t seed) {
  const fs::path dir = scratch("synth_" + std::to_string(seed));
  SynthParams params;
  params.community_sizes = {12, 12, 12};
  params.noise_edges = 60;
  params.seed = seed;
  write_synth(generate_planted(params), dir);
  return dir;
}

ExperimentConfig config_for(const fs::path& synth, const fs::path& out) {
  ExperimentConfig cfg;
  cfg.input_events = synth / "events.csv";
  cfg.window_length = 1;
  cfg.ground_truth = synth / "ground_truth.csv";
  cfg.output_dir = out;
  return cfg;
}

const char* const kMachineReports[] = {"trace.json", "quality.json", "consensus.json",
                                       "split_join.json", "classification_final.csv", "nodes.csv"};

}  // namespace

TEST_CASE("pipeline writes every report with ground truth") {
  const fs::path in = synth_dir(1), out = scratch("full");
  const ExperimentResult result = run_pipeline(config_for(in, out));
  for (const char* f : {"trace.json", "trace.txt", "quality.json", "modularity.txt", "consensus.json",
                        "consensus.txt", "split_join.json", "split_join.txt", "classification_final.csv",
                        "nodes.csv", "graphs/original.csv", "graphs/null_model.csv", "graphs/filtered.csv",
                        "graphs/random_subgraph.csv", "partitions/filtered__louvain.csv"})
    CHECK_MESSAGE(fs::exists(out / f), f);

  REQUIRE(result.variants.size() == 4);
  CHECK(result.variants[0].variant == GraphVariant::Original);
  CHECK(result.variants[1].variant == GraphVariant::NullModel);
  CHECK(result.variants[2].variant == GraphVariant::Filtered);
  CHECK(result.variants[3].variant == GraphVariant::RandomSubgraph);
  // null model matched to the filtered size
  CHECK(result.variants[1].graph.edge_count() == result.variants[2].graph.edge_count());
  CHECK(result.null_model_k == result.variants[0].graph.edge_count() - result.variants[2].graph.edge_count());

  // gain = original - filtered, recomputed from raw partitions
  const json sj = json::parse(slurp(out / "split_join.json"));
  CHECK(sj["schema_version"] == 1);
  std::ifstream truth_in(in / "ground_truth.csv");
  NodeTable table = result.log.nodes;
  const Partition truth = io::read_partition(truth_in, table);
  REQUIRE(sj["rows"].size() == 5);
  for (const auto& row : sj["rows"]) {
    const auto algo = *parse_algorithm(row["algorithm"].get<std::string>());
    CHECK(row["gain"].get<std::int64_t>() ==
          row["original"].get<std::int64_t>() - row["filtered"].get<std::int64_t>());
    std::size_t idx = 0;
    while (result.variants[2].algorithms[idx].algorithm != algo) ++idx;
    const Partition& filtered = *result.variants[2].algorithms[idx].partition;
    const auto common = common_nodes(filtered, truth);
    CHECK(row["filtered"].get<std::int64_t>() ==
          split_join(filtered.restricted_to(common), truth.restricted_to(common)));
  }

  // modularity table: one row per variant, one column per algorithm
  std::ifstream table_in(out / "modularity.txt");
  std::string header;
  std::getline(table_in, header);
  std::istringstream hs(header);
  std::vector<std::string> cols{std::istream_iterator<std::string>(hs), {}};
  CHECK(cols == std::vector<std::string>{"modularity", "lp", "louvain", "cnm", "eb", "walktrap"});
  std::vector<std::string> rows;
  for (std::string line; std::getline(table_in, line) && !line.empty();)
    rows.push_back(line.substr(0, line.find(' ')));
  CHECK(rows == std::vector<std::string>{"original", "null_model", "filtered", "random_subgraph"});

  const json quality = json::parse(slurp(out / "quality.json"));
  const double q = quality["results"]["filtered"]["louvain"]["modularity"].get<double>();
  CHECK(q == result.variants[2].algorithms[1].quality->modularity);
}

TEST_CASE("pipeline without ground truth omits the split-join report") {
  const fs::path in = synth_dir(2), out = scratch("no_truth");
  ExperimentConfig cfg = config_for(in, out);
  cfg.ground_truth.reset();
  const ExperimentResult result = run_pipeline(cfg);
  CHECK(!result.truth);
  CHECK(!fs::exists(out / "split_join.json"));
  CHECK(!fs::exists(out / "split_join.txt"));
  CHECK(fs::exists(out / "quality.json"));
  CHECK(fs::exists(out / "consensus.json"));
  CHECK(fs::exists(out / "trace.json"));
}

TEST_CASE("single-algorithm run gives a 1x1 zero consensus") {
  const fs::path in = synth_dir(3), out = scratch("lp_only");
  ExperimentConfig cfg = config_for(in, out);
  cfg.algorithms = {Algorithm::LabelPropagation};
  run_pipeline(cfg);
  const json c = json::parse(slurp(out / "consensus.json"));
  for (const char* v : {"original", "filtered"}) {
    CHECK(c["variants"][v]["split_join"] == json::parse("[[0]]"));
    CHECK(c["variants"][v]["consensus_score"].get<double>() == 0.0);
  }
  const json sj = json::parse(slurp(out / "split_join.json"));
  CHECK(sj["rows"].size() == 1);
}

TEST_CASE("identical configs give byte-identical machine-readable reports") {
  const fs::path in = synth_dir(4), a = scratch("det_a"), b = scratch("det_b");
  ExperimentConfig cfg = config_for(in, a);
  cfg.seed = 99;
  run_pipeline(cfg);
  cfg.output_dir = b;
  run_pipeline(cfg);
  for (const char* f : kMachineReports) CHECK_MESSAGE(slurp(a / f) == slurp(b / f), f);
  for (const auto& entry : fs::recursive_directory_iterator(a))
    if (entry.is_regular_file())
      CHECK(slurp(entry.path()) == slurp(b / fs::relative(entry.path(), a)));
}

TEST_CASE("config validation") {
  ExperimentConfig cfg;
  cfg.window_length = 1;
  CHECK_NOTHROW(cfg.validate());
  cfg.algorithms.clear();
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = ExperimentConfig{};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);  // window length 0
  cfg.window_length = 1;
  cfg.p_rnd = 1.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("cli synth writes three re-ingestable, reproducible files") {
  const fs::path a = scratch("cli_synth_a"), b = scratch("cli_synth_b");
  REQUIRE(cli("synth --seed 7 --out " + a.string()) == 0);
  REQUIRE(cli("synth --seed 7 --out " + b.string()) == 0);
  for (const char* f : {"events.csv", "ground_truth.csv", "noise_labels.csv"}) {
    CHECK(fs::exists(a / f));
    CHECK(slurp(a / f) == slurp(b / f));
  }
  std::ifstream events(a / "events.csv");
  CHECK(parse_events(events).events.size() > 0);
  CHECK(cli("synth --sizes 2,2 --noise-edges 5 --out " + scratch("cli_over").string()) == 2);
}

TEST_CASE("cli run, classify and detect") {
  const fs::path in = synth_dir(5), out = scratch("cli_run");
  const std::string events = (in / "events.csv").string();
  REQUIRE(cli("run --input " + events + " --window-length 1 --algorithms louvain,cnm --ground-truth " +
              (in / "ground_truth.csv").string() + " --out " + out.string()) == 0);
  CHECK(fs::exists(out / "split_join.json"));

  const fs::path cls = out / "classes.csv";
  REQUIRE(cli("classify --input " + events + " --window-length 1 --out " + cls.string()) == 0);
  std::ifstream cls_in(cls);
  std::size_t rows = 0;
  for (std::string line; std::getline(cls_in, line);)
    if (!line.empty() && line[0] != '#') ++rows;
  std::ifstream events_in(events);
  const EventLog log = parse_events(events_in);
  CHECK(rows == aggregate(build_windows(log.events, {1, 0})).edge_count());

  const fs::path part = out / "detect.csv";
  REQUIRE(cli("detect --input " + (out / "graphs/original.csv").string() + " --algorithm walktrap --out " +
              part.string()) == 0);
  NodeTable names;
  std::ifstream part_in(part);
  CHECK(io::read_partition(part_in, names).size() == 36);
}

TEST_CASE("cli config file with flag overrides") {
  const fs::path in = synth_dir(6), out = scratch("cli_config");
  const fs::path config = out / "run.toml";
  std::ofstream(config) << "[run]\ninput = \"" << (in / "events.csv").string()
                        << "\"\nwindow-length = 1\nalgorithms = [\"lp\", \"cnm\"]\nout = \""
                        << (out / "a").string() << "\"\n";
  REQUIRE(cli("run --config " + config.string()) == 0);
  CHECK(json::parse(slurp(out / "a/quality.json"))["algorithms"] == json::parse(R"(["lp","cnm"])"));
  REQUIRE(cli("run --config " + config.string() + " --algorithms louvain") == 0);
  CHECK(json::parse(slurp(out / "a/quality.json"))["algorithms"] == json::parse(R"(["louvain"])"));
}

TEST_CASE("cli exit codes") {
  const fs::path dir = scratch("cli_codes");
  CHECK(cli("") == 1);
  CHECK(cli("run --window-length 1 --out " + dir.string()) == 1);  // missing --input
  CHECK(cli("run --input " + (dir / "absent.csv").string() + " --window-length 1 --out " + dir.string()) == 1);
  CHECK(cli("frobnicate") == 1);

  const fs::path bad = dir / "bad.csv";
  std::ofstream(bad) << "0,a,b\n1,a\n";
  CHECK(cli("run --input " + bad.string() + " --window-length 1 --out " + (dir / "o1").string()) == 2);
  CHECK(cli("run --input " + bad.string() + " --window-length 1 --p-rnd 1.5 --out " + (dir / "o2").string()) == 1);
  CHECK(cli("detect --input " + bad.string() + " --algorithm nope") == 1);

  // a repeated triangle is all Random in the first pass and needs a second pass to confirm
  const fs::path tri = dir / "tri.csv";
  {
    std::ofstream t(tri);
    for (int w = 0; w < 5; ++w) t << w << ",a,b\n" << w << ",b,c\n" << w << ",a,c\n";
  }
  const fs::path nc = dir / "nc";
  CHECK(cli("run --input " + tri.string() + " --window-length 1 --max-iterations 1 --out " + nc.string()) == 3);
  REQUIRE(fs::exists(nc / "trace.json"));
  const json trace = json::parse(slurp(nc / "trace.json"));
  CHECK(trace["converged"] == false);
  CHECK(trace["iterations"].size() == 1);
}
