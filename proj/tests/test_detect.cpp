#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "relmine/detect.hpp"
#include "relmine/error.hpp"
#include "relmine/metrics.hpp"

using namespace relmine;

namespace {

const AggregatedGraph kTwoTriangles = oracle::graph({{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
const AggregatedGraph kBarbell =
    oracle::graph({{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});

Partition triangles() {
  const std::vector<NodeId> nodes{0, 1, 2, 3, 4, 5};
  const std::vector<std::uint64_t> labels{0, 0, 0, 1, 1, 1};
  return Partition::from_labels(nodes, labels);
}

AggregatedGraph clique(NodeId n) {
  std::vector<WeightedEdge> edges;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j) edges.push_back({{i, j}, 1});
  return AggregatedGraph::from_edges(edges);
}

void check_valid(const AggregatedGraph& g, const Partition& p) {
  REQUIRE(p.size() == g.node_count());
  CHECK(std::equal(p.nodes().begin(), p.nodes().end(), g.nodes().begin()));
  std::set<CommunityId> used(p.labels().begin(), p.labels().end());
  CHECK(used.size() == p.community_count());
  if (!used.empty()) CHECK(*used.rbegin() + 1 == p.community_count());
}

// true when no community holds nodes from two components
bool respects_components(const AggregatedGraph& g, const Partition& p) {
  for (NodeId s : g.nodes()) {
    const auto reach = oracle::bfs_dist(g, s);
    for (NodeId t : g.nodes())
      if (!reach.count(t) && p.community_of(s) == p.community_of(t)) return false;
  }
  return true;
}

Partition run(Algorithm a, const AggregatedGraph& g, std::uint64_t seed = 0) {
  return run_algorithm(a, g, {seed, kDefaultEdgeBudget, kDefaultWalkLength});
}

}  // namespace

TEST_CASE("algorithm names round-trip") {
  for (Algorithm a : kAllAlgorithms) CHECK(parse_algorithm(to_string(a)) == a);
  CHECK(!parse_algorithm("infomap"));
}

TEST_CASE("every algorithm splits two disjoint triangles") {
  for (Algorithm a : kAllAlgorithms) {
    CAPTURE(to_string(a));
    const Partition p = run(a, kTwoTriangles);
    CHECK(p == triangles());
    CHECK(modularity(kTwoTriangles, p) == 0.5);
  }
}

TEST_CASE("single node and empty graphs") {
  const AggregatedGraph lone = oracle::graph({}, {4});
  const AggregatedGraph none;
  for (Algorithm a : kAllAlgorithms) {
    CAPTURE(to_string(a));
    const Partition p = run(a, lone);
    CHECK(p.size() == 1);
    CHECK(p.community_count() == 1);
    CHECK_THROWS_AS(run(a, none), DataError);
    // edgeless graphs come back as singletons
    CHECK(run(a, oracle::graph({}, {1, 2, 3})).community_count() == 3);
  }
}

TEST_CASE("label propagation on disjoint cliques ends with one label per clique") {
  std::vector<WeightedEdge> edges;
  std::vector<std::uint64_t> expected_labels;
  std::vector<NodeId> nodes;
  for (NodeId c = 0; c < 3; ++c)
    for (NodeId i = 0; i < 5; ++i) {
      nodes.push_back(c * 5 + i);
      expected_labels.push_back(c);
      for (NodeId j = i + 1; j < 5; ++j) edges.push_back({{c * 5 + i, c * 5 + j}, 1});
    }
  const AggregatedGraph g = AggregatedGraph::from_edges(edges);
  const Partition expected = Partition::from_labels(nodes, expected_labels);
  for (std::uint64_t seed = 0; seed < 300; ++seed) CHECK(label_propagation(g, seed) == expected);
  for (std::uint64_t seed = 0; seed < 300; ++seed) CHECK(label_propagation(kTwoTriangles, seed) == triangles());
}

TEST_CASE("louvain single edge merges") {
  const AggregatedGraph g = oracle::graph({{0, 1}});
  CHECK(louvain(g, 0).community_count() == 1);
  CHECK(oracle::modularity(g, Partition::single_block(g.nodes())) == 0.0);
  CHECK(oracle::modularity(g, Partition::singletons(g.nodes())) == -0.5);
}

TEST_CASE("cnm keeps a clique whole and is deterministic") {
  const AggregatedGraph k4 = clique(4);
  CHECK(greedy_modularity_cnm(k4).community_count() == 1);
  // exhaustive: nothing beats the single block on K4
  CHECK(oracle::max_modularity(k4) <= 1e-15);
  const AggregatedGraph path = oracle::graph({{0, 1}, {1, 2}});
  const Partition first = greedy_modularity_cnm(path);
  for (int i = 0; i < 5; ++i) CHECK(greedy_modularity_cnm(path) == first);
}

TEST_CASE("edge betweenness on the barbell") {
  const auto bc = edge_betweenness(kBarbell);
  std::size_t bridge = 0;
  for (std::size_t i = 0; i < kBarbell.edge_count(); ++i)
    if (kBarbell.edges()[i].edge == Edge{2, 3}) bridge = i;
  // 3 x 3 cross pairs, each with a single shortest path over the bridge
  CHECK(oracle::edge_betweenness(kBarbell, {2, 3}) == 9.0);
  CHECK(bc[bridge] == 9.0);
  for (std::size_t i = 0; i < bc.size(); ++i) CHECK(bc[i] <= bc[bridge]);

  const Partition p = edge_betweenness_gn(kBarbell);
  CHECK(p == triangles());
  CHECK(modularity(kBarbell, p) == doctest::Approx(5.0 / 14.0).epsilon(1e-15));
  CHECK(2.0 * (3.0 / 7.0 - 0.25) == doctest::Approx(5.0 / 14.0).epsilon(1e-15));
}

TEST_CASE("edge betweenness matches all-pairs path enumeration") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const AggregatedGraph g = oracle::random_graph(9, 0.35, seed);
    const auto bc = edge_betweenness(g);
    REQUIRE(bc.size() == g.edge_count());
    for (std::size_t i = 0; i < bc.size(); ++i)
      CHECK(bc[i] == doctest::Approx(oracle::edge_betweenness(g, g.edges()[i].edge)).epsilon(1e-12));
  }
}

TEST_CASE("girvan-newman respects the edge budget") {
  CHECK_THROWS_AS(edge_betweenness_gn(kBarbell, 6), DataError);
  CHECK_NOTHROW(edge_betweenness_gn(kBarbell, 7));
}

TEST_CASE("walktrap keeps a clique whole") {
  const AggregatedGraph k5 = clique(5);
  CHECK(walktrap(k5).community_count() == 1);
  CHECK(oracle::max_modularity(k5) <= 1e-15);
  CHECK(walktrap(kBarbell) == triangles());
  CHECK_THROWS_AS(walktrap(k5, 0), std::invalid_argument);
}

TEST_CASE("all algorithms return valid, component-respecting partitions") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const AggregatedGraph g = oracle::random_graph(6 + seed % 25, 0.04 + 0.003 * static_cast<double>(seed), seed);
    for (Algorithm a : kAllAlgorithms) {
      CAPTURE(to_string(a));
      CAPTURE(seed);
      const Partition p = run(a, g, seed);
      check_valid(g, p);
      CHECK(respects_components(g, p));
      CHECK(run(a, g, seed) == p);
      if (g.edge_count() > 0) {
        const double singles = oracle::modularity(g, Partition::singletons(g.nodes()));
        CHECK(modularity(g, p) >= std::min(0.0, singles) - 1e-12);
      }
    }
  }
}

TEST_CASE("louvain never does worse than singletons") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const AggregatedGraph g = oracle::random_graph(20, 0.2, seed);
    if (g.edge_count() == 0) continue;
    CHECK(modularity(g, louvain(g, seed)) >=
          oracle::modularity(g, Partition::singletons(g.nodes())) - 1e-12);
  }
}

TEST_CASE("modularity optimizers come close to the exhaustive optimum on tiny graphs") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const AggregatedGraph g = oracle::random_graph(8, 0.4, seed);
    if (g.edge_count() == 0) continue;
    const double best = oracle::max_modularity(g);
    for (Algorithm a : {Algorithm::Louvain, Algorithm::Cnm, Algorithm::EdgeBetweenness}) {
      const double q = modularity(g, run(a, g, seed));
      CHECK(q <= best + 1e-12);
      CHECK(q >= best - 0.15);
    }
  }
}

TEST_CASE("partition canonical form") {
  const std::vector<NodeId> nodes{9, 3, 5, 1};
  const std::vector<std::uint64_t> labels{70, 70, 4, 8};
  const Partition p = Partition::from_labels(nodes, labels);
  CHECK(std::vector<NodeId>(p.nodes().begin(), p.nodes().end()) == std::vector<NodeId>{1, 3, 5, 9});
  CHECK(std::vector<CommunityId>(p.labels().begin(), p.labels().end()) ==
        std::vector<CommunityId>{0, 1, 2, 1});
  CHECK(p.community_count() == 3);
  CHECK_THROWS_AS(p.community_of(2), DataError);
  const std::vector<NodeId> keep{9, 5};
  const Partition r = p.restricted_to(keep);
  CHECK(r.size() == 2);
  CHECK(r.community_count() == 2);
  const std::vector<NodeId> other{1, 5, 7};
  CHECK(common_nodes(p, Partition::singletons(other)) == std::vector<NodeId>{1, 5});
  const std::vector<std::uint64_t> relabeled{1, 1, 2, 3};
  CHECK(Partition::from_labels(nodes, relabeled) == p);
}
