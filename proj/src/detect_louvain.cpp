#include <algorithm>
#include <numeric>
#include <random>

#include "detect_common.hpp"
#include "relmine/detect.hpp"

namespace relmine {

namespace {

// Gains are compared in units of 1/m; moves need to beat staying by this.
constexpr double kMinGain = 1e-12;

struct WeightedGraph {
  std::vector<std::vector<std::pair<std::uint32_t, double>>> adj;  // no self entries
  std::vector<double> loop;  // weight of edges internal to the node
  double total = 0.0;        // m

  std::size_t size() const { return adj.size(); }
  double strength(std::size_t i) const {
    double k = 2.0 * loop[i];
    for (const auto& [j, w] : adj[i]) k += w;
    return k;
  }
};

WeightedGraph from_indexed(const IndexedGraph& g) {
  WeightedGraph wg;
  wg.adj.resize(g.size());
  wg.loop.assign(g.size(), 0.0);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::uint32_t j : g.neighbors(i)) wg.adj[i].emplace_back(j, 1.0);
  wg.total = static_cast<double>(g.edge_count());
  return wg;
}

// One round of local moving. Returns dense community ids, or an empty vector
// when no node moved.
std::vector<std::uint32_t> local_moves(const WeightedGraph& wg, std::mt19937_64& rng) {
  const std::size_t n = wg.size();
  const double two_m = 2.0 * wg.total;
  std::vector<double> k(n), tot(n);
  for (std::size_t i = 0; i < n; ++i) tot[i] = k[i] = wg.strength(i);
  std::vector<std::uint32_t> comm(n);
  std::iota(comm.begin(), comm.end(), 0);

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> link(n, -1.0);  // weight from the current node to each community
  std::vector<std::uint32_t> touched;
  bool any_move = false;

  for (;;) {
    std::shuffle(order.begin(), order.end(), rng);
    std::size_t moves = 0;
    for (std::uint32_t i : order) {
      const std::uint32_t home = comm[i];
      touched.clear();
      link[home] = 0.0;
      touched.push_back(home);
      for (const auto& [j, w] : wg.adj[i]) {
        const std::uint32_t c = comm[j];
        if (link[c] < 0.0) {
          link[c] = 0.0;
          touched.push_back(c);
        }
        link[c] += w;
      }
      tot[home] -= k[i];
      std::uint32_t best = home;
      double best_gain = link[home] - tot[home] * k[i] / two_m;
      for (std::uint32_t c : touched) {
        const double gain = link[c] - tot[c] * k[i] / two_m;
        if (gain > best_gain + kMinGain) {
          best = c;
          best_gain = gain;
        }
      }
      tot[best] += k[i];
      comm[i] = best;
      if (best != home) ++moves;
      for (std::uint32_t c : touched) link[c] = -1.0;
    }
    if (moves == 0) break;
    any_move = true;
  }
  if (!any_move) return {};

  std::vector<std::uint32_t> dense(n, UINT32_MAX);
  std::uint32_t next = 0;
  for (auto& c : comm) {
    if (dense[c] == UINT32_MAX) dense[c] = next++;
    c = dense[c];
  }
  return comm;
}

WeightedGraph coarsen(const WeightedGraph& wg, std::span<const std::uint32_t> comm) {
  const std::size_t count = *std::max_element(comm.begin(), comm.end()) + 1;
  WeightedGraph out;
  out.adj.resize(count);
  out.loop.assign(count, 0.0);
  out.total = wg.total;
  std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> links;
  for (std::size_t i = 0; i < wg.size(); ++i) {
    out.loop[comm[i]] += wg.loop[i];
    for (const auto& [j, w] : wg.adj[i]) {
      if (i > j) continue;
      const std::uint32_t a = comm[i], b = comm[j];
      if (a == b) {
        out.loop[a] += w;
      } else {
        links.emplace_back(std::min(a, b), std::max(a, b), w);
      }
    }
  }
  std::sort(links.begin(), links.end());
  for (std::size_t s = 0; s < links.size();) {
    auto [a, b, w] = links[s];
    std::size_t e = s + 1;
    for (; e < links.size() && std::get<0>(links[e]) == a && std::get<1>(links[e]) == b; ++e)
      w += std::get<2>(links[e]);
    out.adj[a].emplace_back(b, w);
    out.adj[b].emplace_back(a, w);
    s = e;
  }
  for (auto& row : out.adj) std::sort(row.begin(), row.end());
  return out;
}

}  // namespace

Partition louvain(const AggregatedGraph& g, std::uint64_t seed) {
  detail::require_nodes(g);
  const IndexedGraph ig(g);
  std::vector<std::uint32_t> assignment(ig.size());
  std::iota(assignment.begin(), assignment.end(), 0);
  if (ig.edge_count() == 0) return detail::to_partition(ig, assignment);

  std::mt19937_64 rng(seed);
  WeightedGraph level = from_indexed(ig);
  for (;;) {
    std::vector<std::uint32_t> comm = local_moves(level, rng);
    if (comm.empty()) break;
    for (auto& a : assignment) a = comm[a];
    level = coarsen(level, comm);
  }
  return detail::to_partition(ig, assignment);
}

}  // namespace relmine
