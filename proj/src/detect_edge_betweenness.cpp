#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

#include "detect_common.hpp"
#include "relmine/detect.hpp"

namespace relmine {

namespace {

// Adjacency with edge indices aligned to AggregatedGraph::edges(), plus a
// removal mask for the divisive loop.
class DynamicGraph {
 public:
  explicit DynamicGraph(const AggregatedGraph& g) : indexed_(g) {
    const std::size_t n = indexed_.size();
    adj_.resize(n);
    const auto& global = indexed_.global;
    auto local = [&](NodeId id) {
      return static_cast<std::uint32_t>(std::lower_bound(global.begin(), global.end(), id) -
                                        global.begin());
    };
    std::uint32_t idx = 0;
    for (const auto& we : g.edges()) {
      const std::uint32_t u = local(we.edge.u), v = local(we.edge.v);
      adj_[u].push_back({v, idx});
      adj_[v].push_back({u, idx});
      ends_.emplace_back(u, v);
      ++idx;
    }
    alive_.assign(ends_.size(), true);
  }

  const IndexedGraph& indexed() const { return indexed_; }
  std::size_t size() const { return adj_.size(); }
  std::size_t edge_count() const { return ends_.size(); }
  bool alive(std::size_t e) const { return alive_[e]; }
  void remove(std::size_t e) { alive_[e] = false; }
  std::pair<std::uint32_t, std::uint32_t> ends(std::size_t e) const { return ends_[e]; }

  template <class F>
  void for_each_neighbor(std::uint32_t v, F&& f) const {
    for (const auto& [w, e] : adj_[v])
      if (alive_[e]) f(w, e);
  }

  // Nodes reachable from `start`, in BFS order.
  std::vector<std::uint32_t> component(std::uint32_t start) const {
    std::vector<std::uint32_t> out{start};
    std::vector<char> seen(size(), 0);
    seen[start] = 1;
    for (std::size_t head = 0; head < out.size(); ++head)
      for_each_neighbor(out[head], [&](std::uint32_t w, std::uint32_t) {
        if (!seen[w]) {
          seen[w] = 1;
          out.push_back(w);
        }
      });
    return out;
  }

  std::vector<std::uint32_t> component_labels() const {
    std::vector<std::uint32_t> label(size(), std::numeric_limits<std::uint32_t>::max());
    for (std::uint32_t s = 0; s < size(); ++s) {
      if (label[s] != std::numeric_limits<std::uint32_t>::max()) continue;
      for (std::uint32_t v : component(s)) label[v] = s;
    }
    return label;
  }

 private:
  IndexedGraph indexed_;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> ends_;
  std::vector<bool> alive_;
};

// Adds the Brandes dependencies of every source in `sources` into `score`,
// each ordered pair contributing once.
void accumulate_betweenness(const DynamicGraph& g, std::span<const std::uint32_t> sources,
                            std::vector<double>& score) {
  const std::size_t n = g.size();
  std::vector<double> sigma(n, 0.0), delta(n, 0.0);
  std::vector<std::int64_t> dist(n, -1);
  std::vector<std::uint32_t> stack;
  for (std::uint32_t s : sources) {
    stack.clear();
    sigma[s] = 1.0;
    dist[s] = 0;
    stack.push_back(s);
    for (std::size_t head = 0; head < stack.size(); ++head) {
      const std::uint32_t v = stack[head];
      g.for_each_neighbor(v, [&](std::uint32_t w, std::uint32_t) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          stack.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      });
    }
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
      const std::uint32_t w = *it;
      g.for_each_neighbor(w, [&](std::uint32_t v, std::uint32_t e) {
        if (dist[v] == dist[w] - 1) {
          const double c = sigma[v] / sigma[w] * (1.0 + delta[w]);
          score[e] += c;
          delta[v] += c;
        }
      });
    }
    for (std::uint32_t v : stack) {
      sigma[v] = 0.0;
      delta[v] = 0.0;
      dist[v] = -1;
    }
  }
}

// Recomputes betweenness of all alive edges inside the given node set, which
// must be a union of whole components.
void recompute(const DynamicGraph& g, std::span<const std::uint32_t> nodes,
               std::vector<double>& score) {
  for (std::uint32_t v : nodes)
    g.for_each_neighbor(v, [&](std::uint32_t, std::uint32_t e) { score[e] = 0.0; });
  accumulate_betweenness(g, nodes, score);
  for (std::uint32_t v : nodes)
    g.for_each_neighbor(v, [&](std::uint32_t w, std::uint32_t e) {
      if (v < w) score[e] /= 2.0;  // undirected: every pair was seen from both ends
    });
}

}  // namespace

std::vector<double> edge_betweenness(const AggregatedGraph& g) {
  DynamicGraph dg(g);
  std::vector<double> score(dg.edge_count(), 0.0);
  std::vector<std::uint32_t> all(dg.size());
  std::iota(all.begin(), all.end(), 0);
  recompute(dg, all, score);
  return score;
}

Partition edge_betweenness_gn(const AggregatedGraph& g, std::size_t edge_budget) {
  detail::require_nodes(g);
  if (g.edge_count() > edge_budget)
    throw DataError("edge betweenness refused: " + std::to_string(g.edge_count()) +
                    " edges exceed the budget of " + std::to_string(edge_budget));
  DynamicGraph dg(g);
  const IndexedGraph& ig = dg.indexed();

  std::vector<std::uint32_t> best_labels = dg.component_labels();
  if (dg.edge_count() == 0) return detail::to_partition(ig, best_labels);
  double best_q = detail::local_modularity(ig, best_labels);

  std::vector<double> score(dg.edge_count(), 0.0);
  {
    std::vector<std::uint32_t> all(dg.size());
    std::iota(all.begin(), all.end(), 0);
    recompute(dg, all, score);
  }

  for (std::size_t remaining = dg.edge_count(); remaining > 0; --remaining) {
    std::size_t pick = dg.edge_count();
    for (std::size_t e = 0; e < dg.edge_count(); ++e) {
      if (!dg.alive(e)) continue;
      // relative slack so that floating-point noise does not break ties
      if (pick == dg.edge_count() ||
          score[e] > score[pick] + 1e-9 * std::max(1.0, score[pick]))
        pick = e;
    }
    dg.remove(pick);
    const auto [u, v] = dg.ends(pick);
    std::vector<std::uint32_t> affected = dg.component(u);
    if (std::find(affected.begin(), affected.end(), v) == affected.end()) {
      std::vector<std::uint32_t> other = dg.component(v);
      affected.insert(affected.end(), other.begin(), other.end());
      std::vector<std::uint32_t> labels = dg.component_labels();
      const double q = detail::local_modularity(ig, labels);
      if (q > best_q) {
        best_q = q;
        best_labels = std::move(labels);
      }
    }
    recompute(dg, affected, score);
  }
  return detail::to_partition(ig, best_labels);
}

}  // namespace relmine
