#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "detect_common.hpp"
#include "relmine/detect.hpp"

namespace relmine {

// Random walks run on the graph with a unit self-loop added at every node,
// as in the reference Walktrap implementation; modularity of the dendrogram
// cuts is measured on the plain graph.
namespace {

struct Community {
  std::size_t size = 0;
  std::vector<double> walk;   // P^t_{C.}, dense over local nodes
  double degree = 0.0;        // sum of plain degrees
  std::map<std::uint32_t, std::pair<double, double>> adjacent;  // id -> (edges, delta sigma)
  bool alive = true;
};

class Walktrap {
 public:
  Walktrap(const IndexedGraph& g, std::size_t walk_length) : g_(g) {
    const std::size_t n = g.size();
    loop_degree_.resize(n);
    for (std::size_t i = 0; i < n; ++i) loop_degree_[i] = static_cast<double>(g.degree(i) + 1);
    communities_.reserve(2 * n);
    for (std::uint32_t i = 0; i < n; ++i) {
      Community c;
      c.size = 1;
      c.walk = walk_from(i, walk_length);
      c.degree = static_cast<double>(g.degree(i));
      communities_.push_back(std::move(c));
    }
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j : g.neighbors(i))
        if (i < j) {
          const double d = delta_sigma(i, j);
          communities_[i].adjacent[j] = {1.0, d};
          communities_[j].adjacent[i] = {1.0, d};
          candidates_.emplace(d, i, j);
        }
  }

  std::vector<std::uint32_t> run() {
    const std::size_t n = g_.size();
    const double m = static_cast<double>(g_.edge_count());
    double q = 0.0;
    for (std::size_t i = 0; i < n; ++i) q -= sq(communities_[i].degree / (2.0 * m));
    double best_q = q;
    std::size_t best_step = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> merges;

    while (!candidates_.empty()) {
      const auto [d, a, b] = *candidates_.begin();
      const double between = communities_[a].adjacent.at(b).first;
      q += between / m - 2.0 * communities_[a].degree * communities_[b].degree / sq(2.0 * m);
      merge(a, b);
      merges.emplace_back(a, b);
      if (q > best_q) {
        best_q = q;
        best_step = merges.size();
      }
    }

    // Replay the first best_step merges on node labels.
    std::vector<std::uint32_t> owner(communities_.size());
    std::iota(owner.begin(), owner.end(), 0);
    for (std::size_t s = 0; s < best_step; ++s) {
      const auto created = static_cast<std::uint32_t>(n + s);
      owner[merges[s].first] = created;
      owner[merges[s].second] = created;
    }
    std::vector<std::uint32_t> label(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      std::uint32_t c = i;
      while (owner[c] != c) c = owner[c];
      label[i] = c;
    }
    // dense relabel so labels index arrays of size n
    std::map<std::uint32_t, std::uint32_t> dense;
    for (auto& l : label) l = dense.try_emplace(l, static_cast<std::uint32_t>(dense.size())).first->second;
    return label;
  }

 private:
  static double sq(double x) { return x * x; }

  std::vector<double> walk_from(std::uint32_t start, std::size_t steps) const {
    const std::size_t n = g_.size();
    std::vector<double> cur(n, 0.0), next(n, 0.0);
    cur[start] = 1.0;
    for (std::size_t t = 0; t < steps; ++t) {
      std::fill(next.begin(), next.end(), 0.0);
      for (std::uint32_t j = 0; j < n; ++j) {
        if (cur[j] == 0.0) continue;
        const double share = cur[j] / loop_degree_[j];
        next[j] += share;
        for (std::uint32_t k : g_.neighbors(j)) next[k] += share;
      }
      std::swap(cur, next);
    }
    return cur;
  }

  double delta_sigma(std::uint32_t a, std::uint32_t b) const {
    const Community& ca = communities_[a];
    const Community& cb = communities_[b];
    double r2 = 0.0;
    for (std::size_t k = 0; k < ca.walk.size(); ++k)
      r2 += sq(ca.walk[k] - cb.walk[k]) / loop_degree_[k];
    const double sa = static_cast<double>(ca.size), sb = static_cast<double>(cb.size);
    return sa * sb / (sa + sb) * r2 / static_cast<double>(g_.size());
  }

  void merge(std::uint32_t a, std::uint32_t b) {
    const auto id = static_cast<std::uint32_t>(communities_.size());
    Community merged;
    {
      Community& ca = communities_[a];
      Community& cb = communities_[b];
      merged.size = ca.size + cb.size;
      merged.walk.resize(ca.walk.size());
      const double wa = static_cast<double>(ca.size) / static_cast<double>(merged.size);
      const double wb = static_cast<double>(cb.size) / static_cast<double>(merged.size);
      for (std::size_t k = 0; k < merged.walk.size(); ++k)
        merged.walk[k] = wa * ca.walk[k] + wb * cb.walk[k];
      merged.degree = ca.degree + cb.degree;

      for (std::uint32_t side : {a, b}) {
        for (const auto& [x, info] : communities_[side].adjacent) {
          candidates_.erase({info.second, std::min(side, x), std::max(side, x)});
          if (x == a || x == b) continue;
          merged.adjacent[x].first += info.first;
          communities_[x].adjacent.erase(side);
        }
      }
      ca.alive = cb.alive = false;
    }
    communities_.push_back(std::move(merged));
    // push_back may reallocate: reacquire references afterwards
    for (auto& [x, info] : communities_[id].adjacent) {
      info.second = delta_sigma(id, x);
      communities_[x].adjacent[id] = info;
      candidates_.emplace(info.second, x, id);
    }
    for (std::uint32_t side : {a, b}) {
      communities_[side].walk.clear();
      communities_[side].walk.shrink_to_fit();
      communities_[side].adjacent.clear();
    }
  }

  const IndexedGraph& g_;
  std::vector<double> loop_degree_;
  std::vector<Community> communities_;
  // (delta sigma, lo, hi), smallest first
  std::set<std::tuple<double, std::uint32_t, std::uint32_t>> candidates_;
};

}  // namespace

Partition walktrap(const AggregatedGraph& g, std::size_t walk_length) {
  detail::require_nodes(g);
  if (walk_length < 1) throw std::invalid_argument("walk_length must be >= 1");
  const IndexedGraph ig(g);
  std::vector<std::uint32_t> label(ig.size());
  std::iota(label.begin(), label.end(), 0);
  if (ig.edge_count() == 0) return detail::to_partition(ig, label);
  Walktrap wt(ig, walk_length);
  return detail::to_partition(ig, wt.run());
}

}  // namespace relmine
