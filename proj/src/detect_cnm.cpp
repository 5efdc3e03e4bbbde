#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "detect_common.hpp"
#include "relmine/detect.hpp"

namespace relmine {

namespace {

struct Link {
  double e = 0.0;   // fraction of edge ends joining the two communities
  double dq = 0.0;  // modularity change if merged
};

}  // namespace

Partition greedy_modularity_cnm(const AggregatedGraph& g) {
  detail::require_nodes(g);
  const IndexedGraph ig(g);
  const std::size_t n = ig.size();
  std::vector<std::uint32_t> label(n);
  std::iota(label.begin(), label.end(), 0);
  if (ig.edge_count() == 0) return detail::to_partition(ig, label);

  const double two_m = 2.0 * static_cast<double>(ig.edge_count());
  std::vector<double> a(n);
  std::vector<std::map<std::uint32_t, Link>> links(n);
  std::vector<std::vector<std::uint32_t>> members(n);
  // ordered by (-dq, lo, hi): begin() is the best merge, ties to the smallest pair
  std::set<std::tuple<double, std::uint32_t, std::uint32_t>> queue;

  for (std::uint32_t i = 0; i < n; ++i) {
    a[i] = static_cast<double>(ig.degree(i)) / two_m;
    members[i] = {i};
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j : ig.neighbors(i)) {
      const double e = 1.0 / two_m;
      links[i][j] = {e, 2.0 * (e - a[i] * a[j])};
      if (i < j) queue.emplace(-links[i][j].dq, i, j);
    }
  }

  while (!queue.empty()) {
    const auto [neg_dq, keep, gone] = *queue.begin();
    if (-neg_dq <= 0.0) break;

    for (const auto& [x, link] : links[keep])
      queue.erase({-link.dq, std::min(keep, x), std::max(keep, x)});
    for (const auto& [x, link] : links[gone])
      queue.erase({-link.dq, std::min(gone, x), std::max(gone, x)});

    links[keep].erase(gone);
    for (const auto& [x, link] : links[gone]) {
      if (x == keep) continue;
      links[keep][x].e += link.e;
      links[x].erase(gone);
    }
    links[gone].clear();
    a[keep] += a[gone];
    a[gone] = 0.0;

    for (auto& [x, link] : links[keep]) {
      link.dq = 2.0 * (link.e - a[keep] * a[x]);
      links[x][keep] = link;
      queue.emplace(-link.dq, std::min(keep, x), std::max(keep, x));
    }
    members[keep].insert(members[keep].end(), members[gone].begin(), members[gone].end());
    members[gone].clear();
  }

  for (std::uint32_t c = 0; c < n; ++c)
    for (std::uint32_t v : members[c]) label[v] = c;
  return detail::to_partition(ig, label);
}

}  // namespace relmine
