#include "relmine/metrics.hpp"

#include <algorithm>
#include <unordered_map>

#include "relmine/error.hpp"

namespace relmine {

namespace {

void require_cover(const AggregatedGraph& g, const Partition& p) {
  const auto nodes = g.nodes();
  if (!std::equal(nodes.begin(), nodes.end(), p.nodes().begin(), p.nodes().end()))
    throw DataError("partition does not cover exactly the graph's nodes");
}

struct CommunityTallies {
  std::vector<double> internal;
  std::vector<double> cut;
  std::vector<double> volume;
};

CommunityTallies tally(const AggregatedGraph& g, const Partition& p) {
  CommunityTallies t;
  const std::size_t k = p.community_count();
  t.internal.assign(k, 0.0);
  t.cut.assign(k, 0.0);
  t.volume.assign(k, 0.0);
  for (const auto& we : g.edges()) {
    const CommunityId a = p.community_of(we.edge.u);
    const CommunityId b = p.community_of(we.edge.v);
    t.volume[a] += 1.0;
    t.volume[b] += 1.0;
    if (a == b) {
      t.internal[a] += 1.0;
    } else {
      t.cut[a] += 1.0;
      t.cut[b] += 1.0;
    }
  }
  return t;
}

void require_same_nodes(const Partition& a, const Partition& b) {
  if (!std::equal(a.nodes().begin(), a.nodes().end(), b.nodes().begin(), b.nodes().end()))
    throw DataError("partitions are over different node sets");
}

}  // namespace

double modularity(const AggregatedGraph& g, const Partition& p) {
  require_cover(g, p);
  if (g.edge_count() == 0) throw DataError("modularity is undefined for a graph without edges");
  const double m = static_cast<double>(g.edge_count());
  const CommunityTallies t = tally(g, p);
  double q = 0.0;
  for (std::size_t c = 0; c < p.community_count(); ++c) {
    const double share = t.volume[c] / (2.0 * m);
    q += t.internal[c] / m - share * share;
  }
  return q;
}

ConductanceReport conductance(const AggregatedGraph& g, const Partition& p) {
  require_cover(g, p);
  const CommunityTallies t = tally(g, p);
  ConductanceReport report;
  double sum = 0.0;
  for (std::size_t c = 0; c < p.community_count(); ++c) {
    const auto id = static_cast<CommunityId>(c);
    if (t.volume[c] == 0.0) {
      report.skipped.push_back(id);
      continue;
    }
    const double phi = t.cut[c] / (2.0 * t.internal[c] + t.cut[c]);
    report.per_community.push_back(phi);
    report.scored.push_back(id);
    report.cut_over_internal.push_back(
        t.internal[c] > 0.0 ? std::optional<double>(t.cut[c] / t.internal[c]) : std::nullopt);
    sum += phi;
  }
  if (!report.per_community.empty())
    report.mean = sum / static_cast<double>(report.per_community.size());
  return report;
}

QualityReport quality(const AggregatedGraph& g, const Partition& p) {
  return QualityReport{modularity(g, p), conductance(g, p)};
}

std::int64_t projection_distance(const Partition& a, const Partition& b) {
  require_same_nodes(a, b);
  // overlap counts for every (block of a, block of b) pair that meets
  std::unordered_map<std::uint64_t, std::int64_t> overlap;
  const auto la = a.labels();
  const auto lb = b.labels();
  for (std::size_t i = 0; i < la.size(); ++i)
    ++overlap[(static_cast<std::uint64_t>(la[i]) << 32) | lb[i]];
  std::vector<std::int64_t> best(a.community_count(), 0);
  for (const auto& [key, count] : overlap) {
    auto& slot = best[key >> 32];
    slot = std::max(slot, count);
  }
  std::int64_t total = 0;
  for (auto v : best) total += v;
  return total;
}

std::int64_t split_join(const Partition& a, const Partition& b) {
  const auto n = static_cast<std::int64_t>(a.size());
  return 2 * n - projection_distance(a, b) - projection_distance(b, a);
}

ConsensusMatrix consensus_matrix(const std::vector<NamedPartition>& partitions) {
  ConsensusMatrix out;
  const std::size_t k = partitions.size();
  out.distance.assign(k, std::vector<std::int64_t>(k, 0));
  for (const auto& np : partitions) out.names.push_back(np.name);
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const std::int64_t d = split_join(partitions[i].partition, partitions[j].partition);
      out.distance[i][j] = out.distance[j][i] = d;
      sum += 2.0 * static_cast<double>(d);
    }
  }
  if (k >= 2) out.score = sum / static_cast<double>(k * (k - 1));
  return out;
}

}  // namespace relmine
