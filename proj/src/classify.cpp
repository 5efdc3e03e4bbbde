#include "relmine/classify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "relmine/error.hpp"

namespace relmine {

std::string_view to_string(RelationshipClass c) {
  switch (c) {
    case RelationshipClass::Friend: return "friend";
    case RelationshipClass::Bridge: return "bridge";
    case RelationshipClass::Acquaintance: return "acquaintance";
    case RelationshipClass::Random: return "random";
  }
  return "?";
}

EdgeLabels::EdgeLabels(std::vector<std::pair<Edge, RelationshipClass>> entries)
    : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i - 1].first == entries_[i].first) throw DataError("duplicate edge label");
}

namespace {

std::vector<std::pair<Edge, RelationshipClass>> label_entries(
    std::span<const EdgeAssessment> assessments) {
  std::vector<std::pair<Edge, RelationshipClass>> entries;
  entries.reserve(assessments.size());
  for (const auto& a : assessments) entries.emplace_back(a.edge, a.label);
  return entries;
}

}  // namespace

EdgeLabels::EdgeLabels(std::span<const EdgeAssessment> assessments)
    : EdgeLabels(label_entries(assessments)) {}

std::optional<RelationshipClass> EdgeLabels::find(Edge e) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), e,
                             [](const auto& entry, const Edge& key) { return entry.first < key; });
  if (it == entries_.end() || it->first != e) return std::nullopt;
  return it->second;
}

double persistence(Edge pair, const TemporalNetwork& net) {
  if (net.window_count < 1) throw DataError("network spans no windows");
  std::size_t present = 0;
  for (const auto& s : net.snapshots) present += s.contains(pair) ? 1 : 0;
  if (present == 0) throw DataError("pair does not occur in the network");
  return static_cast<double>(present) / static_cast<double>(net.window_count);
}

namespace {

double overlap_of(std::span<const NodeId> nu, std::span<const NodeId> nv, NodeId u, NodeId v) {
  std::size_t common = 0;
  std::size_t merged = 0;  // |N(u) ∪ N(v)| excluding u and v
  auto a = nu.begin();
  auto b = nv.begin();
  while (a != nu.end() || b != nv.end()) {
    NodeId x;
    if (b == nv.end() || (a != nu.end() && *a < *b)) {
      x = *a++;
    } else if (a == nu.end() || *b < *a) {
      x = *b++;
    } else {
      x = *a++;
      ++b;
      ++common;  // u and v are never common neighbors of the edge {u, v}
    }
    if (x != u && x != v) ++merged;
  }
  return merged == 0 ? 0.0 : static_cast<double>(common) / static_cast<double>(merged);
}

}  // namespace

double neighborhood_overlap(const AggregatedGraph& g, NodeId u, NodeId v) {
  if (u == v || !g.has_edge(u, v)) throw DataError("neighborhood overlap requested for a non-edge");
  return overlap_of(g.neighbors(u), g.neighbors(v), u, v);
}

RelationshipClass classify_features(const EdgeFeatures& f, const Thresholds& th) {
  const bool persistent = f.persistence > th.persistence;
  const bool embedded = f.overlap > th.overlap;
  if (persistent) return embedded ? RelationshipClass::Friend : RelationshipClass::Bridge;
  return embedded ? RelationshipClass::Acquaintance : RelationshipClass::Random;
}

std::vector<Edge> degree_preserving_shuffle(std::span<const Edge> edges, std::mt19937_64& rng,
                                            std::size_t swaps_per_edge) {
  std::vector<Edge> out(edges.begin(), edges.end());
  if (out.size() < 2) return out;

  auto key = [](NodeId a, NodeId b) {
    Edge e = make_edge(a, b);
    return (static_cast<std::uint64_t>(e.u) << 32) | e.v;
  };
  std::unordered_set<std::uint64_t> present;
  present.reserve(out.size() * 2);
  for (const Edge& e : out) present.insert(key(e.u, e.v));

  std::uniform_int_distribution<std::size_t> pick(0, out.size() - 1);
  std::bernoulli_distribution flip(0.5);
  const std::size_t attempts = swaps_per_edge * out.size();
  for (std::size_t t = 0; t < attempts; ++t) {
    std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    if (i == j) continue;
    NodeId a = out[i].u, b = out[i].v;
    NodeId c = out[j].u, d = out[j].v;
    if (flip(rng)) std::swap(c, d);
    // (a,b),(c,d) -> (a,d),(c,b)
    if (a == d || c == b) continue;
    if (present.contains(key(a, d)) || present.contains(key(c, b))) continue;
    present.erase(key(a, b));
    present.erase(key(c, d));
    present.insert(key(a, d));
    present.insert(key(c, b));
    out[i] = make_edge(a, d);
    out[j] = make_edge(c, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ReferencePool reference_features(const TemporalNetwork& net, std::uint64_t seed,
                                 std::size_t shuffles) {
  ReferencePool pool;
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < shuffles; ++s) {
    TemporalNetwork reference;
    reference.window_count = net.window_count;
    reference.nodes = net.nodes;
    reference.snapshots.reserve(net.snapshots.size());
    for (const auto& snap : net.snapshots) {
      Snapshot r;
      r.index = snap.index;
      r.edges = degree_preserving_shuffle(snap.edges, rng);
      r.counts.assign(r.edges.size(), 1);
      reference.snapshots.push_back(std::move(r));
    }
    const AggregatedGraph g = aggregate(reference);
    const double windows = static_cast<double>(net.window_count);
    for (const auto& we : g.edges()) {
      pool.persistence.push_back(static_cast<double>(we.weight) / windows);
      pool.overlap.push_back(
          overlap_of(g.neighbors(we.edge.u), g.neighbors(we.edge.v), we.edge.u, we.edge.v));
    }
  }
  return pool;
}

double empirical_quantile(std::vector<double> values, double q) {
  if (values.empty()) throw std::invalid_argument("quantile of an empty sample");
  const double n = static_cast<double>(values.size());
  // slack absorbs q * n landing a hair above an integer
  auto rank = static_cast<std::size_t>(std::ceil(q * n - 1e-9));
  rank = std::clamp<std::size_t>(rank, 1, values.size());
  auto nth = values.begin() + static_cast<std::ptrdiff_t>(rank - 1);
  std::nth_element(values.begin(), nth, values.end());
  return *nth;
}

Thresholds calibrate_thresholds(const TemporalNetwork& net, double p_rnd, std::uint64_t seed,
                                std::size_t shuffles) {
  if (!(p_rnd > 0.0 && p_rnd < 1.0)) throw std::invalid_argument("p_rnd must lie in (0, 1)");
  if (shuffles < 1) throw std::invalid_argument("shuffles must be >= 1");
  ReferencePool pool = reference_features(net, seed, shuffles);
  if (pool.persistence.empty()) throw DataError("reference networks contain no edges");
  const double q = 1.0 - p_rnd;
  return Thresholds{empirical_quantile(std::move(pool.persistence), q),
                    empirical_quantile(std::move(pool.overlap), q), p_rnd};
}

std::vector<EdgeAssessment> classify_edges(const TemporalNetwork& net, const Thresholds& th) {
  std::vector<EdgeAssessment> out;
  if (net.window_count < 1) return out;
  const AggregatedGraph g = aggregate(net);
  const double windows = static_cast<double>(net.window_count);
  out.reserve(g.edge_count());
  for (const auto& we : g.edges()) {
    EdgeFeatures f{static_cast<double>(we.weight) / windows,
                   overlap_of(g.neighbors(we.edge.u), g.neighbors(we.edge.v), we.edge.u, we.edge.v)};
    out.push_back({we.edge, f, classify_features(f, th)});
  }
  return out;
}

}  // namespace relmine
