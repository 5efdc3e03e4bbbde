#include "relmine/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "relmine/error.hpp"

namespace relmine {

void SynthParams::validate() const {
  if (community_sizes.empty()) throw std::invalid_argument("no communities");
  for (auto s : community_sizes)
    if (s == 0) throw std::invalid_argument("community sizes must be positive");
  if (std::accumulate(community_sizes.begin(), community_sizes.end(), std::size_t{0}) < 4)
    throw std::invalid_argument("at least 4 nodes are required");
  if (windows < 2) throw std::invalid_argument("windows must be >= 2");
  if (!(p_intra >= 0.0 && p_intra <= 1.0)) throw std::invalid_argument("p_intra outside [0, 1]");
  if (!(social_density >= 0.0 && social_density <= 1.0))
    throw std::invalid_argument("social_density outside [0, 1]");
  if (noise_repeat < 1 || noise_repeat > windows)
    throw std::invalid_argument("noise_repeat must lie in [1, windows]");
}

namespace {

// First `k` elements of a uniformly random permutation of `items`.
template <class T>
std::vector<T> sample(std::vector<T> items, std::size_t k, std::mt19937_64& rng) {
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, items.size() - 1);
    std::swap(items[i], items[pick(rng)]);
  }
  items.resize(k);
  return items;
}

}  // namespace

SynthNetwork generate_planted(const SynthParams& params) {
  params.validate();
  std::mt19937_64 rng(params.seed);

  std::vector<std::uint64_t> community;
  for (std::size_t c = 0; c < params.community_sizes.size(); ++c)
    community.insert(community.end(), params.community_sizes[c], c);
  const auto n = static_cast<NodeId>(community.size());

  std::vector<Edge> social;
  NodeId first = 0;
  for (std::size_t size : params.community_sizes) {
    std::vector<Edge> pairs;
    for (NodeId i = first; i < first + size; ++i)
      for (NodeId j = i + 1; j < first + size; ++j) pairs.push_back({i, j});
    const auto keep = static_cast<std::size_t>(
        std::llround(params.social_density * static_cast<double>(pairs.size())));
    auto chosen = sample(std::move(pairs), keep, rng);
    social.insert(social.end(), chosen.begin(), chosen.end());
    first += static_cast<NodeId>(size);
  }
  std::sort(social.begin(), social.end());

  std::vector<Edge> cross;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j)
      if (community[i] != community[j]) cross.push_back({i, j});
  if (params.noise_edges > cross.size())
    throw DataError("noise_edges (" + std::to_string(params.noise_edges) + ") exceeds the " +
                    std::to_string(cross.size()) + " available cross-community pairs");
  std::vector<Edge> noise = sample(std::move(cross), params.noise_edges, rng);
  std::sort(noise.begin(), noise.end());

  std::vector<InteractionEvent> events;
  std::bernoulli_distribution interacts(params.p_intra);
  for (std::size_t w = 0; w < params.windows; ++w)
    for (const Edge& e : social)
      if (interacts(rng)) events.push_back({static_cast<Timestamp>(w), e.u, e.v});

  std::vector<Timestamp> all_windows(params.windows);
  std::iota(all_windows.begin(), all_windows.end(), 0);
  for (const Edge& e : noise)
    for (Timestamp w : sample(all_windows, params.noise_repeat, rng)) events.push_back({w, e.u, e.v});

  std::sort(events.begin(), events.end(), [](const InteractionEvent& a, const InteractionEvent& b) {
    return std::tie(a.t, a.u, a.v) < std::tie(b.t, b.u, b.v);
  });

  SynthNetwork out;
  out.log.nodes = NodeTable::numbered(n);
  out.log.events = std::move(events);
  out.network = build_windows(out.log.events, WindowingPolicy{1, 0});
  out.network.window_count = static_cast<WindowIndex>(params.windows);

  std::vector<NodeId> nodes(n);
  std::iota(nodes.begin(), nodes.end(), 0);
  out.ground_truth = Partition::from_labels(nodes, community);

  const AggregatedGraph aggregated = aggregate(out.network);
  for (const auto& we : aggregated.edges()) {
    const bool intra = community[we.edge.u] == community[we.edge.v];
    out.origin.emplace_back(we.edge, intra ? EdgeOrigin::Social : EdgeOrigin::Noise);
  }
  return out;
}

}  // namespace relmine
