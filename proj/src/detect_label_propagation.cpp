#include <algorithm>
#include <numeric>
#include <random>

#include "detect_common.hpp"
#include "relmine/detect.hpp"

namespace relmine {

namespace {

constexpr std::size_t kMaxSweeps = 10'000;

class LabelCounter {
 public:
  explicit LabelCounter(std::size_t n) : count_(n, 0) {}

  // Labels of maximal frequency among i's neighbors, ascending.
  const std::vector<std::uint32_t>& dominant(const IndexedGraph& g, std::size_t i,
                                             std::span<const std::uint32_t> label) {
    touched_.clear();
    for (std::uint32_t j : g.neighbors(i))
      if (count_[label[j]]++ == 0) touched_.push_back(label[j]);
    std::uint32_t top = 0;
    for (std::uint32_t l : touched_) top = std::max(top, count_[l]);
    best_.clear();
    for (std::uint32_t l : touched_) {
      if (count_[l] == top) best_.push_back(l);
      count_[l] = 0;
    }
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  std::vector<std::uint32_t> count_;
  std::vector<std::uint32_t> touched_;
  std::vector<std::uint32_t> best_;
};

}  // namespace

Partition label_propagation(const AggregatedGraph& g, std::uint64_t seed) {
  detail::require_nodes(g);
  const IndexedGraph ig(g);
  const std::size_t n = ig.size();
  std::vector<std::uint32_t> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  LabelCounter counter(n);

  for (std::size_t sweep = 0; sweep < kMaxSweeps; ++sweep) {
    std::shuffle(order.begin(), order.end(), rng);
    for (std::uint32_t i : order) {
      if (ig.degree(i) == 0) continue;
      const auto& best = counter.dominant(ig, i, label);
      std::uniform_int_distribution<std::size_t> pick(0, best.size() - 1);
      label[i] = best[pick(rng)];
    }
    bool stable = true;
    for (std::size_t i = 0; i < n && stable; ++i) {
      if (ig.degree(i) == 0) continue;
      const auto& best = counter.dominant(ig, i, label);
      stable = std::binary_search(best.begin(), best.end(), label[i]);
    }
    if (stable) break;
  }
  return detail::to_partition(ig, label);
}

}  // namespace relmine
