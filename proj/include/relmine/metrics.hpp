#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relmine/partition.hpp"
#include "relmine/tempgraph.hpp"

namespace relmine {

// Newman-Girvan modularity on the unweighted graph. Throws DataError when
// the partition does not cover exactly g's nodes or g has no edges.
double modularity(const AggregatedGraph& g, const Partition& p);

struct ConductanceReport {
  // cut / (2 * internal + cut), one entry per community with volume > 0.
  std::vector<double> per_community;
  std::vector<CommunityId> scored;   // community id of each entry above
  std::vector<CommunityId> skipped;  // zero-volume communities
  double mean = 0.0;
  // cut / internal; nullopt when the community has no internal edge.
  std::vector<std::optional<double>> cut_over_internal;
};

ConductanceReport conductance(const AggregatedGraph& g, const Partition& p);

struct QualityReport {
  double modularity = 0.0;
  ConductanceReport conductance;
};

QualityReport quality(const AggregatedGraph& g, const Partition& p);

// Sum over blocks a of A of max_b |a ∩ b|. Throws DataError when the node
// sets differ.
std::int64_t projection_distance(const Partition& a, const Partition& b);

// 2n - rho_A(B) - rho_B(A).
std::int64_t split_join(const Partition& a, const Partition& b);

struct NamedPartition {
  std::string name;
  Partition partition;
};

struct ConsensusMatrix {
  std::vector<std::string> names;
  std::vector<std::vector<std::int64_t>> distance;
  double score = 0.0;  // mean off-diagonal entry; 0 for fewer than two entries
};

ConsensusMatrix consensus_matrix(const std::vector<NamedPartition>& partitions);

}  // namespace relmine
