#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <span>
#include <string>

#include "relmine/classify.hpp"
#include "relmine/ingest.hpp"
#include "relmine/node_table.hpp"
#include "relmine/partition.hpp"
#include "relmine/synth.hpp"
#include "relmine/tempgraph.hpp"

// Plain-text file formats. All writers emit names from the NodeTable and sort
// rows by NodeId.
namespace relmine::io {

// `timestamp,u,v`
void write_events(std::ostream& out, const EventLog& log);

// `u,v,weight` per edge; isolated nodes as a bare `u` line.
void write_edge_list(std::ostream& out, const AggregatedGraph& g, const NodeTable& names);
// Accepts `u,v`, `u,v,weight` and bare `u` lines; `#` comments skipped.
AggregatedGraph read_edge_list(std::istream& in, NodeTable& names);

// `node,community_id`
void write_partition(std::ostream& out, const Partition& p, const NodeTable& names);
// Unknown names are interned into `names`.
Partition read_partition(std::istream& in, NodeTable& names);

// `u,v,per,to,class`
void write_classification(std::ostream& out, std::span<const EdgeAssessment> rows,
                          const NodeTable& names);

// `u,v,label` with label social|noise
void write_edge_origins(std::ostream& out, std::span<const std::pair<Edge, EdgeOrigin>> rows,
                        const NodeTable& names);

// `index,name`
void write_node_table(std::ostream& out, const NodeTable& names);

std::ofstream open_for_write(const std::filesystem::path& path);
std::ifstream open_for_read(const std::filesystem::path& path);

// Shortest decimal text that round-trips the double.
std::string format_double(double x);

}  // namespace relmine::io
