#include "relmine/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>

#include "relmine/error.hpp"

namespace relmine::io {

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  for (;;) {
    auto c = line.find(',');
    fields.push_back(trim(line.substr(0, c)));
    if (c == std::string_view::npos) break;
    line.remove_prefix(c + 1);
  }
  return fields;
}

// Calls f(line_number, fields) for every non-comment line.
template <class F>
void for_each_record(std::istream& in, F&& f) {
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    f(line_no, split_fields(line));
  }
}

template <class Int>
Int parse_int(std::string_view s, std::size_t line_no, const char* what) {
  Int value{};
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || end != s.data() + s.size())
    throw ParseError(line_no, std::string(what) + " is not an integer: '" + std::string(s) + "'");
  return value;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

void write_events(std::ostream& out, const EventLog& log) {
  out << "# timestamp,u,v\n";
  for (const auto& ev : log.events)
    out << ev.t << ',' << log.nodes.name(ev.u) << ',' << log.nodes.name(ev.v) << '\n';
}

void write_edge_list(std::ostream& out, const AggregatedGraph& g, const NodeTable& names) {
  out << "# u,v,weight\n";
  for (const auto& we : g.edges())
    out << names.name(we.edge.u) << ',' << names.name(we.edge.v) << ',' << we.weight << '\n';
  for (NodeId n : g.nodes())
    if (g.degree(n) == 0) out << names.name(n) << '\n';
}

AggregatedGraph read_edge_list(std::istream& in, NodeTable& names) {
  std::vector<WeightedEdge> edges;
  std::vector<NodeId> isolated;
  for_each_record(in, [&](std::size_t line_no, const std::vector<std::string_view>& f) {
    if (f.size() > 3 || f[0].empty()) throw ParseError(line_no, "expected 'u,v[,weight]' or 'u'");
    const NodeId u = names.intern(f[0]);
    if (f.size() == 1) {
      isolated.push_back(u);
      return;
    }
    if (f[1].empty()) throw ParseError(line_no, "empty node identifier");
    const NodeId v = names.intern(f[1]);
    if (u == v) throw ParseError(line_no, "self-loop");
    std::uint32_t w = f.size() == 3 ? parse_int<std::uint32_t>(f[2], line_no, "weight") : 1;
    if (w == 0) throw ParseError(line_no, "weight must be positive");
    edges.push_back({make_edge(u, v), w});
  });
  return AggregatedGraph::from_edges(std::move(edges), isolated);
}

void write_partition(std::ostream& out, const Partition& p, const NodeTable& names) {
  out << "# node,community_id\n";
  for (std::size_t i = 0; i < p.size(); ++i)
    out << names.name(p.nodes()[i]) << ',' << p.labels()[i] << '\n';
}

Partition read_partition(std::istream& in, NodeTable& names) {
  std::vector<NodeId> nodes;
  std::vector<std::uint64_t> labels;
  std::map<std::string, std::uint64_t, std::less<>> ids;
  for_each_record(in, [&](std::size_t line_no, const std::vector<std::string_view>& f) {
    if (f.size() != 2 || f[0].empty() || f[1].empty())
      throw ParseError(line_no, "expected 'node,community_id'");
    nodes.push_back(names.intern(f[0]));
    labels.push_back(ids.try_emplace(std::string(f[1]), ids.size()).first->second);
  });
  return Partition::from_labels(nodes, labels);
}

void write_classification(std::ostream& out, std::span<const EdgeAssessment> rows,
                          const NodeTable& names) {
  out << "# u,v,per,to,class\n";
  for (const auto& r : rows)
    out << names.name(r.edge.u) << ',' << names.name(r.edge.v) << ','
        << format_double(r.features.persistence) << ',' << format_double(r.features.overlap) << ','
        << to_string(r.label) << '\n';
}

void write_edge_origins(std::ostream& out, std::span<const std::pair<Edge, EdgeOrigin>> rows,
                        const NodeTable& names) {
  out << "# u,v,label\n";
  for (const auto& [e, origin] : rows)
    out << names.name(e.u) << ',' << names.name(e.v) << ','
        << (origin == EdgeOrigin::Social ? "social" : "noise") << '\n';
}

void write_node_table(std::ostream& out, const NodeTable& names) {
  out << "# index,name\n";
  for (std::size_t i = 0; i < names.size(); ++i)
    out << i << ',' << names.name(static_cast<NodeId>(i)) << '\n';
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  return out;
}

std::ifstream open_for_read(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path.string());
  return in;
}

}  // namespace relmine::io
