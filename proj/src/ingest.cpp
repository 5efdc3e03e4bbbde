#include "relmine/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <string>

#include "relmine/error.hpp"

namespace relmine {

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

EventLog parse_events(std::istream& in) { return parse_events(in, NodeTable{}); }

EventLog parse_events(std::istream& in, NodeTable nodes) {
  EventLog log;
  log.nodes = std::move(nodes);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    auto c1 = line.find(',');
    auto c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string_view::npos || line.find(',', c2 + 1) != std::string_view::npos)
      throw ParseError(line_no, "expected 'timestamp,u,v'");
    std::string_view ts = trim(line.substr(0, c1));
    std::string_view u = trim(line.substr(c1 + 1, c2 - c1 - 1));
    std::string_view v = trim(line.substr(c2 + 1));
    if (u.empty() || v.empty()) throw ParseError(line_no, "empty node identifier");

    Timestamp t = 0;
    auto [end, ec] = std::from_chars(ts.data(), ts.data() + ts.size(), t);
    if (ec != std::errc{} || end != ts.data() + ts.size() || ts.empty())
      throw ParseError(line_no, "timestamp is not an integer: '" + std::string(ts) + "'");
    if (t < 0) throw ParseError(line_no, "negative timestamp");

    if (u == v) {
      ++log.dropped_self_loops;
      continue;
    }
    NodeId a = log.nodes.intern(u);
    NodeId b = log.nodes.intern(v);
    log.events.push_back({t, a, b});
  }
  std::stable_sort(log.events.begin(), log.events.end(),
                   [](const InteractionEvent& x, const InteractionEvent& y) { return x.t < y.t; });
  return log;
}

TemporalNetwork build_windows(std::span<const InteractionEvent> events,
                              const WindowingPolicy& policy) {
  if (policy.window_length < 1) throw std::invalid_argument("window_length must be >= 1");
  TemporalNetwork net;
  if (events.empty()) return net;

  std::map<WindowIndex, std::map<Edge, std::uint32_t>> windows;
  std::vector<NodeId> nodes;
  Timestamp previous = events.front().t;
  for (const auto& ev : events) {
    if (ev.t < previous) throw DataError("events not sorted by timestamp");
    previous = ev.t;
    if (ev.t < policy.origin) throw DataError("event precedes the windowing origin");
    if (ev.u == ev.v) throw DataError("self-interaction in event list");
    ++windows[policy.window_of(ev.t)][make_edge(ev.u, ev.v)];
    nodes.push_back(ev.u);
    nodes.push_back(ev.v);
  }
  for (auto& [index, pairs] : windows) {
    Snapshot s;
    s.index = index;
    s.edges.reserve(pairs.size());
    s.counts.reserve(pairs.size());
    for (const auto& [e, count] : pairs) {
      s.edges.push_back(e);
      s.counts.push_back(count);
    }
    net.snapshots.push_back(std::move(s));
  }
  net.window_count = net.snapshots.back().index + 1;
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  net.nodes = std::move(nodes);
  return net;
}

}  // namespace relmine
