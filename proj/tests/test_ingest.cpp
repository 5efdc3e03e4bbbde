#include <map>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "relmine/error.hpp"
#include "relmine/ingest.hpp"

using namespace relmine;

namespace {

EventLog parse(const std::string& text) {
  std::istringstream in(text);
  return parse_events(in);
}

std::string name_of(const EventLog& log, NodeId id) { return log.nodes.name(id); }

}  // namespace

TEST_CASE("parse_events reads lines through in order") {
  const EventLog log = parse("0,a,b\n5,b,c");
  REQUIRE(log.events.size() == 2);
  CHECK(log.events[0].t == 0);
  CHECK(name_of(log, log.events[0].u) == "a");
  CHECK(name_of(log, log.events[0].v) == "b");
  CHECK(log.events[1].t == 5);
  CHECK(name_of(log, log.events[1].u) == "b");
  CHECK(name_of(log, log.events[1].v) == "c");
  CHECK(log.dropped_self_loops == 0);
}

TEST_CASE("parse_events drops self-interactions and counts them") {
  const EventLog log = parse("0,a,a");
  CHECK(log.events.empty());
  CHECK(log.dropped_self_loops == 1);
}

TEST_CASE("parse_events sorts by timestamp, stably") {
  const EventLog log = parse("7,x,y\n2,p,q");
  REQUIRE(log.events.size() == 2);
  CHECK(log.events[0].t == 2);
  CHECK(name_of(log, log.events[0].u) == "p");
  CHECK(log.events[1].t == 7);

  const EventLog ties = parse("3,a,b\n1,z,y\n3,c,d\n3,e,f");
  REQUIRE(ties.events.size() == 4);
  CHECK(name_of(ties, ties.events[1].u) == "a");
  CHECK(name_of(ties, ties.events[2].u) == "c");
  CHECK(name_of(ties, ties.events[3].u) == "e");
}

TEST_CASE("parse_events skips comments and blank lines, tolerates spaces") {
  const EventLog log = parse("# header\n\n 4 , alice , bob \r\n#x\n");
  REQUIRE(log.events.size() == 1);
  CHECK(log.events[0].t == 4);
  CHECK(name_of(log, log.events[0].u) == "alice");
}

TEST_CASE("parse_events errors name the offending line") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("0,a,b\nnot a line") == 2);
  CHECK(line_of("0,a,b\n# c\n1,a") == 3);
  CHECK(line_of("0,a,b,c") == 1);
  CHECK(line_of("x,a,b") == 1);
  CHECK(line_of("1.5,a,b") == 1);
  CHECK(line_of("0,a,b\n-3,a,b") == 2);
  CHECK(line_of("0,,b") == 1);
  CHECK_THROWS_AS(parse("-1,a,b"), DataError);
}

TEST_CASE("build_windows collapses repeats and keeps window indices") {
  std::vector<InteractionEvent> events{{0, 0, 1}, {1, 0, 1}, {10, 0, 2}};
  const TemporalNetwork net = build_windows(events, {5, 0});
  REQUIRE(net.snapshots.size() == 2);
  CHECK(net.snapshots[0].index == 0);
  CHECK(net.snapshots[0].edges == std::vector<Edge>{{0, 1}});
  CHECK(net.snapshots[0].counts == std::vector<std::uint32_t>{2});
  CHECK(net.snapshots[1].index == 2);
  CHECK(net.snapshots[1].edges == std::vector<Edge>{{0, 2}});
  CHECK(net.window_count == 3);
  CHECK(net.nodes == std::vector<NodeId>{0, 1, 2});
  CHECK_NOTHROW(net.validate());
}

TEST_CASE("build_windows with unit windows") {
  std::vector<InteractionEvent> events{{0, 3, 1}};
  const TemporalNetwork net = build_windows(events, {1, 0});
  REQUIRE(net.snapshots.size() == 1);
  CHECK(net.snapshots[0].edges == std::vector<Edge>{{1, 3}});
  CHECK(net.window_count == 1);
}

TEST_CASE("build_windows on no events is an empty network") {
  const TemporalNetwork net = build_windows({}, {7, 0});
  CHECK(net.snapshots.empty());
  CHECK(net.window_count == 0);
  CHECK(net.nodes.empty());
}

TEST_CASE("build_windows honours the origin and rejects earlier events") {
  std::vector<InteractionEvent> events{{100, 0, 1}, {104, 1, 2}, {105, 0, 1}};
  const TemporalNetwork net = build_windows(events, {5, 100});
  REQUIRE(net.snapshots.size() == 2);
  CHECK(net.snapshots[0].index == 0);
  CHECK(net.snapshots[1].index == 1);
  CHECK_THROWS_AS(build_windows(events, {5, 101}), DataError);
  CHECK_THROWS_AS(build_windows(events, {0, 0}), std::invalid_argument);
}

TEST_CASE("build_windows matches a brute-force recount on random events") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<NodeId> node(0, 19);
  std::uniform_int_distribution<Timestamp> time(0, 4999);
  std::vector<InteractionEvent> events;
  while (events.size() < 1000) {
    NodeId a = node(rng), b = node(rng);
    if (a != b) events.push_back({time(rng), a, b});
  }
  std::stable_sort(events.begin(), events.end(),
                   [](const auto& x, const auto& y) { return x.t < y.t; });
  const WindowingPolicy policy{100, 0};
  const TemporalNetwork net = build_windows(events, policy);
  net.validate();

  std::set<std::pair<WindowIndex, Edge>> expected;
  std::map<std::pair<WindowIndex, Edge>, std::uint32_t> multiplicity;
  for (const auto& ev : events) {
    const auto key = std::pair{ev.t / 100, make_edge(ev.u, ev.v)};
    expected.insert(key);
    ++multiplicity[key];
  }
  std::set<std::pair<WindowIndex, Edge>> actual;
  for (const auto& s : net.snapshots)
    for (std::size_t i = 0; i < s.edges.size(); ++i) {
      CHECK(actual.insert({s.index, s.edges[i]}).second);  // no duplicate pair
      CHECK(s.counts[i] == multiplicity.at({s.index, s.edges[i]}));
    }
  CHECK(actual == expected);

  // every event's pair lives in exactly one snapshot
  for (const auto& ev : events) {
    std::size_t hits = 0;
    for (const auto& s : net.snapshots)
      if (s.index == ev.t / 100 && s.contains(make_edge(ev.u, ev.v))) ++hits;
    CHECK(hits == 1);
  }
  CHECK(build_windows(events, policy) == net);
}
