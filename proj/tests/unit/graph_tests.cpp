#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pyx/graph.hpp"
#include "test_util.hpp"

using namespace pyx;

namespace {

PartitionGraph two_node_graph(uint64_t cnt_src, uint64_t cnt_dst, EdgeKind kind) {
  PartitionGraph g;
  PGNode a, b;
  a.id = NodeId::stmt(1);
  a.kind = PGNodeKind::Statement;
  b.id = NodeId::stmt(2);
  b.kind = PGNodeKind::Statement;
  g.nodes = {a, b};
  PGEdge e;
  e.src = a.id;
  e.dst = b.id;
  e.kind = kind;
  e.weighted = true;
  g.edges = {e};
  g.rebuild_index();
  (void)cnt_src;
  (void)cnt_dst;
  return g;
}

Profile profile_for(std::map<uint32_t, uint64_t> counts,
                    std::map<uint32_t, SizeStat> sizes = {}) {
  Profile p;
  p.stmt_count = std::move(counts);
  p.def_size = std::move(sizes);
  return p;
}

} // namespace

TEST_CASE("edge count is the minimum of its endpoint counts") {
  PartitionGraph g = two_node_graph(100, 20, EdgeKind::Control);
  Profile prof = profile_for({{1, 100}, {2, 20}});
  CHECK(edge_count(g, g.edges[0], prof) == 20);

  Profile zero = profile_for({{1, 0}, {2, 20}});
  CHECK(edge_count(g, g.edges[0], zero) == 0);

  Profile loop = profile_for({{1, 101}, {2, 100}});
  CHECK(edge_count(g, g.edges[0], loop) == 100);
}

TEST_CASE("control edges price latency times count") {
  PartitionGraph g = two_node_graph(5, 5, EdgeKind::Control);
  Profile prof = profile_for({{1, 5}, {2, 5}});
  NetParams np;
  np.lat_ms = 2.0;
  np.bw_bytes_per_ms = 1000.0;
  PartitionGraph w = weigh(g, prof, np);
  CHECK(w.edges[0].weight == 2.0 * 5.0);
}

TEST_CASE("data edges price size over bandwidth times count") {
  PartitionGraph g = two_node_graph(3, 3, EdgeKind::Data);
  Profile prof = profile_for({{1, 3}, {2, 3}}, {{1, SizeStat{3000, 3}}});
  NetParams np;
  np.lat_ms = 2.0;
  np.bw_bytes_per_ms = 1000.0;
  PartitionGraph w = weigh(g, prof, np);
  CHECK(w.edges[0].weight == 1000.0 / 1000.0 * 3.0);
}

TEST_CASE("update edges price size over bandwidth times destination count") {
  PartitionGraph g = two_node_graph(1, 100, EdgeKind::Update);
  Profile prof = profile_for({{1, 1}, {2, 100}}, {{1, SizeStat{8, 1}}});
  NetParams np;
  np.lat_ms = 2.0;
  np.bw_bytes_per_ms = 1000.0;
  PartitionGraph w = weigh(g, prof, np);
  CHECK(w.edges[0].weight == 8.0 / 1000.0 * 100.0);
}

TEST_CASE("statement nodes weigh their execution count, field nodes zero") {
  Program p = pyxtest::load_program("neworder.pyx");
  Workload w = pyxtest::load_workload("neworder.workload");
  Profile prof = profile_program(p, w);
  DepAnalysis a = analyze(p);
  PartitionGraph g = build_graph(p, a, prof, NetParams{});
  for (const auto &n : g.nodes) {
    if (n.kind == PGNodeKind::Statement)
      CHECK(n.weight == prof.count(n.id.index));
    else
      CHECK(n.weight == 0);
  }
  // exactly one db-code and one console node, both pinned
  int dbcode = 0, console = 0;
  for (const auto &n : g.nodes) {
    if (n.kind == PGNodeKind::DbCode) {
      ++dbcode;
      CHECK(n.pin == Host::Db);
    }
    if (n.kind == PGNodeKind::Console) {
      ++console;
      CHECK(n.pin == Host::App);
    }
  }
  CHECK(dbcode == 1);
  CHECK(console == 1);
}

TEST_CASE("with dominant latency every control edge outweighs every data edge") {
  Program p = pyxtest::load_program("neworder.pyx");
  Workload w = pyxtest::load_workload("neworder.workload");
  Profile prof = profile_program(p, w);
  DepAnalysis a = analyze(p);
  NetParams np;
  np.lat_ms = 1000.0; // LAT >> size/BW for every size in the corpus
  np.bw_bytes_per_ms = 1e6;
  PartitionGraph g = build_graph(p, a, prof, np);
  double min_control = 1e300, max_data = 0;
  for (const auto &e : g.edges) {
    uint64_t cnt = edge_count(g, e, prof);
    if (cnt == 0)
      continue; // unexercised edges weigh zero on both sides
    if (e.kind == EdgeKind::Control)
      min_control = std::min(min_control, e.weight);
    if (e.kind == EdgeKind::Data)
      max_data = std::max(max_data, e.weight);
  }
  CHECK(min_control > max_data);
}

TEST_CASE("doubling all counts doubles every weight") {
  Program p = pyxtest::load_program("neworder.pyx");
  Workload w = pyxtest::load_workload("neworder.workload");
  Profile prof = profile_program(p, w);
  Profile doubled = prof;
  for (auto &[id, c] : doubled.stmt_count)
    c *= 2;
  for (auto &[id, s] : doubled.def_size) {
    s.total *= 2;
    s.samples *= 2; // mean sizes unchanged
  }
  DepAnalysis a = analyze(p);
  PartitionGraph g1 = build_graph(p, a, prof, NetParams{});
  PartitionGraph g2 = build_graph(p, a, doubled, NetParams{});
  for (size_t i = 0; i < g1.edges.size(); ++i)
    CHECK(g2.edges[i].weight == 2.0 * g1.edges[i].weight);
  for (size_t i = 0; i < g1.nodes.size(); ++i)
    CHECK(g2.nodes[i].weight == 2 * g1.nodes[i].weight);
}

TEST_CASE("graphs are reproducible and round-trip through the text form") {
  Program p = pyxtest::load_program("neworder.pyx");
  Workload w = pyxtest::load_workload("neworder.workload");
  Profile prof = profile_program(p, w);
  DepAnalysis a = analyze(p);
  PartitionGraph g1 = build_graph(p, a, prof, NetParams{});
  PartitionGraph g2 = build_graph(p, a, prof, NetParams{});
  CHECK(dump_graph(g1, &p) == dump_graph(g2, &p));

  PartitionGraph parsed = parse_graph(dump_graph(g1));
  CHECK(dump_graph(parsed) == dump_graph(g1));
}

TEST_CASE("weighing fails loudly on a missing profile entry") {
  Program p = pyxtest::load_program("neworder.pyx");
  Workload w = pyxtest::load_workload("neworder.workload");
  Profile prof = profile_program(p, w);
  prof.stmt_count.erase(prof.stmt_count.begin()->first);
  DepAnalysis a = analyze(p);
  CHECK_THROWS_AS(build_graph(p, a, prof, NetParams{}), Diag);
}
