#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle.hpp"
#include "pyx/optimizer.hpp"
#include "test_util.hpp"

#include <random>

using namespace pyx;

namespace {

PGNode stmt_node(uint32_t id, uint64_t weight, std::optional<Host> pin = {},
                 std::optional<int> group = {}) {
  PGNode n;
  n.id = NodeId::stmt(id);
  n.kind = PGNodeKind::Statement;
  n.weight = weight;
  n.pin = pin;
  n.colocate_group = group;
  return n;
}

PGEdge wedge(uint32_t src, uint32_t dst, double w, EdgeKind kind = EdgeKind::Data) {
  PGEdge e;
  e.src = NodeId::stmt(src);
  e.dst = NodeId::stmt(dst);
  e.kind = kind;
  e.weighted = true;
  e.weight = w;
  return e;
}

PartitionGraph graph_of(std::vector<PGNode> nodes, std::vector<PGEdge> edges) {
  PartitionGraph g;
  g.nodes = std::move(nodes);
  g.edges = std::move(edges);
  g.rebuild_index();
  return g;
}

} // namespace

TEST_CASE("two nodes and one edge formulate to the expected shape") {
  PartitionGraph g = graph_of({stmt_node(1, 1), stmt_node(2, 1)}, {wedge(1, 2, 1.0)});
  IlpProblem prob = formulate(g, 100);
  CHECK(prob.node_vars.size() == 2);
  CHECK(prob.edge_vars.size() == 1);
  CHECK(prob.constraints.size() == 3); // two cut rows plus the budget row
  CHECK(prob.dump_lp().find("min:") != std::string::npos);
}

TEST_CASE("negative budget is rejected") {
  PartitionGraph g = graph_of({stmt_node(1, 1)}, {});
  CHECK_THROWS_AS(formulate(g, -1), Diag);
}

// For any 0/1 valuation of the node variables, the two rows per edge force
// the minimal feasible edge variable to equal the cut indicator.
TEST_CASE("cut constraints encode exactly the cut indicator") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 50; ++round) {
    PartitionGraph g = pyxtest::random_partition_graph(rng, 10);
    IlpProblem prob = formulate(g, 1'000'000);
    std::uniform_int_distribution<int> bit(0, 1);
    std::vector<double> x(prob.var_count(), 0.0);
    for (size_t v = 0; v < prob.node_vars.size(); ++v)
      x[v] = bit(rng);
    for (size_t i = 0; i < prob.edge_vars.size(); ++i) {
      const auto &ev = prob.edge_vars[i];
      // minimal e over both rows: e >= n_a - n_b and e >= n_b - n_a
      double lo = 0;
      for (const auto &c : prob.constraints) {
        double coef_e = 0, rest = 0;
        for (const auto &[v, coef] : c.coeffs) {
          if (v == prob.node_vars.size() + i)
            coef_e = coef;
          else
            rest += coef * x[v];
        }
        if (coef_e < 0)
          lo = std::max(lo, (rest - c.bound) / -coef_e);
      }
      double want = x[ev.var_a] != x[ev.var_b] ? 1.0 : 0.0;
      CHECK(lo == want);
    }
  }
}

// Triangle with two pinned corners, enumerated by hand: the pinned edge is
// cut either way, and the free node loses exactly one of its two unit edges
// on either side, so the minimum is 2 with an APP tie-break.
TEST_CASE("pinned triangle pays the forced edge plus one side") {
  PartitionGraph g = graph_of(
      {stmt_node(1, 1, Host::Db), stmt_node(2, 1, Host::App), stmt_node(3, 1)},
      {wedge(1, 2, 1.0), wedge(2, 3, 1.0), wedge(1, 3, 1.0)});
  Assignment a = solve(formulate(g, 1'000));
  CHECK(a.objective == 2.0);
  CHECK(a.host_of(NodeId::stmt(1)) == Host::Db);
  CHECK(a.host_of(NodeId::stmt(2)) == Host::App);
  // both sides cost the same; the tie-break keeps the free node on APP
  CHECK(a.host_of(NodeId::stmt(3)) == Host::App);
  CHECK(a.cut_edges.size() == 2);
}

TEST_CASE("zero-weight edges solve to the all-APP assignment") {
  PartitionGraph g = graph_of({stmt_node(1, 5), stmt_node(2, 5), stmt_node(3, 5)},
                              {wedge(1, 2, 0.0), wedge(2, 3, 0.0)});
  Assignment a = solve(formulate(g, 1'000));
  CHECK(a.objective == 0.0);
  for (const auto &n : g.nodes)
    CHECK(a.host_of(n.id) == Host::App);
}

TEST_CASE("solver matches the exhaustive oracle on random graphs") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int64_t> budget_dist(0, 400);
  for (int round = 0; round < 60; ++round) {
    PartitionGraph g = pyxtest::random_partition_graph(rng);
    int64_t budget = budget_dist(rng);
    pyxtest::BruteResult oracle = pyxtest::brute_force_min_cut(g, budget);
    if (!oracle.feasible) {
      CHECK_THROWS_AS(solve(formulate(g, budget)), Diag);
      continue;
    }
    Assignment a = solve(formulate(g, budget));
    INFO("round " << round << " budget " << budget);
    CHECK(a.objective == oracle.objective);
    CHECK(a.placement == oracle.placement);
    // pins and budget respected
    uint64_t db_weight = 0;
    for (const auto &n : g.nodes) {
      if (n.pin)
        CHECK(a.host_of(n.id) == *n.pin);
      if (n.kind == PGNodeKind::Statement && a.host_of(n.id) == Host::Db)
        db_weight += n.weight;
    }
    CHECK(db_weight <= static_cast<uint64_t>(budget));
    // cut edges are exactly the edges with split endpoints
    for (const auto &e : g.edges)
      if (e.weighted)
        CHECK((a.cut_edges.count(e.id) != 0) ==
              (a.host_of(e.src) != a.host_of(e.dst)));
  }
}

TEST_CASE("optimal objective never increases with budget") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 20; ++round) {
    PartitionGraph g = pyxtest::random_partition_graph(rng, 12);
    bool feasible_somewhere = false;
    double prev = 0;
    for (int64_t budget : {0, 50, 200, 1'000'000}) {
      try {
        Assignment a = solve(formulate(g, budget));
        if (feasible_somewhere)
          CHECK(a.objective <= prev);
        prev = a.objective;
        feasible_somewhere = true;
      } catch (const Diag &) {
        CHECK(!feasible_somewhere); // once feasible, larger budgets stay feasible
      }
    }
  }
}

TEST_CASE("DB-pinned weight over budget reports infeasibility") {
  PartitionGraph g = graph_of({stmt_node(1, 10, Host::Db), stmt_node(2, 1)},
                              {wedge(1, 2, 1.0)});
  try {
    solve(formulate(g, 5));
    FAIL("expected infeasibility");
  } catch (const Diag &d) {
    CHECK(d.category() == "infeasible");
    CHECK(std::string(d.what()).find("s:1") != std::string::npos);
  }
}

TEST_CASE("budget zero on the pipeline graph places every statement on APP") {
  Program p = pyxtest::load_program("neworder.pyx");
  Workload w = pyxtest::load_workload("neworder.workload");
  Profile prof = profile_program(p, w);
  DepAnalysis an = analyze(p);
  PartitionGraph g = build_graph(p, an, prof, NetParams{});
  Assignment a = solve(formulate(g, 0));
  for (const auto &n : g.nodes) {
    if (n.kind == PGNodeKind::Statement)
      CHECK(a.host_of(n.id) == Host::App);
    if (n.kind == PGNodeKind::DbCode)
      CHECK(a.host_of(n.id) == Host::Db);
  }
  // objective equals the all-APP cut value
  std::map<NodeId, Host> all_app;
  for (const auto &n : g.nodes)
    all_app[n.id] = n.kind == PGNodeKind::DbCode ? Host::Db : Host::App;
  CHECK(a.objective == cut_objective(g, all_app));
}

TEST_CASE("apply labels every node and marks exactly the cut edges") {
  PartitionGraph g = graph_of({stmt_node(1, 1, Host::Db), stmt_node(2, 1)},
                              {wedge(1, 2, 3.0)});
  Assignment a = solve(formulate(g, 1'000));
  PlacedGraph pg = apply(a, g);
  CHECK(pg.host_of(NodeId::stmt(1)) == Host::Db);
  int cut = 0;
  for (const auto &e : pg.graph.edges)
    cut += pg.is_cut(e) ? 1 : 0;
  CHECK(cut == static_cast<int>(a.cut_edges.size()));
}
