// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Run it via ctest (test name "acceptance") or directly; an
// optional list of criterion numbers narrows the run.

#include "fuzzgen.hpp"
#include "oracle.hpp"
#include "pyx/driver.hpp"
#include "test_util.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

using namespace pyx;

namespace {

struct CorpusEntry {
  std::string name;
  Program program;
  Workload base;
  Profile profile;
};

struct Ctx {
  std::vector<CorpusEntry> corpus; // 3 benchmarks + 20 fuzz programs
};

std::string corpus_file(const std::string &rel) {
  return std::string(PYX_CORPUS_DIR) + "/" + rel;
}

CorpusEntry load_entry(const std::string &name, const std::string &prog_rel,
                       const std::string &wl_rel) {
  CorpusEntry e;
  e.name = name;
  e.program = normalize(parse(read_file(corpus_file(prog_rel)), prog_rel));
  e.base = parse_workload(read_file(corpus_file(wl_rel)), wl_rel);
  e.profile = profile_program(e.program, e.base);
  return e;
}

// Deterministic workload variants: db_init kept, calls drawn from
// benchmark-safe argument pools.
Workload vary_workload(const CorpusEntry &e, uint64_t seed) {
  std::mt19937_64 rng(seed);
  Workload w;
  w.seed = seed;
  w.db_init = e.base.db_init;
  auto pick = [&](const std::vector<Value> &pool) { return pool[rng() % pool.size()]; };
  size_t calls = 1 + rng() % 5;
  for (size_t i = 0; i < calls; ++i) {
    WorkloadCall c;
    if (e.name == "neworder") {
      c.entry = "placeOrder";
      c.args = {pick({int64_t{1}, int64_t{2}}), int64_t{1},
                pick({0.25, 0.5, 0.75})};
    } else if (e.name == "micro2") {
      c.entry = "main";
      c.args = {static_cast<int64_t>(10 + rng() % 50),
                static_cast<int64_t>(50 + rng() % 250),
                static_cast<int64_t>(10 + rng() % 50)};
    } else if (e.name == "linkedlist") {
      c.entry = "main";
      c.args = {static_cast<int64_t>(10 + rng() % 190)};
    } else {
      c.entry = "main"; // fuzz programs
      c.args = {static_cast<int64_t>(rng() % 9), static_cast<int64_t>(rng() % 9)};
    }
    w.calls.push_back(std::move(c));
  }
  return w;
}

std::vector<int64_t> budget_ladder(const CorpusEntry &e) {
  int64_t total = total_statement_weight(e.profile, e.program);
  return {0, total / 4, total * 6 / 10, total};
}

int count_db_statements(const Bundle &b, const Program &p) {
  int db = 0;
  std::istringstream rp(b.placement_report);
  std::string line;
  while (std::getline(rp, line))
    if (line.rfind("place s:", 0) == 0 && line.find(" DB") != std::string::npos)
      ++db;
  (void)p;
  return db;
}

struct Criterion {
  int id;
  std::string name;
  std::function<bool(Ctx &, std::string &)> run;
};

// ---- 1. semantic equivalence across the whole corpus ----

bool crit_equivalence(Ctx &ctx, std::string &detail) {
  auto t0 = std::chrono::steady_clock::now();
  size_t runs = 0;
  for (const auto &e : ctx.corpus) {
    std::vector<Bundle> bundles;
    for (int64_t b : budget_ladder(e))
      bundles.push_back(partition_program(e.program, e.profile, b, NetParams{}, e.name).bundle);
    for (uint64_t seed = 1; seed <= 10; ++seed) {
      Workload w = vary_workload(e, seed * 31 + 7);
      OutputTrace ref = run_program(e.program, w, RunOptions{}).trace;
      for (const Bundle &b : bundles) {
        OutputTrace dist = DualHostSim::run_workload(b, w, SimConfig{});
        ++runs;
        if (dist.text() != ref.text()) {
          detail = e.name + " diverged at budget " + std::to_string(b.budget) +
                   " seed " + std::to_string(seed);
          return false;
        }
      }
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  detail = std::to_string(runs) + " distributed runs bit-identical to the reference in " +
           format_double(secs) + "s";
  return secs < 120.0;
}

// ---- 2. solver optimality on the random-graph fuzz corpus ----

bool crit_ilp(Ctx &, std::string &detail) {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int64_t> budget_dist(0, 400);
  int solved = 0;
  for (int round = 0; round < 200; ++round) {
    PartitionGraph g = pyxtest::random_partition_graph(rng, 20);
    int64_t budget = budget_dist(rng);
    pyxtest::BruteResult oracle = pyxtest::brute_force_min_cut(g, budget);
    if (!oracle.feasible) {
      try {
        solve(formulate(g, budget));
        detail = "round " + std::to_string(round) + ": solver found a solution the oracle calls infeasible";
        return false;
      } catch (const Diag &) {
        continue;
      }
    }
    Assignment a = solve(formulate(g, budget));
    if (a.objective != oracle.objective) {
      detail = "round " + std::to_string(round) + ": objective " +
               format_double(a.objective) + " != oracle " + format_double(oracle.objective);
      return false;
    }
    uint64_t db_weight = 0;
    for (const auto &n : g.nodes) {
      if (n.pin && a.host_of(n.id) != *n.pin) {
        detail = "round " + std::to_string(round) + ": pin violated";
        return false;
      }
      if (n.kind == PGNodeKind::Statement && a.host_of(n.id) == Host::Db)
        db_weight += n.weight;
    }
    if (db_weight > static_cast<uint64_t>(budget)) {
      detail = "round " + std::to_string(round) + ": budget violated";
      return false;
    }
    ++solved;
  }
  detail = std::to_string(solved) + " feasible instances matched the 2^n oracle exactly";
  return true;
}

// ---- 3. budget 0 reproduces the original program on APP ----

bool crit_budget0(Ctx &ctx, std::string &detail) {
  for (const auto &e : ctx.corpus) {
    DepAnalysis a = analyze(e.program);
    PartitionGraph g = build_graph(e.program, a, e.profile, NetParams{});
    Assignment as = solve(formulate(g, 0));
    std::map<NodeId, Host> all_app;
    for (const auto &n : g.nodes) {
      Host h = as.host_of(n.id);
      if (n.kind == PGNodeKind::Statement && h != Host::App) {
        detail = e.name + ": statement " + n.id.str() + " left APP at budget 0";
        return false;
      }
      all_app[n.id] = n.kind == PGNodeKind::DbCode ? Host::Db : Host::App;
    }
    if (as.objective != cut_objective(g, all_app)) {
      detail = e.name + ": budget-0 objective differs from the all-APP cut value";
      return false;
    }
    Bundle b = partition_program(e.program, e.profile, 0, NetParams{}, e.name).bundle;
    Workload w = vary_workload(e, 5);
    if (DualHostSim::run_workload(b, w, SimConfig{}).text() !=
        run_reference(e.program, w).text()) {
      detail = e.name + ": budget-0 run is not semantically the original";
      return false;
    }
  }
  detail = "all corpus programs placed all-APP with the all-APP cut objective";
  return true;
}

// ---- 4. three-phase microbenchmark: partitions and regime bests ----

bool crit_micro2(Ctx &ctx, std::string &detail) {
  const CorpusEntry *e = nullptr;
  for (const auto &c : ctx.corpus)
    if (c.name == "micro2")
      e = &c;
  if (!e) {
    detail = "micro2 missing from corpus";
    return false;
  }
  int64_t total = total_statement_weight(e->profile, e->program);
  std::vector<int64_t> budgets = {0, total * 45 / 100, total};
  std::vector<Bundle> bundles;
  std::vector<PartitionResult> results;
  for (int64_t b : budgets) {
    results.push_back(partition_program(e->program, e->profile, b, NetParams{}, "micro2"));
    bundles.push_back(results.back().bundle);
  }

  // classify: all-APP / split (queries DB, compute APP) / all-DB
  auto host_of_stmt = [&](const PartitionResult &r, uint32_t id) {
    return r.placed.host_of(NodeId::stmt(id));
  };
  std::vector<uint32_t> query_stmts, compute_stmts, all_stmts;
  for_each_stmt_in_program(e->program, [&](const FuncDecl &f, const Stmt &s) {
    all_stmts.push_back(s.id);
    if (norm_kind(s) == NormKind::Query)
      query_stmts.push_back(s.id);
    if (f.name == "computePhase")
      compute_stmts.push_back(s.id);
  });
  for (uint32_t id : all_stmts)
    if (host_of_stmt(results[0], id) != Host::App) {
      detail = "low budget is not all-APP";
      return false;
    }
  for (uint32_t id : query_stmts)
    if (host_of_stmt(results[1], id) != Host::Db) {
      detail = "medium budget left a query on APP";
      return false;
    }
  for (uint32_t id : compute_stmts)
    if (host_of_stmt(results[1], id) != Host::App) {
      detail = "medium budget moved the compute task off APP";
      return false;
    }
  for (uint32_t id : all_stmts) {
    const Stmt *s = nullptr;
    for_each_stmt_in_program(e->program, [&](const FuncDecl &, const Stmt &st) {
      if (st.id == id)
        s = &st;
    });
    if (norm_kind(*s) == NormKind::Print)
      continue; // console output is pinned to APP
    if (host_of_stmt(results[2], id) != Host::Db) {
      detail = "high budget is not all-DB (statement " + std::to_string(id) + ")";
      return false;
    }
  }

  // regime diagonal: each partition is latency-minimal in its own regime
  // (db per-op costs model no / partial / full server load)
  const double app_cost = 0.001;
  const std::vector<std::pair<std::string, double>> regimes = {
      {"full-load", 1.2}, {"partial-load", 0.01}, {"no-load", 0.0001}};
  // partition i is expected best in regime i (APP under full load, the split
  // under partial load, DB under no load)
  for (size_t regime = 0; regime < regimes.size(); ++regime) {
    double best = 1e300;
    size_t best_idx = 99;
    for (size_t part = 0; part < bundles.size(); ++part) {
      SimConfig cfg;
      cfg.app_op_cost_ms = app_cost;
      cfg.db_op_cost_ms = regimes[regime].second;
      std::vector<SessionStats> stats;
      DualHostSim::run_workload(bundles[part], e->base, cfg, &stats);
      double t = 0;
      for (const auto &s : stats)
        t += s.latency_ms;
      if (t < best) {
        best = t;
        best_idx = part;
      }
    }
    if (best_idx != regime) {
      detail = "regime " + regimes[regime].first + " favored partition " +
               std::to_string(best_idx) + " instead of " + std::to_string(regime);
      return false;
    }
  }
  detail = "three qualitative partitions produced; completion-time bests sit on the diagonal";
  return true;
}

// ---- 5. round-trip economy on the new-order benchmark, N = 100 ----

bool crit_roundtrips(Ctx &ctx, std::string &detail) {
  const CorpusEntry *e = nullptr;
  for (const auto &c : ctx.corpus)
    if (c.name == "neworder")
      e = &c;
  Workload w;
  w.db_init = e->base.db_init;
  Table &items = w.db_init.tables["items"];
  items.rows.clear();
  const int n = 100;
  for (int i = 0; i < n; ++i)
    items.rows.push_back({int64_t{1}, static_cast<double>(i % 7) + 0.5});
  w.calls.push_back({"placeOrder", {int64_t{1}, int64_t{1}, 0.5}});

  Profile prof = profile_program(e->program, w); // representative of this load
  SimConfig cfg;
  cfg.net.lat_ms = 2.0;
  cfg.net.bw_bytes_per_ms = 1e6;

  Bundle app_only = partition_program(e->program, prof, 0, cfg.net, "neworder").bundle;
  Bundle db_heavy = partition_program(e->program, prof,
                                      total_statement_weight(prof, e->program),
                                      cfg.net, "neworder").bundle;
  std::vector<SessionStats> app_stats, db_stats;
  OutputTrace ta = DualHostSim::run_workload(app_only, w, cfg, &app_stats);
  OutputTrace tb = DualHostSim::run_workload(db_heavy, w, cfg, &db_stats);
  if (ta.text() != tb.text()) {
    detail = "partitions disagree on the trace";
    return false;
  }
  uint64_t app_transfers = app_stats[0].transfers;
  uint64_t db_transfers = db_stats[0].transfers;
  double ratio = app_stats[0].latency_ms / db_stats[0].latency_ms;
  detail = "APP-only " + std::to_string(app_transfers) + " transfers, DB-heavy " +
           std::to_string(db_transfers) + ", latency ratio " + format_double(ratio);
  return app_transfers >= n + 2 && db_transfers <= 3 && ratio >= 30.0;
}

// ---- 6. heap updates always piggy-back on control transfers ----

bool crit_piggyback(Ctx &ctx, std::string &detail) {
  uint64_t messages = 0, transfers = 0;
  for (const auto &e : ctx.corpus) {
    for (int64_t budget : budget_ladder(e)) {
      Bundle b = partition_program(e.program, e.profile, budget, NetParams{}, e.name).bundle;
      Workload w = vary_workload(e, 3);
      DualHostSim sim({&b}, w.db_init, SimConfig{});
      for (const auto &call : w.calls) {
        SessionStats st;
        sim.call_entry(call.entry, call.args, &st);
        transfers += st.transfers;
      }
      messages += sim.state_messages();
      if (sim.stale_reads() != 0) {
        detail = e.name + ": stale remote-cache reads detected";
        return false;
      }
      if (!sim.log().single_thread_of_control()) {
        detail = e.name + ": both hosts executed concurrently";
        return false;
      }
    }
  }
  detail = std::to_string(messages) + " state-bearing messages == " +
           std::to_string(transfers) + " control transfers";
  return messages == transfers;
}

// ---- 7. reordering legality and alternation benefit ----

bool crit_reorder(Ctx &ctx, std::string &detail) {
  bool strict_reduction = false;
  for (const auto &e : ctx.corpus) {
    int64_t total = total_statement_weight(e.profile, e.program);
    for (int64_t budget : {total / 4, total * 6 / 10}) {
      PartitionResult r = partition_program(e.program, e.profile, budget, NetParams{}, e.name);
      // linear-extension scan over non-back, non-interprocedural edges
      std::map<uint32_t, size_t> pos;
      size_t k = 0;
      std::function<void(const std::vector<StmtPtr> &)> number =
          [&](const std::vector<StmtPtr> &body) {
            for (const auto &s : body) {
              if (s->kind == Stmt::Kind::While) {
                number(s->cond_prelude);
                pos[s->id] = k++;
                number(s->body);
                continue;
              }
              pos[s->id] = k++;
              number(s->body);
              number(s->else_body);
            }
          };
      for (const auto &f : r.reordered.program.functions)
        number(f.body);
      for (const auto &edge : r.placed.graph.edges) {
        if (edge.is_back_edge || edge.is_interprocedural)
          continue;
        if (edge.src.kind != NodeId::Kind::Stmt || edge.dst.kind != NodeId::Kind::Stmt)
          continue;
        if (!pos.count(edge.src.index) || !pos.count(edge.dst.index))
          continue;
        if (pos.at(edge.src.index) >= pos.at(edge.dst.index)) {
          detail = e.name + ": emitted order violates " +
                   std::string(edge_kind_name(edge.kind)) + " edge s:" +
                   std::to_string(edge.src.index) + " -> s:" +
                   std::to_string(edge.dst.index);
          return false;
        }
      }
      if (r.reordered.alternations_after > r.reordered.alternations_before) {
        detail = e.name + ": reordering increased alternations";
        return false;
      }
      if (r.reordered.alternations_after < r.reordered.alternations_before)
        strict_reduction = true;
    }
  }
  if (!strict_reduction) {
    detail = "no corpus program showed a strict alternation reduction";
    return false;
  }
  detail = "all orders are legal linear extensions; strict reduction observed";
  return true;
}

// ---- 8. load step drives partition switching through the EWMA ----

bool crit_adaptive(Ctx &ctx, std::string &detail) {
  const CorpusEntry *e = nullptr;
  for (const auto &c : ctx.corpus)
    if (c.name == "neworder")
      e = &c;
  Bundle high = partition_program(e->program, e->profile,
                                  total_statement_weight(e->profile, e->program),
                                  NetParams{}, "neworder").bundle;
  Bundle low = partition_program(e->program, e->profile, 0, NetParams{}, "neworder").bundle;

  const double alpha = 0.2, threshold = 40.0, poll_ms = 100.0;
  LoadTrace trace;
  std::vector<double> samples;
  for (int i = 0; i < 60; ++i) {
    double s = (i >= 20 && i < 40) ? 80.0 : 20.0;
    samples.push_back(s);
    trace.samples.emplace_back(poll_ms * i, s);
  }

  DualHostSim sim({&high, &low}, e->base.db_init, SimConfig{});
  sim.set_load_trace(trace, alpha, threshold, 0, 1);

  std::vector<int> used;
  for (int i = 0; i < 60; ++i) {
    SessionStats st;
    sim.call_entry("placeOrder", {int64_t{1}, int64_t{1}, 0.5}, &st);
    used.push_back(st.bundle_used);
    double target = poll_ms * (i + 1);
    if (sim.now_ms() < target)
      sim.advance_time(target - sim.now_ms());
  }

  // the logged EWMA follows the recurrence exactly
  double l = 0;
  bool init = false;
  size_t sample_idx = 0;
  int first_over = -1, first_under_after = -1;
  for (const auto &ev : sim.log().events) {
    if (ev.kind != Event::Kind::LoadSample)
      continue;
    double s = samples.at(sample_idx);
    l = init ? ewma_update(l, s, alpha) : s;
    init = true;
    std::string want = "L=" + format_double(l);
    if (ev.detail.find(want) == std::string::npos) {
      detail = "EWMA log diverged at sample " + std::to_string(sample_idx) +
               " (want " + want + ", got " + ev.detail + ")";
      return false;
    }
    if (first_over < 0 && l > threshold)
      first_over = static_cast<int>(sample_idx);
    if (first_over >= 0 && first_under_after < 0 &&
        sample_idx > static_cast<size_t>(first_over) && l <= threshold)
      first_under_after = static_cast<int>(sample_idx);
    ++sample_idx;
  }
  if (first_over < 0) {
    detail = "EWMA never crossed the threshold";
    return false;
  }
  // the partition in use switches within 4 polls of the crossing
  int switched_at = -1;
  for (size_t i = 0; i < used.size(); ++i)
    if (used[i] == 1) {
      switched_at = static_cast<int>(i);
      break;
    }
  if (switched_at < 0 || switched_at > first_over + 4) {
    detail = "switch to the APP-heavy partition came " +
             std::string(switched_at < 0 ? "never" : "too late");
    return false;
  }
  if (used.back() != 0) {
    detail = "did not switch back after the load dropped";
    return false;
  }
  detail = "EWMA exact; switched at call " + std::to_string(switched_at) +
           " (crossing at sample " + std::to_string(first_over) + "), and back";
  return true;
}

// ---- 9. profiler-driven weight formulas match closed forms exactly ----

bool crit_formulas(Ctx &, std::string &detail) {
  const char *src = R"(
class C { int f; }
fn main(n) {
  var c = new C();
  var i = 0;
  while (i < n) {
    var x = i * 2;
    c.f = x;
    i = i + 1;
  }
  print(c.f);
}
entry main;)";
  Program p = normalize(parse(src));
  Workload w;
  w.calls.push_back({"main", {int64_t{100}}});
  Profile prof = profile_program(p, w);

  const Stmt *head = pyxtest::find_stmt(p, "main", NormKind::LoopHead);
  const Stmt *fw = pyxtest::find_stmt(p, "main", NormKind::FieldWrite);
  const Stmt *fr = pyxtest::find_stmt(p, "main", NormKind::FieldRead);
  uint64_t cnt_head = prof.count(head->id);
  uint64_t cnt_body = prof.count(head->body[0]->id);
  if (cnt_head != 101 || cnt_body != 100) {
    detail = "loop counts off: head " + std::to_string(cnt_head) + ", body " +
             std::to_string(cnt_body);
    return false;
  }

  DepAnalysis a = analyze(p);
  NetParams np;
  np.lat_ms = 2.0;
  np.bw_bytes_per_ms = 1000.0;
  PartitionGraph g = build_graph(p, a, prof, np);

  for (const auto &edge : g.edges) {
    if (!edge.weighted)
      continue;
    // cnt(e) = min of the statement endpoints' counts
    uint64_t cnt = edge_count(g, edge, prof);
    if (edge.src.kind == NodeId::Kind::Stmt && edge.dst.kind == NodeId::Kind::Stmt) {
      uint64_t want = std::min(prof.count(edge.src.index), prof.count(edge.dst.index));
      if (cnt != want) {
        detail = "cnt(e) formula broke";
        return false;
      }
    }
    if (edge.kind == EdgeKind::Control && edge.weight != np.lat_ms * static_cast<double>(cnt)) {
      detail = "control weight formula broke";
      return false;
    }
  }

  // hand-checked instances: control head->body, data def->use, update edge
  auto find_edge = [&](EdgeKind k, NodeId src, NodeId dst) -> const PGEdge * {
    for (const auto &edge : g.edges)
      if (edge.kind == k && edge.src == src && edge.dst == dst)
        return &edge;
    return nullptr;
  };
  const PGEdge *ctrl = find_edge(EdgeKind::Control, NodeId::stmt(head->id),
                                 NodeId::stmt(head->body[0]->id));
  if (!ctrl || ctrl->weight != 2.0 * 100.0) {
    detail = "control edge head->body is not LAT*cnt";
    return false;
  }
  const PGEdge *data = find_edge(EdgeKind::Data, NodeId::stmt(head->body[0]->id),
                                 NodeId::stmt(fw->id));
  if (!data || data->weight != 8.0 / 1000.0 * 100.0) {
    detail = "data edge def->use is not size/BW*cnt";
    return false;
  }
  int f_idx = field_index(p, "C", "f");
  const PGEdge *upd = find_edge(EdgeKind::Update, NodeId::field(f_idx),
                                NodeId::stmt(fw->id));
  if (!upd || upd->weight != 8.0 / 1000.0 * 100.0) {
    detail = "update edge is not size/BW*cnt(dst)";
    return false;
  }
  const PGEdge *read_data = find_edge(EdgeKind::Data, NodeId::stmt(fw->id),
                                      NodeId::stmt(fr->id));
  if (!read_data || read_data->weight != 8.0 / 1000.0 * 1.0) {
    detail = "field-read data edge is not size/BW*min(cnt)";
    return false;
  }
  detail = "cnt(e) and all four weight formulas equal their closed forms exactly";
  return true;
}

// ---- 10. block machinery overhead stays bounded ----

bool crit_overhead(Ctx &ctx, std::string &detail) {
  const CorpusEntry *e = nullptr;
  for (const auto &c : ctx.corpus)
    if (c.name == "linkedlist")
      e = &c;
  Workload w;
  w.calls.push_back({"main", {int64_t{2000}}});
  Profile prof = profile_program(e->program, w);
  Bundle local = partition_program(e->program, prof, 0, NetParams{}, "linkedlist").bundle;

  auto time_of = [](const std::function<void()> &fn) {
    double best = 1e300;
    for (int rep = 0; rep < 3; ++rep) {
      auto t0 = std::chrono::steady_clock::now();
      fn();
      best = std::min(best, std::chrono::duration<double>(
                                std::chrono::steady_clock::now() - t0)
                                .count());
    }
    return best;
  };

  OutputTrace ref, dist;
  double t_ref = time_of([&] { ref = run_reference(e->program, w); });
  SimConfig cfg;
  cfg.check_freshness = false; // measure the machinery, not the test probe
  double t_blocks = time_of([&] { dist = DualHostSim::run_workload(local, w, cfg); });
  if (dist.text() != ref.text()) {
    detail = "local block run diverged from the reference";
    return false;
  }
  double factor = t_blocks / t_ref;
  detail = "block execution factor " + format_double(factor) + "x the tree-walking interpreter";
  return factor <= 20.0;
}

} // namespace

int main(int argc, char **argv) {
  std::vector<Criterion> criteria = {
      {1, "semantic equivalence across corpus, budgets and workloads", crit_equivalence},
      {2, "solver optimality vs exhaustive oracle on 200 graphs", crit_ilp},
      {3, "budget 0 places everything on APP and stays the original", crit_budget0},
      {4, "micro2 budget ladder yields APP / split / DB with regime bests", crit_micro2},
      {5, "round-trip economy on new-order at N=100", crit_roundtrips},
      {6, "heap updates piggy-back on control transfers", crit_piggyback},
      {7, "reordering is legal and reduces alternations", crit_reorder},
      {8, "EWMA load switching follows the recurrence and threshold", crit_adaptive},
      {9, "profiler and weight formulas match closed forms", crit_formulas},
      {10, "local block-execution overhead is bounded", crit_overhead},
  };

  std::set<int> only;
  for (int i = 1; i < argc; ++i)
    only.insert(std::atoi(argv[i]));

  Ctx ctx;
  ctx.corpus.push_back(load_entry("neworder", "neworder.pyx", "neworder.workload"));
  ctx.corpus.push_back(load_entry("micro2", "micro2.pyx", "micro2.workload"));
  ctx.corpus.push_back(load_entry("linkedlist", "linkedlist.pyx", "linkedlist.workload"));
  for (int i = 1; i <= 20; ++i) {
    char name[16], prog[64], wl[64];
    std::snprintf(name, sizeof(name), "f%02d", i);
    std::snprintf(prog, sizeof(prog), "fuzz/f%02d.pyx", i);
    std::snprintf(wl, sizeof(wl), "fuzz/f%02d.workload", i);
    ctx.corpus.push_back(load_entry(name, prog, wl));
  }

  bool all_pass = true;
  for (auto &c : criteria) {
    if (!only.empty() && !only.count(c.id))
      continue;
    std::string detail;
    bool pass = false;
    try {
      pass = c.run(ctx, detail);
    } catch (const std::exception &ex) {
      detail = std::string("exception: ") + ex.what();
    }
    std::printf("%s  %2d. %s — %s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                detail.c_str());
    all_pass &= pass;
  }
  return all_pass ? 0 : 1;
}
