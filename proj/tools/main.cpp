// pyxpart: profile a DSL program against a workload, partition it across an
// application host and a database host under instruction budgets, inspect
// the intermediate artifacts, and execute the result on the dual-host
// runtime (simulated channel by default, TCP for real deployments).

#include "CLI11.hpp"

#include "pyx/driver.hpp"

#include <filesystem>
#include <iostream>
#include <sstream>

using namespace pyx;

namespace {

Program load_program(const std::string &path) {
  return normalize(parse(read_file(path), path));
}

struct NetArgs {
  double lat_ms = 2.0;
  double bw = 1e6;
  NetParams params() const { return NetParams{lat_ms, bw}; }
  void attach(CLI::App *cmd) {
    cmd->add_option("--lat", lat_ms, "one-way latency charge per transfer, ms");
    cmd->add_option("--bw", bw, "bandwidth, bytes per ms");
  }
};

std::string stem_of(const std::string &path) {
  return std::filesystem::path(path).stem().string();
}

struct BenchRow {
  std::string benchmark;
  std::string budget;
  double mean_latency_ms = 0;
  double throughput = 0; // calls per virtual second
  uint64_t transfers = 0;
  uint64_t bytes = 0;
  uint64_t db_ops = 0;
};

void print_bench_report(const std::vector<BenchRow> &rows, std::ostream &csv,
                        std::ostream &table) {
  csv << "benchmark,budget,mean_latency_ms,throughput_per_s,transfers,bytes,db_ops\n";
  table << "benchmark    budget   latency(ms)  thrpt(/s)  transfers      bytes     db-ops\n";
  for (const auto &r : rows) {
    csv << r.benchmark << ',' << r.budget << ',' << format_double(r.mean_latency_ms)
        << ',' << format_double(r.throughput) << ',' << r.transfers << ','
        << r.bytes << ',' << r.db_ops << '\n';
    char line[256];
    std::snprintf(line, sizeof(line), "%-12s %-8s %11.3f %10.2f %10llu %10llu %10llu\n",
                  r.benchmark.c_str(), r.budget.c_str(), r.mean_latency_ms,
                  r.throughput, static_cast<unsigned long long>(r.transfers),
                  static_cast<unsigned long long>(r.bytes),
                  static_cast<unsigned long long>(r.db_ops));
    table << line;
  }
}

BenchRow run_sim_workload(const Bundle &bundle, const Workload &w, const SimConfig &cfg,
                          const std::string &bench, const std::string &budget_name,
                          OutputTrace *trace_out) {
  std::vector<SessionStats> stats;
  OutputTrace t = DualHostSim::run_workload(bundle, w, cfg, &stats);
  BenchRow row;
  row.benchmark = bench;
  row.budget = budget_name;
  double total_latency = 0;
  for (const auto &s : stats) {
    total_latency += s.latency_ms;
    row.transfers += s.transfers;
    row.bytes += s.bytes_on_wire;
    row.db_ops += s.db_ops;
  }
  row.mean_latency_ms = stats.empty() ? 0 : total_latency / static_cast<double>(stats.size());
  row.throughput = total_latency > 0
                       ? static_cast<double>(stats.size()) * 1000.0 / total_latency
                       : 0;
  if (trace_out)
    *trace_out = t;
  return row;
}

int cmd_profile(const std::string &program_path, const std::string &workload_path,
                const std::string &out) {
  Program p = load_program(program_path);
  Workload w = parse_workload(read_file(workload_path), workload_path);
  Profile prof = profile_program(p, w);
  if (out.empty() || out == "-")
    std::cout << prof.serialize();
  else
    write_file(out, prof.serialize());
  return 0;
}

int cmd_partition(const std::string &program_path, const std::string &profile_path,
                  std::vector<std::string> budgets, const NetArgs &net,
                  const std::string &out_dir) {
  Program p = load_program(program_path);
  Profile prof = Profile::deserialize(read_file(profile_path));
  std::filesystem::create_directories(out_dir);
  std::string base = stem_of(program_path);
  for (const auto &btext : budgets) {
    int64_t budget = parse_budget(btext, p, prof);
    PartitionResult r = partition_program(p, prof, budget, net.params(), base);
    std::string prefix = out_dir + "/" + base + ".b" + btext;
    for (auto &c : prefix)
      if (c == '%')
        c = 'p';
    write_file(prefix + ".bundle", r.bundle.serialize());
    write_file(prefix + ".pyxil", r.bundle.pyxil_text);
    write_file(prefix + ".report", r.bundle.placement_report);
    std::cout << base << " budget " << btext << " (" << budget << "): objective "
              << format_double(r.placed.assignment.objective) << ", alternations "
              << r.reordered.alternations_before << " -> "
              << r.reordered.alternations_after << ", artifact " << prefix
              << ".bundle\n";
  }
  return 0;
}

int cmd_run(std::vector<std::string> bundle_paths, const std::string &workload_path,
            const std::string &channel, const std::string &connect,
            const NetArgs &net, const std::string &load_trace_path, double alpha,
            double threshold, double think_ms, const std::string &report_path,
            const std::string &events_path, bool print_db) {
  Workload w = parse_workload(read_file(workload_path), workload_path);
  if (channel == "tcp") {
    if (bundle_paths.size() != 1)
      throw Diag("config", "tcp mode runs exactly one bundle");
    auto colon = connect.find(':');
    if (colon == std::string::npos)
      throw Diag("config", "--connect takes host:port");
    Bundle b = Bundle::deserialize(read_file(bundle_paths[0]));
    TcpAppClient client(connect.substr(0, colon),
                        static_cast<uint16_t>(std::stoi(connect.substr(colon + 1))), b);
    for (const auto &call : w.calls)
      client.call_entry(call.entry, call.args);
    for (const auto &line : client.prints())
      std::cout << line << '\n';
    client.bye();
    return 0;
  }

  std::vector<Bundle> bundles;
  for (const auto &path : bundle_paths)
    bundles.push_back(Bundle::deserialize(read_file(path)));
  std::vector<const Bundle *> refs;
  for (const auto &b : bundles)
    refs.push_back(&b);

  SimConfig cfg;
  cfg.net = net.params();
  DualHostSim sim(refs, w.db_init, cfg);

  size_t low_idx = 0, high_idx = 0;
  if (!load_trace_path.empty()) {
    if (bundles.size() < 2)
      throw Diag("config", "adaptive runs take at least two bundles");
    for (size_t i = 1; i < bundles.size(); ++i) {
      if (bundles[i].budget < bundles[low_idx].budget)
        low_idx = i;
      if (bundles[i].budget > bundles[high_idx].budget)
        high_idx = i;
    }
    sim.set_load_trace(LoadTrace::parse(read_file(load_trace_path)), alpha, threshold,
                       high_idx, low_idx);
  }

  std::vector<SessionStats> stats;
  std::vector<double> call_times;
  for (const auto &call : w.calls) {
    call_times.push_back(sim.now_ms());
    SessionStats st;
    sim.call_entry(call.entry, call.args, &st);
    stats.push_back(st);
    if (think_ms > 0)
      sim.advance_time(think_ms);
  }
  OutputTrace t = sim.finish();
  for (const auto &line : t.prints)
    std::cout << line << '\n';
  if (print_db)
    std::cout << "-- db --\n" << t.final_db;
  if (!events_path.empty())
    write_file(events_path, sim.log().dump());

  if (!report_path.empty()) {
    std::ostringstream csv;
    csv << "call,bundle,latency_ms,transfers,bytes,app_ops,db_ops\n";
    for (size_t i = 0; i < stats.size(); ++i)
      csv << i << ',' << stats[i].bundle_used << ','
          << format_double(stats[i].latency_ms) << ',' << stats[i].transfers << ','
          << stats[i].bytes_on_wire << ',' << stats[i].app_ops << ','
          << stats[i].db_ops << '\n';
    if (!load_trace_path.empty()) {
      // share of calls executed on the low-budget partition, per window
      csv << "window_start_ms,low_budget_share\n";
      double window = 1000.0;
      size_t i = 0;
      double t0 = 0;
      while (i < stats.size()) {
        uint64_t total = 0, low = 0;
        while (i < stats.size() && call_times[i] < t0 + window) {
          ++total;
          if (static_cast<size_t>(stats[i].bundle_used) == low_idx)
            ++low;
          ++i;
        }
        if (total)
          csv << format_double(t0) << ','
              << format_double(static_cast<double>(low) / static_cast<double>(total))
              << '\n';
        t0 += window;
      }
    }
    write_file(report_path, csv.str());
  }
  return 0;
}

int cmd_serve(const std::string &listen, const std::string &bundle_path,
              const std::string &workload_path, const std::string &db_out) {
  auto colon = listen.find(':');
  if (colon == std::string::npos)
    throw Diag("config", "--listen takes host:port");
  Bundle b = Bundle::deserialize(read_file(bundle_path));
  TcpServerConfig cfg;
  cfg.listen_host = listen.substr(0, colon);
  cfg.port = static_cast<uint16_t>(std::stoi(listen.substr(colon + 1)));
  cfg.bundle = &b;
  if (!workload_path.empty())
    cfg.db_init = parse_workload(read_file(workload_path), workload_path).db_init;
  TcpDbHost host(std::move(cfg));
  std::cout << "serving DB host on port " << host.port() << '\n' << std::flush;
  host.wait();
  std::string dump = host.final_db();
  if (!db_out.empty())
    write_file(db_out, dump);
  else
    std::cout << "-- db --\n" << dump;
  return 0;
}

int cmd_bench(const std::string &corpus_dir, std::vector<std::string> budgets,
              const NetArgs &net, const std::string &report_path) {
  std::vector<BenchRow> rows;
  SimConfig cfg;
  cfg.net = net.params();
  for (const char *bench : {"neworder", "micro2", "linkedlist"}) {
    std::string prog_path = corpus_dir + "/" + std::string(bench) + ".pyx";
    std::string wl_path = corpus_dir + "/" + std::string(bench) + ".workload";
    Program p = load_program(prog_path);
    Workload w = parse_workload(read_file(wl_path), wl_path);
    Profile prof = profile_program(p, w);
    for (const auto &btext : budgets) {
      int64_t budget = parse_budget(btext, p, prof);
      Bundle b = partition_program(p, prof, budget, net.params(), bench).bundle;
      rows.push_back(run_sim_workload(b, w, cfg, bench, btext, nullptr));
    }
  }
  std::ostringstream csv, table;
  print_bench_report(rows, csv, table);
  std::cout << table.str();
  if (!report_path.empty())
    write_file(report_path, csv.str());
  return 0;
}

int cmd_dump_graph(const std::string &program_path, const std::string &profile_path,
                   const NetArgs &net, bool ast, bool deps, const std::string &lp) {
  Program p = load_program(program_path);
  if (ast) {
    std::cout << dump_ast(p);
    return 0;
  }
  DepAnalysis a = analyze(p);
  if (deps) {
    std::cout << dump_deps(p, a.edges);
    return 0;
  }
  if (profile_path.empty())
    throw Diag("config", "weighted graph dump needs --profile (or pass --deps/--ast)");
  Profile prof = Profile::deserialize(read_file(profile_path));
  PartitionGraph g = build_graph(p, a, prof, net.params());
  if (!lp.empty()) {
    std::cout << formulate(g, parse_budget(lp, p, prof)).dump_lp();
    return 0;
  }
  std::cout << dump_graph(g, &p);
  return 0;
}

int cmd_dump_blocks(const std::string &bundle_path) {
  Bundle b = Bundle::deserialize(read_file(bundle_path));
  std::cout << "bundle " << b.program_name << " budget " << b.budget << " hash "
            << b.hash << '\n';
  std::cout << b.prog.dump_blocks();
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"pyxpart: automatic program partitioning across an application "
               "host and a database host"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read defaults from a config file (INI/TOML; flags override)");

  auto *profile = app.add_subcommand("profile", "run a workload under the "
                                                "instrumented interpreter");
  std::string prof_program, prof_workload, prof_out;
  profile->add_option("program", prof_program)->required();
  profile->add_option("workload", prof_workload)->required();
  profile->add_option("-o,--out", prof_out, "profile output path (default stdout)");

  auto *partition = app.add_subcommand("partition", "solve placements and emit "
                                                    "artifact bundles per budget");
  std::string part_program, part_profile, part_out = ".";
  std::vector<std::string> part_budgets;
  NetArgs part_net;
  partition->add_option("program", part_program)->required();
  partition->add_option("--profile", part_profile)->required();
  partition->add_option("--budget", part_budgets, "budget list: N, N%, or inf")
      ->required()
      ->type_size(1)
      ->allow_extra_args(false);
  partition->add_option("-o,--out", part_out, "output directory");
  part_net.attach(partition);

  auto *run = app.add_subcommand("run", "execute a workload on the dual-host runtime");
  std::vector<std::string> run_bundles;
  std::string run_workload, run_channel = "sim", run_connect, run_trace, run_report;
  double run_alpha = 0.2, run_threshold = 40.0, run_think = 0;
  bool run_print_db = false;
  NetArgs run_net;
  run->add_option("--bundle", run_bundles, "artifact bundle(s)")
      ->required()
      ->type_size(1)
      ->allow_extra_args(false);
  run->add_option("workload", run_workload)->required();
  run->add_option("--channel", run_channel, "sim or tcp")
      ->check(CLI::IsMember({"sim", "tcp"}));
  run->add_option("--connect", run_connect, "tcp: DB host address host:port");
  run->add_option("--load-trace", run_trace, "scripted load trace (enables switching)");
  run->add_option("--alpha", run_alpha, "EWMA smoothing");
  run->add_option("--threshold", run_threshold, "load threshold percent");
  run->add_option("--think-ms", run_think, "virtual think time between calls");
  run->add_option("--report", run_report, "per-call CSV report path");
  std::string run_events;
  run->add_option("--events", run_events, "write the session event log here");
  run->add_flag("--print-db", run_print_db, "also print the final database state");
  run_net.attach(run);

  auto *serve = app.add_subcommand("serve", "long-running TCP DB host");
  std::string serve_listen = "127.0.0.1:7437", serve_bundle, serve_workload, serve_dbout;
  serve->add_option("--listen", serve_listen, "host:port");
  serve->add_option("--bundle", serve_bundle)->required();
  serve->add_option("--workload", serve_workload, "workload file for the initial tables");
  serve->add_option("--db-out", serve_dbout, "write the final database state here");

  auto *bench = app.add_subcommand("bench", "run the bundled benchmarks");
  std::string bench_corpus = "corpus", bench_report;
  std::vector<std::string> bench_budgets = {"0", "45%", "inf"};
  NetArgs bench_net;
  bench->add_option("--corpus", bench_corpus, "corpus directory");
  bench->add_option("--budget", bench_budgets, "budget list")
      ->type_size(1)
      ->allow_extra_args(false);
  bench->add_option("--report", bench_report, "CSV output path");
  bench_net.attach(bench);

  auto *dg = app.add_subcommand("dump-graph", "print the weighted partition graph");
  std::string dg_program, dg_profile;
  bool dg_ast = false, dg_deps = false;
  NetArgs dg_net;
  dg->add_option("program", dg_program)->required();
  dg->add_option("--profile", dg_profile, "profile file (for weights)");
  dg->add_flag("--ast", dg_ast, "print the normalized AST instead");
  dg->add_flag("--deps", dg_deps, "print unweighted dependency edges instead");
  std::string dg_lp;
  dg->add_option("--lp", dg_lp, "print the integer program for this budget instead");
  dg_net.attach(dg);

  auto *db = app.add_subcommand("dump-blocks", "print a bundle's execution blocks");
  std::string db_bundle;
  db->add_option("--bundle", db_bundle)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (profile->parsed())
      return cmd_profile(prof_program, prof_workload, prof_out);
    if (partition->parsed())
      return cmd_partition(part_program, part_profile, part_budgets, part_net, part_out);
    if (run->parsed())
      return cmd_run(run_bundles, run_workload, run_channel, run_connect, run_net,
                     run_trace, run_alpha, run_threshold, run_think, run_report,
                     run_events, run_print_db);
    if (serve->parsed())
      return cmd_serve(serve_listen, serve_bundle, serve_workload, serve_dbout);
    if (bench->parsed())
      return cmd_bench(bench_corpus, bench_budgets, bench_net, bench_report);
    if (dg->parsed())
      return cmd_dump_graph(dg_program, dg_profile, dg_net, dg_ast, dg_deps, dg_lp);
    if (db->parsed())
      return cmd_dump_blocks(db_bundle);
  } catch (const Diag &d) {
    std::cerr << d.render() << '\n';
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: internal: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
