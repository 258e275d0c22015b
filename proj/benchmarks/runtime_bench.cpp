#include <benchmark/benchmark.h>

#include "pyx/driver.hpp"

using namespace pyx;

namespace {

struct Prepared {
  Program program;
  Workload workload;
  Bundle bundle;
  Prepared(const char *prog, const char *wl, bool db_heavy)
      : program(normalize(parse(read_file(std::string(PYX_CORPUS_DIR) + "/" + prog)))),
        workload(parse_workload(read_file(std::string(PYX_CORPUS_DIR) + "/" + wl))) {
    Profile prof = profile_program(program, workload);
    int64_t budget = db_heavy ? total_statement_weight(prof, program) : 0;
    bundle = partition_program(program, prof, budget, NetParams{}, prog).bundle;
  }
};

} // namespace

static void bm_sim_session_app_only(benchmark::State &state) {
  static Prepared p("neworder.pyx", "neworder.workload", false);
  SimConfig cfg;
  cfg.check_freshness = false;
  for (auto _ : state) {
    OutputTrace t = DualHostSim::run_workload(p.bundle, p.workload, cfg);
    benchmark::DoNotOptimize(t.prints.size());
  }
}
BENCHMARK(bm_sim_session_app_only)->Unit(benchmark::kMicrosecond);

static void bm_sim_session_db_heavy(benchmark::State &state) {
  static Prepared p("neworder.pyx", "neworder.workload", true);
  SimConfig cfg;
  cfg.check_freshness = false;
  for (auto _ : state) {
    OutputTrace t = DualHostSim::run_workload(p.bundle, p.workload, cfg);
    benchmark::DoNotOptimize(t.prints.size());
  }
}
BENCHMARK(bm_sim_session_db_heavy)->Unit(benchmark::kMicrosecond);

static void bm_partition_pipeline(benchmark::State &state) {
  static Prepared p("neworder.pyx", "neworder.workload", true);
  Profile prof = profile_program(p.program, p.workload);
  for (auto _ : state) {
    Bundle b = partition_program(p.program, prof, 35, NetParams{}, "bench").bundle;
    benchmark::DoNotOptimize(b.hash);
  }
}
BENCHMARK(bm_partition_pipeline)->Unit(benchmark::kMillisecond);
