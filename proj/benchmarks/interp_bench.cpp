#include <benchmark/benchmark.h>

#include "pyx/interp.hpp"

using namespace pyx;

namespace {

struct Loaded {
  Program program;
  Workload workload;
  Loaded(const char *prog, const char *wl)
      : program(normalize(parse(read_file(std::string(PYX_CORPUS_DIR) + "/" + prog)))),
        workload(parse_workload(read_file(std::string(PYX_CORPUS_DIR) + "/" + wl))) {}
};

} // namespace

static void bm_reference_interp(benchmark::State &state) {
  static Loaded l("neworder.pyx", "neworder.workload");
  for (auto _ : state) {
    OutputTrace t = run_reference(l.program, l.workload);
    benchmark::DoNotOptimize(t.prints.size());
  }
}
BENCHMARK(bm_reference_interp)->Unit(benchmark::kMicrosecond);

static void bm_profiled_interp(benchmark::State &state) {
  static Loaded l("neworder.pyx", "neworder.workload");
  for (auto _ : state) {
    Profile p = profile_program(l.program, l.workload);
    benchmark::DoNotOptimize(p.stmt_count.size());
  }
}
BENCHMARK(bm_profiled_interp)->Unit(benchmark::kMicrosecond);

static void bm_normalize(benchmark::State &state) {
  Program raw = parse(read_file(std::string(PYX_CORPUS_DIR) + "/micro2.pyx"));
  for (auto _ : state) {
    Program n = normalize(raw);
    benchmark::DoNotOptimize(n.next_stmt_id);
  }
}
BENCHMARK(bm_normalize)->Unit(benchmark::kMicrosecond);
