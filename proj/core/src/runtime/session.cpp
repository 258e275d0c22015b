#include "engine.hpp"

// In-process dual-host simulator. One OS thread drives both host engines;
// activity alternates at control transfers, which makes the single thread of
// control structural. The virtual clock charges LAT + bytes/BW per message
// and a configurable per-micro-op cost per host.

namespace pyx {

using rt::HostEngine;
using rt::kHaltBlock;

struct DualHostSim::Impl {
  SimConfig cfg;
  std::vector<const Bundle *> bundles;
  MiniDb db;
  std::vector<std::string> console;
  EventLog log;
  rt::VersionTruth truth;
  double clock = 0;
  uint64_t run_next_object = 1;
  uint64_t state_messages = 0;
  uint32_t session_seq = 0;

  bool adaptive = false;
  LoadTrace trace;
  AdaptiveState astate;
  std::optional<size_t> last_choice;

  Impl(std::vector<const Bundle *> bs, const MiniDb &db_init, SimConfig c)
      : cfg(std::move(c)), bundles(std::move(bs)), db(db_init) {
    if (bundles.empty())
      throw Diag("config", "no bundle loaded");
    for (const Bundle *b : bundles)
      if (Bundle::compute_hash(*b) != b->hash)
        throw Diag("session", "artifact hash mismatch for bundle of " + b->program_name);
  }

  double op_cost(Host h) const {
    return h == Host::App ? cfg.app_op_cost_ms : cfg.db_op_cost_ms;
  }

  Value call_entry(const std::string &entry, const std::vector<Value> &args,
                   SessionStats *stats) {
    if (adaptive)
      astate.advance(trace, clock, &log);
    size_t choice = adaptive ? astate.choose(bundles.size()) : 0;
    if (adaptive && (!last_choice || *last_choice != choice)) {
      if (last_choice) {
        Event e;
        e.kind = Event::Kind::PartitionSwitch;
        e.t_ms = clock;
        e.host = Host::App;
        e.a = choice;
        e.detail = "L=" + format_double(astate.l);
        log.add(std::move(e));
      }
      last_choice = choice;
    }
    const Bundle &bundle = *bundles[choice];

    const EntryWrapper *wrapper = nullptr;
    for (const auto &w : bundle.prog.wrappers)
      if (w.func == entry)
        wrapper = &w;
    if (!wrapper)
      throw Diag("session", "no entry point '" + entry + "' in the artifact");

    HostEngine app(Host::App, bundle);
    HostEngine dbe(Host::Db, bundle);
    app.set_console(&console);
    dbe.set_db(&db);
    if (cfg.check_freshness) {
      app.set_truth(&truth);
      dbe.set_truth(&truth);
    }

    uint32_t session_id = ++session_seq;
    double t0 = clock;
    SessionStats local{};
    local.bundle_used = static_cast<int>(choice);

    {
      Event e;
      e.kind = Event::Kind::SessionStart;
      e.t_ms = clock;
      e.host = Host::App;
      e.a = session_id;
      e.detail = entry;
      log.add(std::move(e));
    }

    app.start_session(*wrapper, args, run_next_object);
    HostEngine *active = &app;
    HostEngine *peer = &dbe;
    uint32_t cur = wrapper->entry_block;
    uint64_t app_ops0 = app.ops_executed, db_ops0 = dbe.ops_executed;

    auto transfer = [&](uint32_t next_block) {
      std::string payload = active->build_transfer(next_block);
      uint64_t frame_bytes = payload.size() + 24; // header, see docs/wire.md
      clock += cfg.net.lat_ms +
               static_cast<double>(frame_bytes) / cfg.net.bw_bytes_per_ms;
      ++state_messages;
      ++local.transfers;
      local.bytes_on_wire += frame_bytes;
      Event s;
      s.kind = Event::Kind::Send;
      s.t_ms = clock;
      s.host = active->host();
      s.a = session_id;
      s.b = frame_bytes;
      log.add(std::move(s));
      uint32_t n = peer->apply_transfer(payload);
      Event r;
      r.kind = Event::Kind::Recv;
      r.t_ms = clock;
      r.host = peer->host();
      r.a = session_id;
      r.b = n;
      log.add(std::move(r));
      std::swap(active, peer);
      return n;
    };

    while (true) {
      if (cur == kHaltBlock) {
        if (active->host() == Host::Db) {
          // the session result and any pending updates return to APP
          cur = transfer(kHaltBlock);
          continue;
        }
        break;
      }
      if (cur >= bundle.prog.blocks.size())
        throw Diag("session", "unknown block id " + std::to_string(cur) +
                                  " (artifact version mismatch)");
      const ExecutionBlock &blk = bundle.prog.blocks[cur];
      if (blk.host != active->host()) {
        cur = transfer(cur);
        continue;
      }
      Event e;
      e.kind = Event::Kind::BlockStart;
      e.t_ms = clock;
      e.host = active->host();
      e.a = session_id;
      e.b = cur;
      log.add(std::move(e));
      clock += static_cast<double>(blk.ops.size()) * op_cost(active->host());
      cur = active->exec_block(blk);
    }

    run_next_object = app.next_object_id();
    local.app_ops = app.ops_executed - app_ops0;
    local.db_ops = dbe.ops_executed - db_ops0;
    local.latency_ms = clock - t0;
    {
      Event e;
      e.kind = Event::Kind::SessionEnd;
      e.t_ms = clock;
      e.host = Host::App;
      e.a = session_id;
      log.add(std::move(e));
    }
    if (stats)
      *stats = local;
    return app.result();
  }
};

DualHostSim::DualHostSim(std::vector<const Bundle *> bundles, const MiniDb &db_init,
                         SimConfig cfg)
    : impl_(std::make_unique<Impl>(std::move(bundles), db_init, std::move(cfg))) {}

DualHostSim::~DualHostSim() = default;

void DualHostSim::set_load_trace(LoadTrace trace, double alpha, double threshold_pct,
                                 size_t high_budget_idx, size_t low_budget_idx) {
  impl_->adaptive = true;
  impl_->trace = std::move(trace);
  impl_->astate.alpha = alpha;
  impl_->astate.threshold_pct = threshold_pct;
  impl_->astate.high_budget = high_budget_idx;
  impl_->astate.low_budget = low_budget_idx;
}

Value DualHostSim::call_entry(const std::string &entry, const std::vector<Value> &args,
                              SessionStats *stats) {
  return impl_->call_entry(entry, args, stats);
}

OutputTrace DualHostSim::finish() {
  OutputTrace t;
  t.prints = impl_->console;
  t.final_db = impl_->db.dump();
  return t;
}

const EventLog &DualHostSim::log() const { return impl_->log; }
double DualHostSim::now_ms() const { return impl_->clock; }
void DualHostSim::advance_time(double ms) { impl_->clock += ms; }
uint64_t DualHostSim::stale_reads() const { return impl_->truth.stale_reads; }
uint64_t DualHostSim::state_messages() const { return impl_->state_messages; }

OutputTrace DualHostSim::run_workload(const Bundle &bundle, const Workload &w,
                                      const SimConfig &cfg,
                                      std::vector<SessionStats> *per_call,
                                      EventLog *log_out) {
  DualHostSim sim({&bundle}, w.db_init, cfg);
  for (const auto &call : w.calls) {
    SessionStats st;
    sim.call_entry(call.entry, call.args, &st);
    if (per_call)
      per_call->push_back(st);
  }
  if (sim.stale_reads() != 0)
    throw Diag("session", "stale remote-cache reads detected: " +
                              std::to_string(sim.stale_reads()));
  OutputTrace t = sim.finish();
  if (log_out)
    *log_out = sim.log();
  return t;
}

} // namespace pyx
