#ifndef PYX_RUNTIME_HPP
#define PYX_RUNTIME_HPP

#include "pyx/codegen.hpp"
#include "pyx/interp.hpp"

#include <functional>
#include <memory>

// Distributed runtime: two hosts execute one logical thread of control over
// execution blocks, sharing a stack replica and a split heap synchronized by
// eager batched updates that ride control-transfer messages. The channel is
// either a deterministic virtual-time simulation or real TCP sockets; the
// wire format is documented in docs/wire.md.

namespace pyx {

// ---- wire serialization ----

class WireWriter {
public:
  void u8(uint8_t v);
  void u16(uint16_t v);
  void u32(uint32_t v);
  void u64(uint64_t v);
  void f64(double v);
  void str(std::string_view s);
  void value(const Value &v); // tagged scalar or reference
  const std::string &bytes() const { return buf_; }
  std::string take() { return std::move(buf_); }

private:
  std::string buf_;
};

class WireReader {
public:
  explicit WireReader(std::string_view data) : data_(data) {}
  uint8_t u8();
  uint16_t u16();
  uint32_t u32();
  uint64_t u64();
  double f64();
  std::string str();
  Value value();
  bool done() const { return pos_ == data_.size(); }

private:
  std::string_view data_;
  size_t pos_ = 0;
  void need(size_t n) const;
};

// ---- artifact bundle ----

struct Bundle {
  std::string program_name;
  int64_t budget = 0;
  LoweredProgram prog;
  std::string pyxil_text;        // carried for inspection
  std::string placement_report;  // node -> host, cut edges, objective
  uint64_t hash = 0;             // over the canonical form, hash field zeroed

  std::string serialize() const; // canonical JSON, stable key order
  static Bundle deserialize(const std::string &text);
  static uint64_t compute_hash(const Bundle &b);
};

// ---- events and statistics ----

struct Event {
  enum class Kind : uint8_t {
    BlockStart, Send, Recv, SessionStart, SessionEnd, LoadSample, PartitionSwitch
  };
  Kind kind;
  double t_ms = 0; // virtual time (sim) or wall ms (tcp)
  Host host = Host::App;
  uint64_t a = 0, b = 0; // kind-specific (block id, bytes, ...)
  std::string detail;
};

struct EventLog {
  std::vector<Event> events;
  void add(Event e) { events.push_back(std::move(e)); }
  std::string dump() const;
  // no instant where both hosts run blocks of one session
  bool single_thread_of_control() const;
};

struct SessionStats {
  uint64_t transfers = 0;      // state-bearing messages, both directions
  uint64_t bytes_on_wire = 0;
  uint64_t app_ops = 0, db_ops = 0;
  double latency_ms = 0;       // virtual
  int bundle_used = 0;
};

// ---- load-driven partition selection ----

double ewma_update(double l_prev, double s_t, double alpha);

struct LoadTrace {
  std::vector<std::pair<double, double>> samples; // (t_ms, S_t percent)
  static LoadTrace parse(const std::string &text);
  std::string dump() const;
};

struct AdaptiveState {
  double alpha = 0.2;
  double threshold_pct = 40.0;
  double l = 0;
  bool initialized = false; // first sample seeds L
  size_t high_budget = 0, low_budget = 0; // bundle indices
  size_t next_sample = 0;

  // consume trace samples up to `now`; returns true if L changed
  bool advance(const LoadTrace &trace, double now_ms, EventLog *log);
  // choice applies at entry invocations only: L > threshold picks the
  // low-budget (APP-heavy) partition
  size_t choose(size_t bundle_count) const;
};

// ---- the dual-host simulator ----

struct SimConfig {
  NetParams net;
  double app_op_cost_ms = 0;
  double db_op_cost_ms = 0;
  bool check_freshness = true; // stale remote-cache read detection
  double poll_interval_ms = 100; // load trace cadence (virtual)
};

class DualHostSim {
public:
  DualHostSim(std::vector<const Bundle *> bundles, const MiniDb &db_init,
              SimConfig cfg);
  ~DualHostSim();

  void set_load_trace(LoadTrace trace, double alpha, double threshold_pct,
                      size_t high_budget_idx, size_t low_budget_idx);

  Value call_entry(const std::string &entry, const std::vector<Value> &args,
                   SessionStats *stats = nullptr);

  OutputTrace finish(); // print lines + final db state
  const EventLog &log() const;
  double now_ms() const;
  void advance_time(double ms); // inter-call virtual think time
  uint64_t stale_reads() const;
  uint64_t state_messages() const; // == control transfers across the run

  // convenience: run a whole workload on one bundle
  static OutputTrace run_workload(const Bundle &bundle, const Workload &w,
                                  const SimConfig &cfg, std::vector<SessionStats> *per_call = nullptr,
                                  EventLog *log_out = nullptr);

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// ---- TCP mode ----

struct TcpServerConfig {
  std::string listen_host = "127.0.0.1";
  uint16_t port = 0; // 0 = ephemeral
  const Bundle *bundle = nullptr;
  MiniDb db_init;
};

// Long-running DB host: accepts one client, serves sessions until BYE.
// Returns the bound port immediately via the promise-style callback.
class TcpDbHost {
public:
  TcpDbHost(TcpServerConfig cfg);
  ~TcpDbHost();
  uint16_t port() const;
  void wait();             // block until the client says BYE
  std::string final_db();  // canonical dump after shutdown

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// App-side TCP client: same execution semantics as the simulator, real
// sockets, no injected delays.
class TcpAppClient {
public:
  TcpAppClient(const std::string &host, uint16_t port, const Bundle &bundle);
  ~TcpAppClient();
  Value call_entry(const std::string &entry, const std::vector<Value> &args,
                   SessionStats *stats = nullptr);
  std::vector<std::string> prints() const;
  void bye();

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

} // namespace pyx

#endif
