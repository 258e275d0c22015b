#ifndef PYX_RUNTIME_ENGINE_HPP
#define PYX_RUNTIME_ENGINE_HPP

#include "pyx/runtime.hpp"

#include <set>

// Internal block-execution engine shared by the simulator and the TCP hosts.
// One HostEngine per host per session: it owns this host's heap view and
// stack replica and produces/consumes control-transfer payloads.

namespace pyx::rt {

constexpr uint32_t kHaltBlock = 0xffffffffu;

struct ObjPart {
  std::vector<Value> fields; // order of the part's field list in the layout
  uint64_t version = 0;
};

struct ArrState {
  ValueKind elem = ValueKind::Int;
  Host home = Host::App;
  std::vector<Value> data;
  uint64_t version = 0;
};

struct HeapView {
  std::map<std::pair<uint64_t, uint8_t>, ObjPart> parts; // (id, 0=APP/1=DB)
  std::map<uint64_t, ArrState> arrays;
  std::map<uint64_t, std::string> obj_class;
};

struct Frame {
  std::string func;
  std::vector<Value> slots;
  uint32_t return_pc = kHaltBlock;
};

struct PendingSend {
  uint8_t kind; // 0 = APP part, 1 = DB part, 2 = native array
  uint64_t id;
  auto operator<=>(const PendingSend &) const = default;
};

// Shared truth for stale-read detection in simulated runs.
struct VersionTruth {
  std::map<std::pair<uint64_t, uint8_t>, uint64_t> parts;
  std::map<uint64_t, uint64_t> arrays;
  uint64_t stale_reads = 0;
};

class HostEngine {
public:
  HostEngine(Host host, const Bundle &bundle) : host_(host), bundle_(&bundle) {}

  Host host() const { return host_; }
  void set_db(MiniDb *db) { db_ = db; }
  void set_console(std::vector<std::string> *console) { console_ = console; }
  void set_truth(VersionTruth *truth) { truth_ = truth; }

  uint64_t ops_executed = 0;

  // session lifecycle (App side)
  void start_session(const EntryWrapper &w, const std::vector<Value> &args,
                     uint64_t next_object_id);
  Value result() const { return retval_; }
  uint64_t next_object_id() const { return next_object_id_; }
  bool batch_empty() const { return batch_.empty(); }

  // runs one block, returns the successor block id (kHaltBlock ends the session)
  uint32_t exec_block(const ExecutionBlock &b);

  // control-transfer payloads (docs/wire.md)
  std::string build_transfer(uint32_t next_block);
  uint32_t apply_transfer(const std::string &payload);

private:
  Host host_;
  const Bundle *bundle_;
  MiniDb *db_ = nullptr;
  std::vector<std::string> *console_ = nullptr;
  VersionTruth *truth_ = nullptr;

  HeapView heap_;
  std::vector<Frame> stack_;
  Value retval_ = Ref{ValueKind::ObjectRef, 0};
  uint64_t next_object_id_ = 1;
  size_t synced_depth_ = 0;
  std::set<std::pair<uint32_t, uint32_t>> dirty_slots_;
  std::vector<PendingSend> batch_;
  std::set<uint64_t> new_objects_;
  uint32_t cur_stmt_ = 0;

  [[noreturn]] void fail(const std::string &msg) const;

  Frame &frame();
  Value load(const Operand &o);
  void store_slot(int slot, Value v);

  uint8_t part_of_field(const std::string &cls, const std::string &field,
                        const FieldDecl **decl, size_t *index) const;
  ObjPart &materialize_part(uint64_t id, uint8_t part);
  void mark_dirty(PendingSend s);

  void exec_op(const MicroOp &op);
};

} // namespace pyx::rt

#endif
