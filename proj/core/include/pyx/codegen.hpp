#ifndef PYX_CODEGEN_HPP
#define PYX_CODEGEN_HPP

#include "pyx/optimizer.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

// From a placed graph to runnable form: statement reordering (two-queue
// topological sort per straight-line region), heap synchronization markers,
// the placement-annotated PyxIL text, and the lowering to per-host execution
// blocks over an explicit stack.

namespace pyx {

// ---- reordering ----

struct ReorderResult {
  Program program; // same statements, regions permuted
  int alternations_before = 0;
  int alternations_after = 0;
};

ReorderResult reorder(const PlacedGraph &pg, const Program &p);

// host alternations across the flattened emission order of every function
int count_alternations(const Program &p, const PlacedGraph &pg);

// ---- PyxIL ----

struct SyncOp {
  enum class Kind : uint8_t { SendApp, SendDb, SendNative } kind;
  std::string var; // receiver object or array variable

  bool operator==(const SyncOp &) const = default;
  bool operator<(const SyncOp &o) const {
    return std::tie(kind, var) < std::tie(o.kind, o.var);
  }
};

struct PyxilProgram {
  Program program; // normalized, reordered
  std::map<uint32_t, Host> stmt_host;
  std::map<int, Host> field_host;                 // program-wide field index
  std::map<uint32_t, std::vector<SyncOp>> sync_after;
  Host query_host = Host::Db; // placement of the database API co-location group

  Host host_of(const Stmt &s) const { return stmt_host.at(s.id); }
};

PyxilProgram insert_sync(const PlacedGraph &pg, const ReorderResult &ordered);

std::string emit_pyxil_text(const PyxilProgram &px);

// ---- execution blocks ----

struct Operand {
  bool is_const = false;
  Value const_val = int64_t{0};
  int slot = -1;

  static Operand constant(Value v) { return Operand{true, std::move(v), -1}; }
  static Operand of_slot(int s) { return Operand{false, int64_t{0}, s}; }
};

struct MicroOp {
  enum class Kind : uint8_t {
    Move,      // dst = a
    Bin,       // dst = a op b
    Un,        // dst = op a
    FieldLoad, // dst = obj.name
    FieldStore,// obj.name = a
    ArrLoad,   // dst = arr[a]
    ArrStore,  // arr[a] = b
    ArrLen,    // dst = len(arr)
    NewArr,    // dst = new elem[a]
    NewObj,    // dst = new name()
    Print,     // console(args...)
    Query,     // [dst =] query/exec(name = template, args...)
    SendApp,   // batch the APP part of obj
    SendDb,    // batch the DB part of obj
    SendNative,// batch array obj
    PopRet     // dst = return-value register
  };

  Kind kind = Kind::Move;
  uint32_t stmt_id = 0; // originating statement, for diagnostics and counters
  int dst = -1;
  int obj = -1; // receiver object / array slot
  Operand a, b;
  BinOp bin = BinOp::Add;
  UnOp un = UnOp::Neg;
  std::string name; // field, class, or query template
  ValueKind elem = ValueKind::Int;
  bool has_dst = false;
  std::vector<Operand> args;
};

struct Terminator {
  enum class Kind : uint8_t { Goto, Branch, Call, Ret, Halt } kind = Kind::Halt;
  uint32_t target = 0; // Goto target / Branch then-block
  uint32_t alt = 0;    // Branch else-block
  Operand cond;
  std::string callee;          // Call
  uint32_t ret_to = 0;         // Call continuation block
  std::vector<Operand> args;   // Call arguments
  Operand value;               // Ret value
  bool has_value = false;
};

struct ExecutionBlock {
  uint32_t id = 0;
  std::string name; // e.g. computeTotalCost2
  Host host = Host::App;
  std::vector<MicroOp> ops;
  Terminator term;
};

struct FuncLayout {
  std::string name;
  uint32_t entry_block = 0;
  uint32_t frame_size = 0;
  std::vector<std::string> slot_names; // params first, then locals
  int slot_of(const std::string &var) const;
};

struct SplitClassLayout {
  std::string cls;
  std::vector<FieldDecl> app_fields, db_fields;
};

struct EntryWrapper {
  std::string func;
  uint32_t entry_block = 0;
  size_t arg_count = 0;
};

struct LoweredProgram {
  std::vector<ExecutionBlock> blocks; // block id = index
  std::vector<FuncLayout> layouts;
  std::vector<SplitClassLayout> classes;
  std::vector<EntryWrapper> wrappers;

  const FuncLayout &layout(const std::string &func) const;
  const SplitClassLayout &cls(const std::string &name) const;
  std::string dump_blocks() const; // --dump-blocks surface
};

LoweredProgram lower(const PyxilProgram &px);

} // namespace pyx

#endif
