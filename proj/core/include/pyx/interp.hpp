#ifndef PYX_INTERP_HPP
#define PYX_INTERP_HPP

#include "pyx/frontend.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <variant>
#include <vector>

// Reference interpreter (the semantic oracle), the deterministic in-memory
// mini database behind query()/exec(), and the instrumented profiler that
// produces statement execution counts and mean assigned-value sizes.

namespace pyx {

struct Ref {
  ValueKind kind = ValueKind::ObjectRef; // ObjectRef or ArrayRef
  uint64_t id = 0;                       // 0 = null
  auto operator<=>(const Ref &) const = default;
};

using Value = std::variant<int64_t, double, bool, std::string, Ref>;

inline bool is_null(const Value &v) {
  const Ref *r = std::get_if<Ref>(&v);
  return r && r->id == 0;
}

std::string value_to_text(const Value &v); // deterministic display form
ValueKind kind_of(const Value &v);

// Value semantics shared by the reference interpreter and the block engine:
// 64-bit wrapping integers, IEEE doubles, int-to-float store coercion. All
// throw Diag("runtime", ...) without a statement id; callers attach one.
Value eval_binary(BinOp op, const Value &a, const Value &b);
Value eval_unary(UnOp op, const Value &v);
bool value_truthy(const Value &v);
Value coerce_store_value(const Value &v, ValueKind want, const std::string &what);
Value default_value_for(const TypeRef &t);
Value default_scalar_value(ValueKind k);

// Wire-format size of a value: fixed-width numerics, length-prefixed
// strings; refs are 8 bytes plus, for arrays (sendNative-class values), the
// serialized payload. Shared with the runtime serializer so profiled sizes
// equal shipped sizes.
struct Heap;
uint64_t wire_size(const Value &v, const Heap *heap);

struct ArrayObj {
  uint64_t id = 0;
  ValueKind elem = ValueKind::Int;
  std::vector<Value> data;
  uint32_t alloc_site = 0; // statement id of the allocating alloc/query stmt
};

struct HeapObject {
  uint64_t id = 0;
  std::string cls;
  std::map<std::string, Value> fields;
  uint32_t alloc_site = 0;
};

struct Heap {
  std::map<uint64_t, ArrayObj> arrays;
  std::map<uint64_t, HeapObject> objects;
  uint64_t next_id = 1;

  ArrayObj &array(uint64_t id);
  const ArrayObj *array_if(uint64_t id) const;
  HeapObject &object(uint64_t id);
};

// ---- mini database ----

struct Table {
  std::vector<std::pair<std::string, ValueKind>> cols;
  std::vector<std::vector<Value>> rows;
  int col_index(const std::string &name) const;
};

// Query template language (documented in docs/workloads.md):
//   get TABLE KEYCOL=? RESULTCOL      key lookup, returns RESULTCOL values
//   scan TABLE KEYCOL=?..? RESULTCOL  inclusive range scan
//   insert TABLE                      args are one full row
//   update TABLE KEYCOL=? SETCOL=?    in-place update of matching rows
struct QueryTemplate {
  enum class Op : uint8_t { Get, Scan, Insert, Update } op;
  std::string table, key_col, result_col, set_col;
  unsigned arg_count() const;
  bool reads() const { return op == Op::Get || op == Op::Scan || op == Op::Update; }
  bool writes() const { return op == Op::Insert || op == Op::Update; }
};

QueryTemplate parse_query_template(const std::string &text);

class MiniDb {
public:
  std::map<std::string, Table> tables;

  // returns a rowset for get/scan, nullopt for insert/update; `touched`
  // receives the matched (or inserted) row indices when provided
  std::optional<std::vector<Value>> run(const QueryTemplate &q,
                                        const std::vector<Value> &args,
                                        ValueKind *result_kind = nullptr,
                                        std::vector<size_t> *touched = nullptr);
  std::string dump() const; // canonical text form, part of the output trace
};

// ---- workload ----

struct WorkloadCall {
  std::string entry;
  std::vector<Value> args;
};

struct Workload {
  uint64_t seed = 0;
  MiniDb db_init;
  std::vector<WorkloadCall> calls;
};

Workload parse_workload(const std::string &text, const std::string &filename = "<workload>");
std::string dump_workload(const Workload &w);

// ---- traces and profiles ----

struct OutputTrace {
  std::vector<std::string> prints;
  std::string final_db;
  std::string text() const; // canonical: print lines then db dump
  bool operator==(const OutputTrace &) const = default;
};

// Mean sizes kept as exact (total bytes, samples) pairs; mean() divides on
// demand so weight arithmetic stays a rational of measured integers.
struct SizeStat {
  uint64_t total = 0;
  uint64_t samples = 0;
  double mean() const { return samples ? static_cast<double>(total) / static_cast<double>(samples) : 0.0; }
};

struct Profile {
  std::map<uint32_t, uint64_t> stmt_count;
  std::map<uint32_t, SizeStat> def_size;

  uint64_t count(uint32_t stmt) const;
  bool has(uint32_t stmt) const { return stmt_count.count(stmt) != 0; }
  std::string serialize() const;
  static Profile deserialize(const std::string &text);
};

// Dynamically observed def->use pairs, for the soundness check against the
// static data edges. Defs are attributed the way the static analysis models
// them: parameter/return bindings belong to the call statement, never-written
// locations to their declaration or allocation site.
struct DynPair {
  // def < 0 encodes a field-node def: -(field_index+1); see analysis.hpp
  int64_t def;
  uint32_t use;
  auto operator<=>(const DynPair &) const = default;
};

struct RunOptions {
  bool profile = false;
  bool record_def_use = false;
  uint64_t max_steps = 50'000'000; // runaway-loop guard
};

struct RunResult {
  OutputTrace trace;
  Profile profile;
  std::set<DynPair> def_use_pairs;
};

RunResult run_program(const Program &p, const Workload &w, const RunOptions &opts);

// the two spec-level entry points
OutputTrace run_reference(const Program &p, const Workload &w);
Profile profile_program(const Program &p, const Workload &w);

} // namespace pyx

#endif
