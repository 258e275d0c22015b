#ifndef PYX_ANALYSIS_HPP
#define PYX_ANALYSIS_HPP

#include "pyx/frontend.hpp"
#include "pyx/interp.hpp"

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

// Static dependency analyses over normalized programs: allocation-site
// points-to, control dependencies, interprocedural def/use, heap update
// edges, and the anti/output ordering edges used by statement reordering.

namespace pyx {

struct NodeId {
  enum class Kind : uint8_t { Stmt, Field, DbCode, Console };
  Kind kind = Kind::Stmt;
  uint32_t index = 0; // statement id, or program-wide field index

  auto operator<=>(const NodeId &) const = default;

  static NodeId stmt(uint32_t id) { return NodeId{Kind::Stmt, id}; }
  static NodeId field(int idx) { return NodeId{Kind::Field, static_cast<uint32_t>(idx)}; }
  static NodeId db_code() { return NodeId{Kind::DbCode, 0}; }
  static NodeId console() { return NodeId{Kind::Console, 0}; }

  std::string str(const Program *p = nullptr) const;
  static NodeId parse(const std::string &text, const Program *p = nullptr);
};

enum class EdgeKind : uint8_t { Control, Data, Update, Anti, Output };

const char *edge_kind_name(EdgeKind k);

struct DepEdge {
  NodeId src, dst;
  EdgeKind kind = EdgeKind::Data;
  bool is_back_edge = false;
  bool is_interprocedural = false;

  auto operator<=>(const DepEdge &) const = default;
};

// Allocation-site, flow-insensitive points-to. Sites are the statement ids
// of alloc-array / alloc-object / result-producing query statements; site 0
// is the designated external site.
struct PointsToMap {
  static constexpr uint32_t kExternalSite = 0;

  std::map<std::pair<std::string, std::string>, std::set<uint32_t>> var_sites;
  std::map<int, std::set<uint32_t>> field_sites; // program-wide field index
  std::map<uint32_t, std::string> object_site_class;
  std::set<uint32_t> array_sites;

  // never-empty: falls back to {external}
  std::set<uint32_t> of_var(const std::string &func, const std::string &var) const;
  std::set<uint32_t> of_field(int field_index) const;
  // classes a variable may reference
  std::set<std::string> classes_of_var(const std::string &func,
                                       const std::string &var) const;
};

// Per-statement shape of a normalized statement, shared by the analyses and
// the code generator.
struct StmtInfo {
  const Stmt *stmt = nullptr;
  NormKind kind = NormKind::Assign;
  std::optional<std::string> def_var;
  std::vector<std::string> use_vars;
  std::string recv_var, field_name; // field read/write
  std::string array_var;            // array read/write/len, alloc target
  bool is_len = false;
  std::string alloc_class;                // alloc-object
  std::optional<QueryTemplate> query;     // query/exec
  std::string callee;                     // call
  const Expr *value_atom = nullptr;       // stored value (field/array write)
};

StmtInfo stmt_info(const Stmt &s);

// Transitive heap/db effects of calling a function, summarized at call sites.
struct Effects {
  std::set<int> field_reads, field_writes;
  std::set<uint32_t> array_reads, array_writes; // allocation sites
  std::set<std::string> table_reads, table_writes;
  bool prints = false;

  bool operator==(const Effects &) const = default;
};

// Structural index over a normalized program: statement lookup, enclosing
// function and loops, call sites (including entry-point pseudo-calls).
struct ProgramIndex {
  const Program *prog = nullptr;
  std::map<uint32_t, const Stmt *> stmts;
  std::map<uint32_t, std::string> func_of;
  std::map<uint32_t, std::vector<uint32_t>> loops_of; // innermost last
  std::map<std::string, std::vector<uint32_t>> call_sites;
  std::map<uint32_t, StmtInfo> info;
  std::set<uint32_t> entry_stmts;

  explicit ProgramIndex(const Program &p);

  bool same_function(uint32_t a, uint32_t b) const;
  bool in_common_loop(uint32_t a, uint32_t b) const;
  // positional rule: a same-function edge whose destination precedes its
  // source is a back edge
  void edge_flags(NodeId src, NodeId dst, DepEdge &e) const;
};

struct DepAnalysis {
  PointsToMap points_to;
  std::map<std::string, Effects> summaries;
  std::vector<DepEdge> edges; // sorted, deduplicated, all kinds
};

PointsToMap points_to(const Program &p);
std::map<std::string, Effects> function_summaries(const Program &p,
                                                  const PointsToMap &pt);

std::vector<DepEdge> control_deps(const Program &p);
std::vector<DepEdge> def_use(const Program &p, const PointsToMap &pt);
std::vector<DepEdge> update_edges(const Program &p, const PointsToMap &pt);
std::vector<DepEdge> order_edges(const Program &p, const PointsToMap &pt);

DepAnalysis analyze(const Program &p);

// One edge per line: kind, src, dst, flags. Golden-test surface and the
// standalone optimizer feed.
std::string dump_deps(const Program &p, const std::vector<DepEdge> &edges);

} // namespace pyx

#endif
