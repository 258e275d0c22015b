#ifndef PYX_GRAPH_HPP
#define PYX_GRAPH_HPP

#include "pyx/analysis.hpp"
#include "pyx/interp.hpp"

#include <optional>

// The partition graph: statement/field/pseudo nodes with execution-count
// weights, dependency edges priced in milliseconds from the profile and the
// network parameters. Anti/output edges ride along unweighted for the code
// generator.

namespace pyx {

enum class Host : uint8_t { App, Db };

inline const char *host_name(Host h) { return h == Host::App ? "APP" : "DB"; }

enum class PGNodeKind : uint8_t { Statement, Field, DbCode, Console };

const char *pg_node_kind_name(PGNodeKind k);

struct PGNode {
  NodeId id;
  PGNodeKind kind = PGNodeKind::Statement;
  uint64_t weight = 0; // cnt(s); zero for field and pseudo nodes
  std::optional<Host> pin;
  std::optional<int> colocate_group;
  std::string label;
};

struct PGEdge {
  uint32_t id = 0;
  NodeId src, dst;
  EdgeKind kind = EdgeKind::Data;
  bool weighted = false; // control/data/update carry weights; anti/output do not
  double weight = 0;     // milliseconds per profiled workload run
  bool is_back_edge = false;
  bool is_interprocedural = false;
};

struct NetParams {
  double lat_ms = 2.0;           // one-way latency charge per cut control edge
  double bw_bytes_per_ms = 1e6;  // bandwidth
};

struct PartitionGraph {
  std::vector<PGNode> nodes; // sorted by NodeId
  std::vector<PGEdge> edges; // sorted by (kind, src, dst); ids = position
  std::map<NodeId, size_t> index;

  const PGNode &node(NodeId id) const;
  PGNode &node(NodeId id);
  bool has_node(NodeId id) const { return index.count(id) != 0; }
  void rebuild_index();
};

// Nodes, edges, pins and the query co-location group; no weights yet.
PartitionGraph build_skeleton(const Program &p, const DepAnalysis &a);

// cnt(e) = min over the statement endpoints' execution counts; field and
// pseudo endpoints defer to the statement side.
uint64_t edge_count(const PartitionGraph &g, const PGEdge &e, const Profile &prof);

// Attach the cost-model weights: control LAT*cnt(e), data size(src)/BW*cnt(e),
// update size(src)/BW*cnt(dst); statement nodes weigh cnt(s).
PartitionGraph weigh(PartitionGraph skeleton, const Profile &prof, const NetParams &np);

PartitionGraph build_graph(const Program &p, const DepAnalysis &a,
                           const Profile &prof, const NetParams &np);

std::string dump_graph(const PartitionGraph &g, const Program *p = nullptr);
PartitionGraph parse_graph(const std::string &text);

} // namespace pyx

#endif
