#include "pyx/graph.hpp"

#include <algorithm>

namespace pyx {

const char *pg_node_kind_name(PGNodeKind k) {
  switch (k) {
  case PGNodeKind::Statement: return "stmt";
  case PGNodeKind::Field: return "field";
  case PGNodeKind::DbCode: return "db-code";
  case PGNodeKind::Console: return "console";
  }
  return "?";
}

const PGNode &PartitionGraph::node(NodeId id) const {
  auto it = index.find(id);
  if (it == index.end())
    throw Diag("graph", "unknown node " + id.str());
  return nodes[it->second];
}

PGNode &PartitionGraph::node(NodeId id) {
  auto it = index.find(id);
  if (it == index.end())
    throw Diag("graph", "unknown node " + id.str());
  return nodes[it->second];
}

void PartitionGraph::rebuild_index() {
  std::sort(nodes.begin(), nodes.end(),
            [](const PGNode &a, const PGNode &b) { return a.id < b.id; });
  std::sort(edges.begin(), edges.end(), [](const PGEdge &a, const PGEdge &b) {
    return std::tie(a.kind, a.src, a.dst) < std::tie(b.kind, b.src, b.dst);
  });
  index.clear();
  for (size_t i = 0; i < nodes.size(); ++i)
    index[nodes[i].id] = i;
  for (size_t i = 0; i < edges.size(); ++i)
    edges[i].id = static_cast<uint32_t>(i);
}

PartitionGraph build_skeleton(const Program &p, const DepAnalysis &a) {
  PartitionGraph g;
  ProgramIndex idx(p);

  for (const auto &[id, si] : idx.info) {
    PGNode n;
    n.id = NodeId::stmt(id);
    n.kind = PGNodeKind::Statement;
    n.label = idx.func_of.at(id) + ":" + norm_kind_name(si.kind);
    if (si.kind == NormKind::Print)
      n.pin = Host::App; // console output stays on the application server
    if (si.kind == NormKind::Query)
      n.colocate_group = 0; // all database API calls share one placement
    g.nodes.push_back(std::move(n));
  }
  for (const auto &e : p.entry_points) {
    // The wrapper invocation is a statement node like any other; it is not
    // pinned, so a query-heavy program can pull its whole body to DB while a
    // database-free one keeps it on APP. Sessions still begin on the
    // application host; the runtime pays that transfer regardless.
    PGNode n;
    n.id = NodeId::stmt(e.stmt_id);
    n.kind = PGNodeKind::Statement;
    n.label = "entry:" + e.func;
    g.nodes.push_back(std::move(n));
  }
  for (int i = 0; i < field_count(p); ++i) {
    PGNode n;
    n.id = NodeId::field(i);
    n.kind = PGNodeKind::Field;
    auto [cls, fld] = field_by_index(p, i);
    n.label = cls + "." + fld;
    g.nodes.push_back(std::move(n));
  }
  {
    PGNode db;
    db.id = NodeId::db_code();
    db.kind = PGNodeKind::DbCode;
    db.pin = Host::Db;
    db.label = "db-code";
    g.nodes.push_back(std::move(db));
    PGNode console;
    console.id = NodeId::console();
    console.kind = PGNodeKind::Console;
    console.pin = Host::App;
    console.label = "console";
    g.nodes.push_back(std::move(console));
  }

  for (const auto &de : a.edges) {
    PGEdge e;
    e.src = de.src;
    e.dst = de.dst;
    e.kind = de.kind;
    e.is_back_edge = de.is_back_edge;
    e.is_interprocedural = de.is_interprocedural;
    e.weighted = de.kind == EdgeKind::Control || de.kind == EdgeKind::Data ||
                 de.kind == EdgeKind::Update;
    g.edges.push_back(std::move(e));
  }

  g.rebuild_index();
  return g;
}

PartitionGraph build_graph(const Program &p, const DepAnalysis &a,
                           const Profile &prof, const NetParams &np) {
  return weigh(build_skeleton(p, a), prof, np);
}

} // namespace pyx
