#include "pyx/codegen.hpp"

#include <algorithm>

// Heap synchronization markers. A statement gets a send after it when the
// runtime must propagate its heap effect: its update edge is cut (it wrote
// data homed on the other host), or one of its outgoing data/update edges is
// cut (a remote statement observes the written or allocated data). Locals
// need no markers; the stack travels with every control transfer.

namespace pyx {

namespace {

void add_sync(std::map<uint32_t, std::vector<SyncOp>> &sync, uint32_t stmt,
              SyncOp op) {
  auto &v = sync[stmt];
  if (std::find(v.begin(), v.end(), op) == v.end())
    v.push_back(op);
}

} // namespace

PyxilProgram insert_sync(const PlacedGraph &pg, const ReorderResult &ordered) {
  PyxilProgram px;
  px.program = ordered.program.clone();
  const PartitionGraph &g = pg.graph;

  for (const auto &n : g.nodes) {
    if (n.kind == PGNodeKind::Statement)
      px.stmt_host[n.id.index] = pg.host_of(n.id);
    else if (n.kind == PGNodeKind::Field)
      px.field_host[static_cast<int>(n.id.index)] = pg.host_of(n.id);
  }
  // the co-location group's shared placement
  px.query_host = Host::Db;
  for (const auto &n : g.nodes)
    if (n.colocate_group) {
      px.query_host = pg.host_of(n.id);
      break;
    }

  // per statement: cut outgoing data/update edges, cut incoming update edge
  std::map<uint32_t, bool> out_cut, in_update_cut;
  for (const auto &e : g.edges) {
    if (!pg.is_cut(e))
      continue;
    if (e.src.kind == NodeId::Kind::Stmt &&
        (e.kind == EdgeKind::Data || e.kind == EdgeKind::Update))
      out_cut[e.src.index] = true;
    if (e.dst.kind == NodeId::Kind::Stmt && e.kind == EdgeKind::Update)
      in_update_cut[e.dst.index] = true;
  }

  ProgramIndex idx(px.program);
  for (const auto &[id, si] : idx.info) {
    bool needs = out_cut.count(id) || in_update_cut.count(id);
    if (!needs)
      continue;
    switch (si.kind) {
    case NormKind::FieldWrite: {
      // send the written field's home part of the receiver
      std::set<Host> homes;
      for (const auto &e : g.edges)
        if (e.kind == EdgeKind::Update && e.dst == NodeId::stmt(id) &&
            e.src.kind == NodeId::Kind::Field)
          homes.insert(px.field_host.at(static_cast<int>(e.src.index)));
      for (Host h : homes)
        add_sync(px.sync_after, id,
                 SyncOp{h == Host::App ? SyncOp::Kind::SendApp : SyncOp::Kind::SendDb,
                        si.recv_var});
      break;
    }
    case NormKind::ArrayWrite:
      add_sync(px.sync_after, id, SyncOp{SyncOp::Kind::SendNative, si.array_var});
      break;
    case NormKind::AllocArray:
      add_sync(px.sync_after, id, SyncOp{SyncOp::Kind::SendNative, si.array_var});
      break;
    case NormKind::Query:
      if (si.def_var) // a remotely read rowset ships like any other array
        add_sync(px.sync_after, id, SyncOp{SyncOp::Kind::SendNative, *si.def_var});
      break;
    default:
      break; // locals ride the stack
    }
  }
  return px;
}

} // namespace pyx
