#include "pyx/graph.hpp"

namespace pyx {

namespace {

uint64_t stmt_count_of(const Profile &prof, NodeId id) {
  return prof.count(id.index);
}

// Mean size written to a field: aggregated over the field's writers, which
// are exactly the destinations of its update edges.
double field_mean_size(const PartitionGraph &g, const Profile &prof, NodeId field) {
  uint64_t total = 0, samples = 0;
  for (const auto &e : g.edges) {
    if (e.kind != EdgeKind::Update || e.src != field)
      continue;
    auto it = prof.def_size.find(e.dst.index);
    if (it != prof.def_size.end()) {
      total += it->second.total;
      samples += it->second.samples;
    }
  }
  return samples ? static_cast<double>(total) / static_cast<double>(samples) : 0.0;
}

double stmt_mean_size(const Profile &prof, NodeId id) {
  auto it = prof.def_size.find(id.index);
  return it == prof.def_size.end() ? 0.0 : it->second.mean();
}

} // namespace

uint64_t edge_count(const PartitionGraph &g, const PGEdge &e, const Profile &prof) {
  (void)g;
  bool src_stmt = e.src.kind == NodeId::Kind::Stmt;
  bool dst_stmt = e.dst.kind == NodeId::Kind::Stmt;
  if (src_stmt && dst_stmt)
    return std::min(stmt_count_of(prof, e.src), stmt_count_of(prof, e.dst));
  if (src_stmt)
    return stmt_count_of(prof, e.src);
  if (dst_stmt)
    return stmt_count_of(prof, e.dst);
  return 0;
}

PartitionGraph weigh(PartitionGraph g, const Profile &prof, const NetParams &np) {
  if (np.bw_bytes_per_ms <= 0)
    throw Diag("config", "bandwidth must be positive");
  if (np.lat_ms < 0)
    throw Diag("config", "latency must be non-negative");

  for (auto &n : g.nodes) {
    if (n.kind == PGNodeKind::Statement) {
      if (!prof.has(n.id.index))
        throw Diag("profile", "no profile entry for statement").at_stmt(n.id.index);
      n.weight = prof.count(n.id.index);
    } else {
      n.weight = 0;
    }
  }

  for (auto &e : g.edges) {
    if (!e.weighted) {
      e.weight = 0;
      continue;
    }
    switch (e.kind) {
    case EdgeKind::Control:
      e.weight = np.lat_ms * static_cast<double>(edge_count(g, e, prof));
      break;
    case EdgeKind::Data: {
      double size = e.src.kind == NodeId::Kind::Field
                        ? field_mean_size(g, prof, e.src)
                        : stmt_mean_size(prof, e.src);
      e.weight = size / np.bw_bytes_per_ms * static_cast<double>(edge_count(g, e, prof));
      break;
    }
    case EdgeKind::Update: {
      double size = e.src.kind == NodeId::Kind::Field
                        ? field_mean_size(g, prof, e.src)
                        : stmt_mean_size(prof, e.src);
      e.weight = size / np.bw_bytes_per_ms * static_cast<double>(stmt_count_of(prof, e.dst));
      break;
    }
    default:
      e.weight = 0;
      break;
    }
  }
  return g;
}

} // namespace pyx
