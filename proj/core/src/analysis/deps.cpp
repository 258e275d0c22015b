#include "pyx/analysis.hpp"

#include <algorithm>

namespace pyx {

namespace {

// Reaching-definition state for locals: var -> defining statement ids, with
// negative sentinels -(i+1) standing for "parameter i, bound at the call
// site".
using DefSet = std::set<int64_t>;
using State = std::map<std::string, DefSet>;

State join(const State &a, const State &b) {
  State out = a;
  for (const auto &[v, defs] : b)
    out[v].insert(defs.begin(), defs.end());
  return out;
}

class DepBuilder {
public:
  DepBuilder(const Program &p, const PointsToMap &pt)
      : prog_(p), pt_(pt), sums_(function_summaries(p, pt)), idx_(p) {}

  std::vector<DepEdge> control() {
    build_control();
    return take();
  }
  std::vector<DepEdge> data() {
    build_local_flow();
    build_heap_flow();
    build_summary_flow();
    return take();
  }
  std::vector<DepEdge> update() {
    build_update();
    return take();
  }
  std::vector<DepEdge> order() {
    build_order();
    return take();
  }

private:
  const Program &prog_;
  const PointsToMap &pt_;
  std::map<std::string, Effects> sums_;
  ProgramIndex idx_;
  std::set<DepEdge> edges_;

  std::vector<DepEdge> take() {
    std::vector<DepEdge> out(edges_.begin(), edges_.end());
    edges_.clear();
    return out;
  }

  void add(NodeId src, NodeId dst, EdgeKind kind, bool force_interproc = false) {
    DepEdge e;
    e.src = src;
    e.dst = dst;
    e.kind = kind;
    idx_.edge_flags(src, dst, e);
    if (force_interproc) {
      e.is_interprocedural = true;
      e.is_back_edge = false;
    }
    edges_.insert(e);
  }

  // ---- control dependencies ----

  void build_control() {
    for (const auto &f : prog_.functions) {
      // immediate governing heads
      for_each_stmt(f.body, [&](const Stmt &s) {
        if (s.kind == Stmt::Kind::If) {
          for (const auto &c : s.body)
            add(NodeId::stmt(s.id), NodeId::stmt(c->id), EdgeKind::Control);
          for (const auto &c : s.else_body)
            add(NodeId::stmt(s.id), NodeId::stmt(c->id), EdgeKind::Control);
        } else if (s.kind == Stmt::Kind::While) {
          for (const auto &c : s.body)
            add(NodeId::stmt(s.id), NodeId::stmt(c->id), EdgeKind::Control);
          for (const auto &c : s.cond_prelude)
            add(NodeId::stmt(s.id), NodeId::stmt(c->id), EdgeKind::Control);
        }
      });
      // every statement of a callee body depends on each of its call sites
      auto cs = idx_.call_sites.find(f.name);
      if (cs != idx_.call_sites.end()) {
        for_each_stmt(f.body, [&](const Stmt &s) {
          for (uint32_t site : cs->second)
            add(NodeId::stmt(site), NodeId::stmt(s.id), EdgeKind::Control,
                /*force_interproc=*/true);
        });
      }
      // database / console pseudo-node edges
      for_each_stmt(f.body, [&](const Stmt &s) {
        NormKind k = norm_kind(s);
        if (k == NormKind::Query)
          add(NodeId::stmt(s.id), NodeId::db_code(), EdgeKind::Control);
        else if (k == NormKind::Print)
          add(NodeId::stmt(s.id), NodeId::console(), EdgeKind::Control);
      });
    }
  }

  // ---- local def/use (flow-sensitive per function) ----

  void record_uses(const std::string &func, const Stmt &s, const State &st) {
    const StmtInfo &si = idx_.info.at(s.id);
    for (const auto &u : si.use_vars) {
      auto it = st.find(u);
      if (it == st.end())
        continue;
      for (int64_t d : it->second) {
        if (d > 0) {
          add(NodeId::stmt(static_cast<uint32_t>(d)), NodeId::stmt(s.id),
              EdgeKind::Data);
        } else {
          auto cs = idx_.call_sites.find(func);
          if (cs != idx_.call_sites.end())
            for (uint32_t site : cs->second)
              add(NodeId::stmt(site), NodeId::stmt(s.id), EdgeKind::Data,
                  /*force_interproc=*/true);
        }
      }
    }
  }

  State flow_stmt(const std::string &func, const Stmt &s, State st, bool record) {
    switch (s.kind) {
    case Stmt::Kind::If: {
      if (record)
        record_uses(func, s, st);
      State t = flow_block(func, s.body, st, record);
      State e = flow_block(func, s.else_body, st, record);
      return join(t, e);
    }
    case Stmt::Kind::While: {
      State loop_in = st;
      while (true) {
        State after_prelude = flow_block(func, s.cond_prelude, loop_in, false);
        State after_body = flow_block(func, s.body, after_prelude, false);
        State merged = join(loop_in, after_body);
        if (merged == loop_in)
          break;
        loop_in = std::move(merged);
      }
      State after_prelude = flow_block(func, s.cond_prelude, loop_in, record);
      if (record)
        record_uses(func, s, after_prelude);
      flow_block(func, s.body, after_prelude, record);
      return after_prelude; // exit: test evaluated and failed
    }
    default: {
      if (record)
        record_uses(func, s, st);
      const StmtInfo &si = idx_.info.at(s.id);
      if (si.def_var)
        st[*si.def_var] = DefSet{static_cast<int64_t>(s.id)};
      return st;
    }
    }
  }

  State flow_block(const std::string &func, const std::vector<StmtPtr> &body, State st,
                   bool record) {
    for (const auto &s : body)
      st = flow_stmt(func, *s, std::move(st), record);
    return st;
  }

  void build_local_flow() {
    for (const auto &f : prog_.functions) {
      State st;
      for (size_t i = 0; i < f.params.size(); ++i)
        st[f.params[i]] = DefSet{-(static_cast<int64_t>(i) + 1)};
      flow_block(f.name, f.body, std::move(st), true);
    }
  }

  // ---- heap and table flow (flow-insensitive, program-wide) ----

  std::set<int> fields_of(const std::string &func, const StmtInfo &si) const {
    std::set<int> out;
    for (const auto &cls : pt_.classes_of_var(func, si.recv_var)) {
      int idx = field_index(prog_, cls, si.field_name);
      if (idx >= 0)
        out.insert(idx);
    }
    return out;
  }

  void build_heap_flow() {
    std::map<int, std::vector<uint32_t>> field_writers;
    std::map<int, std::vector<uint32_t>> field_readers;
    std::vector<std::pair<uint32_t, std::set<uint32_t>>> array_writers;
    std::vector<std::pair<uint32_t, std::set<uint32_t>>> array_readers;
    std::map<std::string, std::vector<uint32_t>> table_writers, table_readers;

    for (const auto &[id, si] : idx_.info) {
      const std::string &func = idx_.func_of.at(id);
      switch (si.kind) {
      case NormKind::FieldRead:
        for (int fi : fields_of(func, si))
          field_readers[fi].push_back(id);
        break;
      case NormKind::FieldWrite:
        for (int fi : fields_of(func, si))
          field_writers[fi].push_back(id);
        break;
      case NormKind::ArrayRead:
        array_readers.emplace_back(id, pt_.of_var(func, si.array_var));
        break;
      case NormKind::ArrayWrite:
        array_writers.emplace_back(id, pt_.of_var(func, si.array_var));
        break;
      case NormKind::Query:
        if (si.query->reads())
          table_readers[si.query->table].push_back(id);
        if (si.query->writes())
          table_writers[si.query->table].push_back(id);
        break;
      default:
        break;
      }
    }

    for (const auto &[fi, readers] : field_readers) {
      auto w = field_writers.find(fi);
      for (uint32_t r : readers) {
        // the declaration's default value may reach any read that precedes
        // the object's first write
        add(NodeId::field(fi), NodeId::stmt(r), EdgeKind::Data);
        if (w != field_writers.end())
          for (uint32_t wr : w->second)
            add(NodeId::stmt(wr), NodeId::stmt(r), EdgeKind::Data);
      }
    }

    for (const auto &[r, rsites] : array_readers) {
      for (uint32_t s : rsites)
        if (s != PointsToMap::kExternalSite)
          add(NodeId::stmt(s), NodeId::stmt(r), EdgeKind::Data); // initial contents
      for (const auto &[w, wsites] : array_writers) {
        bool alias = std::any_of(rsites.begin(), rsites.end(), [&](uint32_t s) {
          return wsites.count(s) != 0;
        });
        if (alias && w != r)
          add(NodeId::stmt(w), NodeId::stmt(r), EdgeKind::Data);
      }
    }

    for (const auto &[table, readers] : table_readers) {
      auto w = table_writers.find(table);
      if (w == table_writers.end())
        continue;
      for (uint32_t r : readers)
        for (uint32_t wr : w->second)
          if (wr != r)
            add(NodeId::stmt(wr), NodeId::stmt(r), EdgeKind::Data);
    }
  }

  // ---- effect sets, including call summaries ----

  struct Access {
    std::set<std::string> local_reads, local_writes;
    std::set<int> field_reads, field_writes;
    std::set<uint32_t> array_reads, array_writes;
    std::set<std::string> table_reads, table_writes;
    bool console = false;
  };

  Access access_of(const std::string &func, const StmtInfo &si) const {
    Access a;
    for (const auto &u : si.use_vars)
      a.local_reads.insert(u);
    if (si.def_var)
      a.local_writes.insert(*si.def_var);
    switch (si.kind) {
    case NormKind::FieldRead:
      a.field_reads = fields_of(func, si);
      break;
    case NormKind::FieldWrite:
      a.field_writes = fields_of(func, si);
      break;
    case NormKind::ArrayRead:
      a.array_reads = pt_.of_var(func, si.array_var);
      break;
    case NormKind::ArrayWrite:
      a.array_writes = pt_.of_var(func, si.array_var);
      break;
    case NormKind::AllocArray:
      a.array_writes.insert(si.stmt->id);
      break;
    case NormKind::Query:
      if (si.query->reads())
        a.table_reads.insert(si.query->table);
      if (si.query->writes())
        a.table_writes.insert(si.query->table);
      if (si.def_var)
        a.array_writes.insert(si.stmt->id);
      break;
    case NormKind::Print:
      a.console = true;
      break;
    case NormKind::Call: {
      auto it = sums_.find(si.callee);
      if (it != sums_.end()) {
        const Effects &e = it->second;
        a.field_reads.insert(e.field_reads.begin(), e.field_reads.end());
        a.field_writes.insert(e.field_writes.begin(), e.field_writes.end());
        a.array_reads.insert(e.array_reads.begin(), e.array_reads.end());
        a.array_writes.insert(e.array_writes.begin(), e.array_writes.end());
        a.table_reads.insert(e.table_reads.begin(), e.table_reads.end());
        a.table_writes.insert(e.table_writes.begin(), e.table_writes.end());
        a.console |= e.prints;
      }
      break;
    }
    default:
      break;
    }
    return a;
  }

  template <typename T>
  static bool intersects(const std::set<T> &a, const std::set<T> &b) {
    for (const auto &x : a)
      if (b.count(x))
        return true;
    return false;
  }

  static bool heap_overlap_wr(const Access &w, const Access &r) {
    return intersects(w.field_writes, r.field_reads) ||
           intersects(w.array_writes, r.array_reads) ||
           intersects(w.table_writes, r.table_reads);
  }

  static bool overlap_rw(const Access &a, const Access &b) { // read then write
    return intersects(a.local_reads, b.local_writes) ||
           intersects(a.field_reads, b.field_writes) ||
           intersects(a.array_reads, b.array_writes) ||
           intersects(a.table_reads, b.table_writes);
  }

  static bool overlap_ww(const Access &a, const Access &b) {
    return intersects(a.local_writes, b.local_writes) ||
           intersects(a.field_writes, b.field_writes) ||
           intersects(a.array_writes, b.array_writes) ||
           intersects(a.table_writes, b.table_writes) || (a.console && b.console);
  }

  std::map<std::string, std::vector<uint32_t>> stmts_by_function() const {
    std::map<std::string, std::vector<uint32_t>> out;
    for (const auto &[id, func] : idx_.func_of)
      out[func].push_back(id); // map order => ascending ids
    return out;
  }

  // Write-then-read pairs that only the call summaries expose; emitted as
  // data edges so both the solver and the reorderer see them.
  void build_summary_flow() {
    for (const auto &[func, ids] : stmts_by_function()) {
      std::vector<Access> acc;
      acc.reserve(ids.size());
      for (uint32_t id : ids)
        acc.push_back(access_of(func, idx_.info.at(id)));
      for (size_t i = 0; i < ids.size(); ++i)
        for (size_t j = 0; j < ids.size(); ++j) {
          if (i == j)
            continue;
          bool involves_call = idx_.info.at(ids[i]).kind == NormKind::Call ||
                               idx_.info.at(ids[j]).kind == NormKind::Call;
          if (involves_call && heap_overlap_wr(acc[i], acc[j]))
            add(NodeId::stmt(ids[i]), NodeId::stmt(ids[j]), EdgeKind::Data);
        }
    }
  }

  void build_order() {
    for (const auto &[func, ids] : stmts_by_function()) {
      std::vector<Access> acc;
      acc.reserve(ids.size());
      for (uint32_t id : ids)
        acc.push_back(access_of(func, idx_.info.at(id)));
      for (size_t i = 0; i < ids.size(); ++i)
        for (size_t j = i + 1; j < ids.size(); ++j) {
          if (overlap_rw(acc[i], acc[j]))
            add(NodeId::stmt(ids[i]), NodeId::stmt(ids[j]), EdgeKind::Anti);
          if (overlap_ww(acc[i], acc[j]))
            add(NodeId::stmt(ids[i]), NodeId::stmt(ids[j]), EdgeKind::Output);
        }
    }
  }

  // ---- update edges ----

  void build_update() {
    for (const auto &[id, si] : idx_.info) {
      const std::string &func = idx_.func_of.at(id);
      if (si.kind == NormKind::FieldWrite) {
        for (int fi : fields_of(func, si))
          add(NodeId::field(fi), NodeId::stmt(id), EdgeKind::Update);
      } else if (si.kind == NormKind::ArrayWrite) {
        for (uint32_t s : pt_.of_var(func, si.array_var))
          if (s != PointsToMap::kExternalSite)
            add(NodeId::stmt(s), NodeId::stmt(id), EdgeKind::Update);
      }
    }
  }
};

} // namespace

std::vector<DepEdge> control_deps(const Program &p) {
  PointsToMap pt = points_to(p);
  return DepBuilder(p, pt).control();
}

std::vector<DepEdge> def_use(const Program &p, const PointsToMap &pt) {
  return DepBuilder(p, pt).data();
}

std::vector<DepEdge> update_edges(const Program &p, const PointsToMap &pt) {
  return DepBuilder(p, pt).update();
}

std::vector<DepEdge> order_edges(const Program &p, const PointsToMap &pt) {
  return DepBuilder(p, pt).order();
}

DepAnalysis analyze(const Program &p) {
  DepAnalysis out;
  out.points_to = points_to(p);
  out.summaries = function_summaries(p, out.points_to);
  DepBuilder b(p, out.points_to);
  std::set<DepEdge> all;
  for (auto &&v : {b.control(), b.data(), b.update(), b.order()})
    all.insert(v.begin(), v.end());
  out.edges.assign(all.begin(), all.end());
  return out;
}

} // namespace pyx
