#include "pyx/codegen.hpp"

#include <algorithm>
#include <deque>

// Two-queue topological reordering per straight-line region. A region is a
// maximal run of simple statements inside one statement list; if/loop heads
// and returns break regions. Within a region, ready statements drain from
// the current host's FIFO queue until it empties, then execution switches
// queues, which greedily minimizes placement alternations. Back edges and
// interprocedural edges are ignored; loop structure enforces them at run
// time.

namespace pyx {

namespace {

bool is_region_breaker(const Stmt &s) {
  return s.kind == Stmt::Kind::If || s.kind == Stmt::Kind::While ||
         s.kind == Stmt::Kind::Return;
}

class Reorderer {
public:
  Reorderer(const PlacedGraph &pg, const Program &p) : pg_(pg), prog_(p) {
    for (const auto &e : pg.graph.edges) {
      if (e.is_back_edge || e.is_interprocedural)
        continue;
      if (e.src.kind != NodeId::Kind::Stmt || e.dst.kind != NodeId::Kind::Stmt)
        continue;
      deps_[e.src.index].push_back(e.dst.index);
    }
  }

  Program run() {
    Program out = prog_.clone();
    for (auto &f : out.functions)
      reorder_body(f.body);
    return out;
  }

private:
  const PlacedGraph &pg_;
  const Program &prog_;
  std::map<uint32_t, std::vector<uint32_t>> deps_; // src -> dsts (forward)

  Host host_of(const Stmt &s) const { return pg_.host_of(NodeId::stmt(s.id)); }

  void reorder_body(std::vector<StmtPtr> &body) {
    // recurse first, then permute the runs at this level
    for (auto &s : body) {
      reorder_body(s->cond_prelude);
      reorder_body(s->body);
      reorder_body(s->else_body);
    }
    size_t i = 0;
    while (i < body.size()) {
      if (is_region_breaker(*body[i])) {
        ++i;
        continue;
      }
      size_t j = i;
      while (j < body.size() && !is_region_breaker(*body[j]))
        ++j;
      if (j - i > 1)
        reorder_region(body, i, j);
      i = j;
    }
  }

  void reorder_region(std::vector<StmtPtr> &body, size_t lo, size_t hi) {
    size_t n = hi - lo;
    std::map<uint32_t, size_t> pos; // stmt id -> region slot
    for (size_t k = 0; k < n; ++k)
      pos[body[lo + k]->id] = k;

    std::vector<int> indeg(n, 0);
    std::vector<std::vector<size_t>> succ(n);
    for (size_t k = 0; k < n; ++k) {
      uint32_t id = body[lo + k]->id;
      auto it = deps_.find(id);
      if (it == deps_.end())
        continue;
      for (uint32_t dst : it->second) {
        auto p = pos.find(dst);
        if (p == pos.end() || p->second == k)
          continue;
        succ[k].push_back(p->second);
        ++indeg[p->second];
      }
    }

    // FIFO per host, seeded in original statement order
    std::deque<size_t> queue[2];
    auto host_idx = [&](size_t k) {
      return host_of(*body[lo + k]) == Host::Db ? 1 : 0;
    };
    for (size_t k = 0; k < n; ++k)
      if (indeg[k] == 0)
        queue[host_idx(k)].push_back(k);

    int current = -1; // start with the host of the first ready statement
    if (!queue[0].empty() && !queue[1].empty())
      current = queue[0].front() < queue[1].front() ? 0 : 1;
    else
      current = queue[0].empty() ? 1 : 0;

    std::vector<size_t> order;
    order.reserve(n);
    while (order.size() < n) {
      if (queue[current].empty()) {
        current ^= 1;
        if (queue[current].empty())
          throw Diag("internal",
                     "cycle among non-back edges in reorder region (analysis bug)");
      }
      size_t k = queue[current].front();
      queue[current].pop_front();
      order.push_back(k);
      // releases enqueue in original order for determinism
      std::vector<size_t> released;
      for (size_t d : succ[k])
        if (--indeg[d] == 0)
          released.push_back(d);
      std::sort(released.begin(), released.end());
      for (size_t d : released)
        queue[host_idx(d)].push_back(d);
    }

    std::vector<StmtPtr> tmp;
    tmp.reserve(n);
    for (size_t k : order)
      tmp.push_back(std::move(body[lo + k]));
    for (size_t k = 0; k < n; ++k)
      body[lo + k] = std::move(tmp[k]);
  }
};

// flattened emission order, the same order lowering walks
void flatten(const std::vector<StmtPtr> &body, std::vector<const Stmt *> &out) {
  for (const auto &s : body) {
    if (s->kind == Stmt::Kind::While) {
      flatten(s->cond_prelude, out);
      out.push_back(s.get());
      flatten(s->body, out);
      continue;
    }
    out.push_back(s.get());
    flatten(s->body, out);
    flatten(s->else_body, out);
  }
}

} // namespace

int count_alternations(const Program &p, const PlacedGraph &pg) {
  int total = 0;
  for (const auto &f : p.functions) {
    std::vector<const Stmt *> seq;
    flatten(f.body, seq);
    for (size_t i = 1; i < seq.size(); ++i)
      if (pg.host_of(NodeId::stmt(seq[i]->id)) !=
          pg.host_of(NodeId::stmt(seq[i - 1]->id)))
        ++total;
  }
  return total;
}

ReorderResult reorder(const PlacedGraph &pg, const Program &p) {
  ReorderResult out;
  out.alternations_before = count_alternations(p, pg);
  out.program = Reorderer(pg, p).run();
  out.alternations_after = count_alternations(out.program, pg);
  return out;
}

} // namespace pyx
