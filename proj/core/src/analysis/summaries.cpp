#include "pyx/analysis.hpp"

namespace pyx {

StmtInfo stmt_info(const Stmt &s) {
  StmtInfo si;
  si.stmt = &s;
  si.kind = norm_kind(s);
  auto use_atom = [&](const Expr *e) {
    if (e && e->kind == Expr::Kind::Var)
      si.use_vars.push_back(e->name);
  };
  switch (si.kind) {
  case NormKind::Assign: {
    si.def_var = s.lhs->name;
    const Expr &rhs = *s.expr;
    if (rhs.kind == Expr::Kind::Binary) {
      use_atom(rhs.a.get());
      use_atom(rhs.b.get());
    } else if (rhs.kind == Expr::Kind::Unary) {
      use_atom(rhs.a.get());
    } else {
      use_atom(&rhs);
    }
    break;
  }
  case NormKind::FieldRead:
    si.def_var = s.lhs->name;
    si.recv_var = s.expr->a->name;
    si.field_name = s.expr->name;
    si.use_vars.push_back(si.recv_var);
    break;
  case NormKind::FieldWrite:
    si.recv_var = s.lhs->a->name;
    si.field_name = s.lhs->name;
    si.use_vars.push_back(si.recv_var);
    si.value_atom = s.expr.get();
    use_atom(s.expr.get());
    break;
  case NormKind::ArrayRead:
    si.def_var = s.lhs->name;
    if (s.expr->kind == Expr::Kind::Len) {
      si.is_len = true;
      si.array_var = s.expr->a->name;
      si.use_vars.push_back(si.array_var);
    } else {
      si.array_var = s.expr->a->name;
      si.use_vars.push_back(si.array_var);
      use_atom(s.expr->b.get());
    }
    break;
  case NormKind::ArrayWrite:
    si.array_var = s.lhs->a->name;
    si.use_vars.push_back(si.array_var);
    use_atom(s.lhs->b.get());
    si.value_atom = s.expr.get();
    use_atom(s.expr.get());
    break;
  case NormKind::AllocArray:
    si.def_var = s.lhs->name;
    si.array_var = s.lhs->name;
    use_atom(s.expr->a.get());
    break;
  case NormKind::AllocObject:
    si.def_var = s.lhs->name;
    si.alloc_class = s.expr->name;
    break;
  case NormKind::Call: {
    if (s.kind == Stmt::Kind::Assign)
      si.def_var = s.lhs->name;
    si.callee = s.expr->name;
    for (const auto &a : s.expr->args)
      use_atom(a.get());
    break;
  }
  case NormKind::Query: {
    if (s.kind == Stmt::Kind::Assign)
      si.def_var = s.lhs->name;
    si.query = parse_query_template(s.expr->str_val);
    for (const auto &a : s.expr->args)
      use_atom(a.get());
    break;
  }
  case NormKind::Print:
    for (const auto &a : s.args)
      use_atom(a.get());
    break;
  case NormKind::IfHead:
  case NormKind::LoopHead:
    use_atom(s.expr.get());
    break;
  case NormKind::Return:
    use_atom(s.expr.get());
    break;
  }
  return si;
}

ProgramIndex::ProgramIndex(const Program &p) : prog(&p) {
  for (const auto &f : p.functions) {
    std::vector<uint32_t> loop_stack;
    std::function<void(const std::vector<StmtPtr> &)> walk =
        [&](const std::vector<StmtPtr> &body) {
          for (const auto &sp : body) {
            const Stmt &s = *sp;
            if (s.kind == Stmt::Kind::While) {
              loop_stack.push_back(s.id);
              // prelude and the head itself belong to the loop
              walk(s.cond_prelude);
              stmts[s.id] = &s;
              func_of[s.id] = f.name;
              loops_of[s.id] = loop_stack;
              info.emplace(s.id, stmt_info(s));
              walk(s.body);
              loop_stack.pop_back();
              continue;
            }
            stmts[s.id] = &s;
            func_of[s.id] = f.name;
            loops_of[s.id] = loop_stack;
            info.emplace(s.id, stmt_info(s));
            if (norm_kind(s) == NormKind::Call)
              call_sites[s.expr->name].push_back(s.id);
            walk(s.body);
            walk(s.else_body);
          }
        };
    walk(f.body);
  }
  // loop heads are also call sites? no — but entry points are
  for (const auto &e : p.entry_points) {
    call_sites[e.func].push_back(e.stmt_id);
    entry_stmts.insert(e.stmt_id);
  }
  // while heads may contain calls? no: heads only test a variable. done.
}

bool ProgramIndex::same_function(uint32_t a, uint32_t b) const {
  auto ia = func_of.find(a), ib = func_of.find(b);
  return ia != func_of.end() && ib != func_of.end() && ia->second == ib->second;
}

bool ProgramIndex::in_common_loop(uint32_t a, uint32_t b) const {
  auto ia = loops_of.find(a), ib = loops_of.find(b);
  if (ia == loops_of.end() || ib == loops_of.end())
    return false;
  for (uint32_t la : ia->second)
    for (uint32_t lb : ib->second)
      if (la == lb)
        return true;
  return false;
}

void ProgramIndex::edge_flags(NodeId src, NodeId dst, DepEdge &e) const {
  e.is_back_edge = false;
  e.is_interprocedural = false;
  if (src.kind != NodeId::Kind::Stmt || dst.kind != NodeId::Kind::Stmt)
    return;
  bool src_entry = entry_stmts.count(src.index) != 0;
  bool dst_entry = entry_stmts.count(dst.index) != 0;
  if (src_entry || dst_entry) {
    e.is_interprocedural = true;
    return;
  }
  if (!same_function(src.index, dst.index)) {
    e.is_interprocedural = true;
    return;
  }
  if (dst.index <= src.index)
    e.is_back_edge = true;
}

namespace {

bool merge_effects(Effects &dst, const Effects &src) {
  auto m = [](auto &d, const auto &s) {
    size_t before = d.size();
    d.insert(s.begin(), s.end());
    return d.size() != before;
  };
  bool ch = false;
  ch |= m(dst.field_reads, src.field_reads);
  ch |= m(dst.field_writes, src.field_writes);
  ch |= m(dst.array_reads, src.array_reads);
  ch |= m(dst.array_writes, src.array_writes);
  ch |= m(dst.table_reads, src.table_reads);
  ch |= m(dst.table_writes, src.table_writes);
  if (src.prints && !dst.prints) {
    dst.prints = true;
    ch = true;
  }
  return ch;
}

std::set<int> candidate_fields(const Program &p, const PointsToMap &pt,
                               const std::string &func, const std::string &recv,
                               const std::string &field) {
  std::set<int> out;
  for (const auto &cls : pt.classes_of_var(func, recv)) {
    int idx = field_index(p, cls, field);
    if (idx >= 0)
      out.insert(idx);
  }
  return out;
}

} // namespace

std::map<std::string, Effects> function_summaries(const Program &p,
                                                  const PointsToMap &pt) {
  std::map<std::string, Effects> sums;
  for (const auto &f : p.functions)
    sums[f.name] = Effects{};
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto &f : p.functions) {
      Effects &eff = sums[f.name];
      for_each_stmt(f.body, [&](const Stmt &s) {
        StmtInfo si = stmt_info(s);
        Effects local;
        switch (si.kind) {
        case NormKind::FieldRead:
          local.field_reads = candidate_fields(p, pt, f.name, si.recv_var, si.field_name);
          break;
        case NormKind::FieldWrite:
          local.field_writes = candidate_fields(p, pt, f.name, si.recv_var, si.field_name);
          break;
        case NormKind::ArrayRead:
          local.array_reads = pt.of_var(f.name, si.array_var);
          break;
        case NormKind::ArrayWrite:
          local.array_writes = pt.of_var(f.name, si.array_var);
          break;
        case NormKind::AllocArray:
          local.array_writes.insert(s.id); // the default fill
          break;
        case NormKind::Query:
          if (si.query->reads())
            local.table_reads.insert(si.query->table);
          if (si.query->writes())
            local.table_writes.insert(si.query->table);
          if (si.def_var)
            local.array_writes.insert(s.id); // rowset materialization
          break;
        case NormKind::Call: {
          auto it = sums.find(si.callee);
          if (it != sums.end())
            local = it->second;
          break;
        }
        case NormKind::Print:
          local.prints = true;
          break;
        default:
          break;
        }
        changed |= merge_effects(eff, local);
      });
    }
  }
  return sums;
}

} // namespace pyx
