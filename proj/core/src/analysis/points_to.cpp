#include "pyx/analysis.hpp"

namespace pyx {

std::set<uint32_t> PointsToMap::of_var(const std::string &func,
                                       const std::string &var) const {
  auto it = var_sites.find({func, var});
  if (it == var_sites.end() || it->second.empty())
    return {kExternalSite};
  return it->second;
}

std::set<uint32_t> PointsToMap::of_field(int field_index) const {
  auto it = field_sites.find(field_index);
  if (it == field_sites.end() || it->second.empty())
    return {kExternalSite};
  return it->second;
}

std::set<std::string> PointsToMap::classes_of_var(const std::string &func,
                                                  const std::string &var) const {
  std::set<std::string> out;
  for (uint32_t s : of_var(func, var)) {
    auto it = object_site_class.find(s);
    if (it != object_site_class.end())
      out.insert(it->second);
  }
  return out;
}

namespace {

// Flow-insensitive subset constraints solved by iterating to a fixpoint.
// Field loads/stores route through per-(class, field) sets; the receiver's
// current site set decides which class sets participate, so constraints grow
// as the solution grows, which the outer loop absorbs.
class PointsToSolver {
public:
  explicit PointsToSolver(const Program &p) : prog_(p) {}

  PointsToMap run() {
    for (const auto &f : prog_.functions)
      for_each_stmt(f.body, [&](const Stmt &s) { seed(f, s); });
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto &f : prog_.functions)
        for_each_stmt(f.body, [&](const Stmt &s) { changed |= apply(f, s); });
    }
    return std::move(map_);
  }

private:
  const Program &prog_;
  PointsToMap map_;

  std::set<uint32_t> &var(const std::string &func, const std::string &v) {
    return map_.var_sites[{func, v}];
  }

  static bool merge(std::set<uint32_t> &dst, const std::set<uint32_t> &src) {
    size_t before = dst.size();
    dst.insert(src.begin(), src.end());
    return dst.size() != before;
  }

  void seed(const FuncDecl &f, const Stmt &s) {
    StmtInfo si = stmt_info(s);
    switch (si.kind) {
    case NormKind::AllocArray:
      map_.array_sites.insert(s.id);
      var(f.name, *si.def_var).insert(s.id);
      break;
    case NormKind::AllocObject:
      map_.object_site_class[s.id] = si.alloc_class;
      var(f.name, *si.def_var).insert(s.id);
      break;
    case NormKind::Query:
      if (si.def_var) {
        map_.array_sites.insert(s.id); // rowsets are arrays allocated here
        var(f.name, *si.def_var).insert(s.id);
      }
      break;
    default:
      break;
    }
  }

  bool apply(const FuncDecl &f, const Stmt &s) {
    StmtInfo si = stmt_info(s);
    bool ch = false;
    switch (si.kind) {
    case NormKind::Assign:
      // only straight copies move references; operators yield scalars
      if (si.def_var && s.expr->kind == Expr::Kind::Var)
        ch |= merge(var(f.name, *si.def_var), var(f.name, s.expr->name));
      break;
    case NormKind::FieldRead: {
      for (const auto &cls : map_.classes_of_var(f.name, si.recv_var)) {
        int idx = field_index(prog_, cls, si.field_name);
        if (idx >= 0)
          ch |= merge(var(f.name, *si.def_var), map_.field_sites[idx]);
      }
      break;
    }
    case NormKind::FieldWrite: {
      if (si.value_atom && si.value_atom->kind == Expr::Kind::Var) {
        for (const auto &cls : map_.classes_of_var(f.name, si.recv_var)) {
          int idx = field_index(prog_, cls, si.field_name);
          if (idx >= 0)
            ch |= merge(map_.field_sites[idx],
                        var(f.name, si.value_atom->name));
        }
      }
      break;
    }
    case NormKind::Call: {
      const FuncDecl *callee = prog_.find_function(si.callee);
      if (!callee)
        break;
      const Expr *call = s.expr.get();
      for (size_t i = 0; i < call->args.size() && i < callee->params.size(); ++i)
        if (call->args[i]->kind == Expr::Kind::Var)
          ch |= merge(var(callee->name, callee->params[i]),
                      var(f.name, call->args[i]->name));
      if (si.def_var)
        ch |= merge(var(f.name, *si.def_var), var(callee->name, "$return"));
      break;
    }
    case NormKind::Return:
      if (s.expr && s.expr->kind == Expr::Kind::Var)
        ch |= merge(var(f.name, "$return"), var(f.name, s.expr->name));
      break;
    default:
      break;
    }
    return ch;
  }
};

} // namespace

PointsToMap points_to(const Program &p) { return PointsToSolver(p).run(); }

} // namespace pyx
