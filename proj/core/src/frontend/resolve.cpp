#include "pyx/frontend.hpp"

#include <set>

namespace pyx {

namespace {

class Resolver {
public:
  explicit Resolver(const Program &p) : prog_(p) {}

  void run() {
    std::set<std::string> class_names, func_names;
    for (const auto &c : prog_.classes) {
      if (!class_names.insert(c.name).second)
        throw Diag("duplicate", "class '" + c.name + "' declared twice", c.loc);
      std::set<std::string> fields;
      for (const auto &f : c.fields) {
        if (!fields.insert(f.name).second)
          throw Diag("duplicate",
                     "field '" + f.name + "' declared twice in class " + c.name, f.loc);
        if (f.type.kind == ValueKind::ObjectRef && !prog_.find_class(f.type.class_name))
          throw Diag("unknown", "unknown class '" + f.type.class_name + "'", f.loc);
      }
    }
    for (const auto &f : prog_.functions) {
      if (!func_names.insert(f.name).second)
        throw Diag("duplicate", "function '" + f.name + "' declared twice", f.loc);
      if (class_names.count(f.name))
        throw Diag("duplicate", "name '" + f.name + "' used for class and function", f.loc);
    }
    std::set<std::string> entries;
    for (const auto &e : prog_.entry_points) {
      if (!prog_.find_function(e.func))
        throw Diag("unknown", "entry point names unknown function '" + e.func + "'");
      if (!entries.insert(e.func).second)
        throw Diag("duplicate", "entry point '" + e.func + "' declared twice");
    }
    for (const auto &f : prog_.functions)
      check_function(f);
  }

private:
  const Program &prog_;
  std::vector<std::set<std::string>> scopes_;

  bool is_declared(const std::string &name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it)
      if (it->count(name))
        return true;
    return false;
  }

  void declare(const std::string &name, const SourceLoc &loc) {
    if (scopes_.back().count(name))
      throw Diag("duplicate", "variable '" + name + "' declared twice in scope", loc);
    scopes_.back().insert(name);
  }

  void check_function(const FuncDecl &f) {
    scopes_.clear();
    scopes_.emplace_back();
    std::set<std::string> params;
    for (const auto &p : f.params) {
      if (!params.insert(p).second)
        throw Diag("duplicate", "parameter '" + p + "' declared twice", f.loc);
      scopes_.back().insert(p);
    }
    // normalize pre-registers flattened locals
    for (const auto &l : f.locals)
      scopes_.back().insert(l);
    check_body(f.body);
  }

  void check_body(const std::vector<StmtPtr> &body) {
    scopes_.emplace_back();
    for (const auto &s : body)
      check_stmt(*s);
    scopes_.pop_back();
  }

  void check_stmt(const Stmt &s) {
    switch (s.kind) {
    case Stmt::Kind::VarDecl:
      if (s.expr)
        check_expr(*s.expr);
      declare(s.name, s.loc);
      break;
    case Stmt::Kind::Assign:
      check_expr(*s.lhs);
      check_expr(*s.expr);
      break;
    case Stmt::Kind::ExprStmt:
      check_expr(*s.expr);
      break;
    case Stmt::Kind::If:
      check_expr(*s.expr);
      check_body(s.body);
      check_body(s.else_body);
      break;
    case Stmt::Kind::While:
      scopes_.emplace_back();
      for (const auto &c : s.cond_prelude)
        check_stmt(*c);
      check_expr(*s.expr);
      check_body(s.body);
      scopes_.pop_back();
      break;
    case Stmt::Kind::ForEach:
      check_expr(*s.expr);
      scopes_.emplace_back();
      declare(s.name, s.loc);
      for (const auto &c : s.body)
        check_stmt(*c);
      scopes_.pop_back();
      break;
    case Stmt::Kind::Return:
      if (s.expr)
        check_expr(*s.expr);
      break;
    case Stmt::Kind::Print:
      for (const auto &a : s.args)
        check_expr(*a);
      break;
    }
  }

  void check_expr(const Expr &e) {
    switch (e.kind) {
    case Expr::Kind::Var:
    case Expr::Kind::PostIncDec:
      if (!is_declared(e.name))
        throw Diag("unknown", "unknown identifier '" + e.name + "'", e.loc);
      break;
    case Expr::Kind::Call: {
      const FuncDecl *f = prog_.find_function(e.name);
      if (!f)
        throw Diag("unknown", "unknown function '" + e.name + "'", e.loc);
      if (f->params.size() != e.args.size())
        throw Diag("arity", "function '" + e.name + "' takes " +
                                std::to_string(f->params.size()) + " arguments, got " +
                                std::to_string(e.args.size()),
                   e.loc);
      for (const auto &a : e.args)
        check_expr(*a);
      break;
    }
    case Expr::Kind::NewObject:
      if (!prog_.find_class(e.name))
        throw Diag("unknown", "unknown class '" + e.name + "'", e.loc);
      break;
    case Expr::Kind::Query:
      for (const auto &a : e.args)
        check_expr(*a);
      break;
    default:
      if (e.a)
        check_expr(*e.a);
      if (e.b)
        check_expr(*e.b);
      for (const auto &a : e.args)
        check_expr(*a);
      break;
    }
  }
};

} // namespace

void resolve(const Program &p) { Resolver(p).run(); }

} // namespace pyx
