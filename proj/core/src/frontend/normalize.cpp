#include "pyx/frontend.hpp"

#include <map>
#include <set>

// Lowering to the statement-granular normal form: at most one heap access or
// call per statement, operands flattened to atoms through `$tN` temporaries,
// for-each and short-circuit operators desugared, locals alpha-renamed into a
// flat per-function namespace. The pass is idempotent: running it on an
// already-normal program reproduces the program structurally, ids included.

namespace pyx {

namespace {

class Normalizer {
public:
  explicit Normalizer(const FuncDecl &f) : func_(f) {
    // Fresh temporaries continue after any $tN already present so that
    // re-normalizing never collides with existing names.
    for_each_stmt(f.body, [&](const Stmt &s) { scan_temp(s); });
    scopes_.emplace_back();
    for (const auto &p : f.params)
      scopes_.back()[p] = p;
    taken_.insert(f.params.begin(), f.params.end());
  }

  FuncDecl run() {
    FuncDecl out;
    out.name = func_.name;
    out.params = func_.params;
    out.loc = func_.loc;
    out.body = lower_body(func_.body);
    collect_locals(out);
    return out;
  }

private:
  const FuncDecl &func_;
  uint32_t temp_counter_ = 1;
  std::vector<std::map<std::string, std::string>> scopes_;
  std::set<std::string> taken_;

  void scan_temp_name(const std::string &n) {
    if (n.size() > 2 && n[0] == '$' && n[1] == 't') {
      uint32_t v = 0;
      bool ok = true;
      for (size_t i = 2; i < n.size(); ++i) {
        if (!isdigit(static_cast<unsigned char>(n[i]))) {
          ok = false;
          break;
        }
        v = v * 10 + static_cast<uint32_t>(n[i] - '0');
      }
      if (ok && v >= temp_counter_)
        temp_counter_ = v + 1;
    }
  }

  void scan_temp_expr(const Expr &e) {
    if (e.kind == Expr::Kind::Var || e.kind == Expr::Kind::PostIncDec)
      scan_temp_name(e.name);
    if (e.a)
      scan_temp_expr(*e.a);
    if (e.b)
      scan_temp_expr(*e.b);
    for (const auto &a : e.args)
      scan_temp_expr(*a);
  }

  void scan_temp(const Stmt &s) {
    scan_temp_name(s.name);
    if (s.lhs)
      scan_temp_expr(*s.lhs);
    if (s.expr)
      scan_temp_expr(*s.expr);
    for (const auto &a : s.args)
      scan_temp_expr(*a);
  }

  std::string fresh_temp() {
    std::string n = "$t" + std::to_string(temp_counter_++);
    taken_.insert(n);
    return n;
  }

  std::string declare(const std::string &name) {
    std::string flat = name;
    uint32_t k = 2;
    while (taken_.count(flat))
      flat = name + "_" + std::to_string(k++);
    taken_.insert(flat);
    scopes_.back()[name] = flat;
    return flat;
  }

  std::string lookup(const std::string &name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto f = it->find(name);
      if (f != it->end())
        return f->second;
    }
    return name; // resolver guarantees declaredness; params map to themselves
  }

  StmtPtr mk(Stmt::Kind k, const SourceLoc &loc) {
    auto s = std::make_unique<Stmt>();
    s->kind = k;
    s->loc = loc;
    return s;
  }

  StmtPtr mk_assign(const std::string &dst, ExprPtr rhs, const SourceLoc &loc) {
    auto s = mk(Stmt::Kind::Assign, loc);
    s->lhs = make_var(dst, loc);
    s->expr = std::move(rhs);
    return s;
  }

  // ---- expression lowering ----

  ExprPtr eval_atom(const Expr &e, std::vector<StmtPtr> &out) {
    if (e.is_atom()) {
      ExprPtr c = e.clone();
      if (c->kind == Expr::Kind::Var)
        c->name = lookup(c->name);
      return c;
    }
    std::string t = fresh_temp();
    eval_into(t, e, out);
    return make_var(t, e.loc);
  }

  // Evaluate to a variable specifically (array / object bases).
  ExprPtr eval_var(const Expr &e, std::vector<StmtPtr> &out) {
    ExprPtr a = eval_atom(e, out);
    if (a->kind == Expr::Kind::Var)
      return a;
    std::string t = fresh_temp();
    out.push_back(mk_assign(t, std::move(a), e.loc));
    return make_var(t, e.loc);
  }

  void eval_into(const std::string &dst, const Expr &e, std::vector<StmtPtr> &out) {
    switch (e.kind) {
    case Expr::Kind::IntLit:
    case Expr::Kind::FloatLit:
    case Expr::Kind::BoolLit:
    case Expr::Kind::StringLit:
    case Expr::Kind::NullLit:
    case Expr::Kind::Var:
      out.push_back(mk_assign(dst, eval_atom(e, out), e.loc));
      break;
    case Expr::Kind::Field: {
      ExprPtr base = eval_var(*e.a, out);
      auto rhs = std::make_unique<Expr>();
      rhs->kind = Expr::Kind::Field;
      rhs->loc = e.loc;
      rhs->name = e.name;
      rhs->a = std::move(base);
      out.push_back(mk_assign(dst, std::move(rhs), e.loc));
      break;
    }
    case Expr::Kind::Index: {
      ExprPtr base = eval_var(*e.a, out);
      ExprPtr idx = eval_atom(*e.b, out);
      auto rhs = std::make_unique<Expr>();
      rhs->kind = Expr::Kind::Index;
      rhs->loc = e.loc;
      rhs->a = std::move(base);
      rhs->b = std::move(idx);
      out.push_back(mk_assign(dst, std::move(rhs), e.loc));
      break;
    }
    case Expr::Kind::Len: {
      ExprPtr base = eval_var(*e.a, out);
      auto rhs = std::make_unique<Expr>();
      rhs->kind = Expr::Kind::Len;
      rhs->loc = e.loc;
      rhs->a = std::move(base);
      out.push_back(mk_assign(dst, std::move(rhs), e.loc));
      break;
    }
    case Expr::Kind::Call:
    case Expr::Kind::Query: {
      auto rhs = std::make_unique<Expr>();
      rhs->kind = e.kind;
      rhs->loc = e.loc;
      rhs->name = e.name;
      rhs->str_val = e.str_val;
      rhs->is_exec = e.is_exec;
      for (const auto &a : e.args)
        rhs->args.push_back(eval_atom(*a, out));
      out.push_back(mk_assign(dst, std::move(rhs), e.loc));
      break;
    }
    case Expr::Kind::NewObject: {
      out.push_back(mk_assign(dst, e.clone(), e.loc));
      break;
    }
    case Expr::Kind::NewArray: {
      ExprPtr n = eval_atom(*e.a, out);
      auto rhs = std::make_unique<Expr>();
      rhs->kind = Expr::Kind::NewArray;
      rhs->loc = e.loc;
      rhs->elem_kind = e.elem_kind;
      rhs->a = std::move(n);
      out.push_back(mk_assign(dst, std::move(rhs), e.loc));
      break;
    }
    case Expr::Kind::Binary: {
      if (e.bin == BinOp::And || e.bin == BinOp::Or) {
        // short-circuit: dst = a; if (dst) { [dst = b] } else { [dst = b] }
        eval_into(dst, *e.a, out);
        auto iff = mk(Stmt::Kind::If, e.loc);
        iff->expr = make_var(dst, e.loc);
        std::vector<StmtPtr> arm;
        eval_into(dst, *e.b, arm);
        if (e.bin == BinOp::And)
          iff->body = std::move(arm);
        else
          iff->else_body = std::move(arm);
        out.push_back(std::move(iff));
        break;
      }
      ExprPtr a = eval_atom(*e.a, out);
      ExprPtr b = eval_atom(*e.b, out);
      auto rhs = std::make_unique<Expr>();
      rhs->kind = Expr::Kind::Binary;
      rhs->loc = e.loc;
      rhs->bin = e.bin;
      rhs->a = std::move(a);
      rhs->b = std::move(b);
      out.push_back(mk_assign(dst, std::move(rhs), e.loc));
      break;
    }
    case Expr::Kind::Unary: {
      ExprPtr a = eval_atom(*e.a, out);
      auto rhs = std::make_unique<Expr>();
      rhs->kind = Expr::Kind::Unary;
      rhs->loc = e.loc;
      rhs->un = e.un;
      rhs->a = std::move(a);
      out.push_back(mk_assign(dst, std::move(rhs), e.loc));
      break;
    }
    case Expr::Kind::PostIncDec: {
      std::string v = lookup(e.name);
      out.push_back(mk_assign(dst, make_var(v, e.loc), e.loc));
      emit_incdec(v, e.inc_delta, e.loc, out);
      break;
    }
    }
  }

  void emit_incdec(const std::string &v, int delta, const SourceLoc &loc,
                   std::vector<StmtPtr> &out) {
    auto rhs = std::make_unique<Expr>();
    rhs->kind = Expr::Kind::Binary;
    rhs->loc = loc;
    rhs->bin = delta > 0 ? BinOp::Add : BinOp::Sub;
    rhs->a = make_var(v, loc);
    rhs->b = make_int(1, loc);
    out.push_back(mk_assign(v, std::move(rhs), loc));
  }

  // ---- statement lowering ----

  std::vector<StmtPtr> lower_body(const std::vector<StmtPtr> &body) {
    scopes_.emplace_back();
    std::vector<StmtPtr> out;
    for (const auto &s : body)
      lower_stmt(*s, out);
    scopes_.pop_back();
    return out;
  }

  void lower_stmt(const Stmt &s, std::vector<StmtPtr> &out) {
    switch (s.kind) {
    case Stmt::Kind::VarDecl: {
      std::string flat = declare(s.name);
      if (s.expr)
        eval_into(flat, *s.expr, out);
      break;
    }
    case Stmt::Kind::Assign:
      lower_assign(s, out);
      break;
    case Stmt::Kind::ExprStmt: {
      const Expr &e = *s.expr;
      if (e.kind == Expr::Kind::PostIncDec) {
        emit_incdec(lookup(e.name), e.inc_delta, e.loc, out);
        break;
      }
      if (e.kind == Expr::Kind::Call || e.kind == Expr::Kind::Query) {
        auto st = mk(Stmt::Kind::ExprStmt, s.loc);
        auto call = std::make_unique<Expr>();
        call->kind = e.kind;
        call->loc = e.loc;
        call->name = e.name;
        call->str_val = e.str_val;
        call->is_exec = e.is_exec;
        for (const auto &a : e.args)
          call->args.push_back(eval_atom(*a, out));
        st->expr = std::move(call);
        out.push_back(std::move(st));
        break;
      }
      // Value-discarding expression: evaluate for effects / faults.
      eval_atom(e, out);
      break;
    }
    case Stmt::Kind::If: {
      ExprPtr cond = eval_atom(*s.expr, out);
      auto iff = mk(Stmt::Kind::If, s.loc);
      iff->expr = std::move(cond);
      iff->body = lower_body(s.body);
      iff->else_body = lower_body(s.else_body);
      out.push_back(std::move(iff));
      break;
    }
    case Stmt::Kind::While: {
      scopes_.emplace_back();
      auto loop = mk(Stmt::Kind::While, s.loc);
      std::vector<StmtPtr> prelude;
      for (const auto &c : s.cond_prelude)
        lower_stmt(*c, prelude);
      loop->expr = eval_atom(*s.expr, prelude);
      loop->cond_prelude = std::move(prelude);
      loop->body = lower_body(s.body);
      out.push_back(std::move(loop));
      scopes_.pop_back();
      break;
    }
    case Stmt::Kind::ForEach: {
      // for (x : arr) => i/n temporaries plus an element load per iteration
      ExprPtr arr = eval_var(*s.expr, out);
      std::string n = fresh_temp();
      {
        auto len = std::make_unique<Expr>();
        len->kind = Expr::Kind::Len;
        len->loc = s.loc;
        len->a = arr->clone();
        out.push_back(mk_assign(n, std::move(len), s.loc));
      }
      std::string i = fresh_temp();
      out.push_back(mk_assign(i, make_int(0, s.loc), s.loc));

      scopes_.emplace_back();
      std::string x = declare(s.name);
      auto loop = mk(Stmt::Kind::While, s.loc);
      std::string c = fresh_temp();
      {
        auto cmp = std::make_unique<Expr>();
        cmp->kind = Expr::Kind::Binary;
        cmp->loc = s.loc;
        cmp->bin = BinOp::Lt;
        cmp->a = make_var(i, s.loc);
        cmp->b = make_var(n, s.loc);
        loop->cond_prelude.push_back(mk_assign(c, std::move(cmp), s.loc));
      }
      loop->expr = make_var(c, s.loc);
      {
        auto idx = std::make_unique<Expr>();
        idx->kind = Expr::Kind::Index;
        idx->loc = s.loc;
        idx->a = arr->clone();
        idx->b = make_var(i, s.loc);
        loop->body.push_back(mk_assign(x, std::move(idx), s.loc));
      }
      for (const auto &st : s.body)
        lower_stmt(*st, loop->body);
      emit_incdec(i, 1, s.loc, loop->body);
      out.push_back(std::move(loop));
      scopes_.pop_back();
      break;
    }
    case Stmt::Kind::Return: {
      auto r = mk(Stmt::Kind::Return, s.loc);
      if (s.expr)
        r->expr = eval_atom(*s.expr, out);
      out.push_back(std::move(r));
      break;
    }
    case Stmt::Kind::Print: {
      auto pr = mk(Stmt::Kind::Print, s.loc);
      for (const auto &a : s.args)
        pr->args.push_back(eval_atom(*a, out));
      out.push_back(std::move(pr));
      break;
    }
    }
  }

  void lower_assign(const Stmt &s, std::vector<StmtPtr> &out) {
    const Expr &lv = *s.lhs;
    if (lv.kind == Expr::Kind::Var) {
      std::string dst = lookup(lv.name);
      if (!s.is_compound) {
        eval_into(dst, *s.expr, out);
        return;
      }
      ExprPtr b = eval_atom(*s.expr, out);
      auto rhs = std::make_unique<Expr>();
      rhs->kind = Expr::Kind::Binary;
      rhs->loc = s.loc;
      rhs->bin = s.compound_op;
      rhs->a = make_var(dst, s.loc);
      rhs->b = std::move(b);
      out.push_back(mk_assign(dst, std::move(rhs), s.loc));
      return;
    }
    if (lv.kind == Expr::Kind::Field) {
      ExprPtr base = eval_var(*lv.a, out);
      ExprPtr value;
      if (s.is_compound) {
        std::string cur = fresh_temp();
        {
          auto rd = std::make_unique<Expr>();
          rd->kind = Expr::Kind::Field;
          rd->loc = s.loc;
          rd->name = lv.name;
          rd->a = base->clone();
          out.push_back(mk_assign(cur, std::move(rd), s.loc));
        }
        ExprPtr b = eval_atom(*s.expr, out);
        std::string summed = fresh_temp();
        auto op = std::make_unique<Expr>();
        op->kind = Expr::Kind::Binary;
        op->loc = s.loc;
        op->bin = s.compound_op;
        op->a = make_var(cur, s.loc);
        op->b = std::move(b);
        out.push_back(mk_assign(summed, std::move(op), s.loc));
        value = make_var(summed, s.loc);
      } else {
        value = eval_atom(*s.expr, out);
      }
      auto st = mk(Stmt::Kind::Assign, s.loc);
      auto target = std::make_unique<Expr>();
      target->kind = Expr::Kind::Field;
      target->loc = lv.loc;
      target->name = lv.name;
      target->a = std::move(base);
      st->lhs = std::move(target);
      st->expr = std::move(value);
      out.push_back(std::move(st));
      return;
    }
    if (lv.kind == Expr::Kind::Index) {
      ExprPtr base = eval_var(*lv.a, out);
      ExprPtr idx = eval_atom(*lv.b, out);
      ExprPtr value;
      if (s.is_compound) {
        std::string cur = fresh_temp();
        {
          auto rd = std::make_unique<Expr>();
          rd->kind = Expr::Kind::Index;
          rd->loc = s.loc;
          rd->a = base->clone();
          rd->b = idx->clone();
          out.push_back(mk_assign(cur, std::move(rd), s.loc));
        }
        ExprPtr b = eval_atom(*s.expr, out);
        std::string summed = fresh_temp();
        auto op = std::make_unique<Expr>();
        op->kind = Expr::Kind::Binary;
        op->loc = s.loc;
        op->bin = s.compound_op;
        op->a = make_var(cur, s.loc);
        op->b = std::move(b);
        out.push_back(mk_assign(summed, std::move(op), s.loc));
        value = make_var(summed, s.loc);
      } else {
        value = eval_atom(*s.expr, out);
      }
      auto st = mk(Stmt::Kind::Assign, s.loc);
      auto target = std::make_unique<Expr>();
      target->kind = Expr::Kind::Index;
      target->loc = lv.loc;
      target->a = std::move(base);
      target->b = std::move(idx);
      st->lhs = std::move(target);
      st->expr = std::move(value);
      out.push_back(std::move(st));
      return;
    }
    throw Diag("syntax", "invalid assignment target", lv.loc);
  }

  // locals = every non-parameter name, in first-occurrence order over the
  // normalized body; reconstructible, so normalize stays idempotent.
  void collect_locals(FuncDecl &f) {
    std::set<std::string> params(f.params.begin(), f.params.end());
    std::set<std::string> seen;
    auto visit_name = [&](const std::string &n) {
      if (n.empty() || params.count(n) || seen.count(n))
        return;
      seen.insert(n);
      f.locals.push_back(n);
    };
    std::function<void(const Expr &)> visit_expr = [&](const Expr &e) {
      if (e.kind == Expr::Kind::Var)
        visit_name(e.name);
      if (e.a)
        visit_expr(*e.a);
      if (e.b)
        visit_expr(*e.b);
      for (const auto &a : e.args)
        visit_expr(*a);
    };
    for_each_stmt(f.body, [&](const Stmt &s) {
      if (s.lhs)
        visit_expr(*s.lhs);
      if (s.expr)
        visit_expr(*s.expr);
      for (const auto &a : s.args)
        visit_expr(*a);
    });
  }
};

void renumber_body(std::vector<StmtPtr> &body, uint32_t &next);

void renumber_stmt(Stmt &s, uint32_t &next) {
  if (s.kind == Stmt::Kind::While) {
    // execution order: prelude, test, body — ids follow it so back-edge
    // detection can compare ids directly
    renumber_body(s.cond_prelude, next);
    s.id = next++;
    renumber_body(s.body, next);
    return;
  }
  s.id = next++;
  renumber_body(s.body, next);
  renumber_body(s.else_body, next);
}

void renumber_body(std::vector<StmtPtr> &body, uint32_t &next) {
  for (auto &s : body)
    renumber_stmt(*s, next);
}

} // namespace

Program normalize(const Program &p) {
  Program out;
  for (const auto &c : p.classes)
    out.classes.push_back(ClassDecl{c.name, c.fields, c.loc});
  for (const auto &f : p.functions)
    out.functions.push_back(Normalizer(f).run());
  uint32_t next = 1;
  for (auto &f : out.functions)
    renumber_body(f.body, next);
  for (const auto &e : p.entry_points)
    out.entry_points.push_back(EntryPoint{e.func, next++});
  out.next_stmt_id = next;
  return out;
}

bool is_normal_form(const Program &p) {
  bool ok = true;
  for_each_stmt_in_program(p, [&](const FuncDecl &, const Stmt &s) {
    if (!ok)
      return;
    try {
      norm_kind(s);
    } catch (const Diag &) {
      ok = false;
    }
  });
  return ok;
}

} // namespace pyx
