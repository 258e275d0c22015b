#include "pyx/interp.hpp"

#include <cmath>
#include <sstream>

namespace pyx {

namespace {

class Interp {
public:
  Interp(const Program &p, const Workload &w, const RunOptions &opts)
      : prog_(p), opts_(opts) {
    db_ = w.db_init; // copy; a run never mutates the workload
    for (const auto &[name, t] : db_.tables) {
      auto &writers = cell_writers_[name];
      writers.assign(t.rows.size(), std::vector<int64_t>(t.cols.size(), 0));
    }
    for_each_stmt_in_program(prog_, [&](const FuncDecl &, const Stmt &s) {
      result_.profile.stmt_count[s.id] = 0;
    });
    for (const auto &e : prog_.entry_points)
      result_.profile.stmt_count[e.stmt_id] = 0;
  }

  RunResult run(const Workload &w) {
    for (const auto &call : w.calls) {
      const EntryPoint *ep = prog_.find_entry(call.entry);
      if (!ep)
        throw Diag("workload", "call to undeclared entry point '" + call.entry + "'");
      count(ep->stmt_id);
      Value ret = call_function(ep->func, call.args, ep->stmt_id, {});
      record_def(ep->stmt_id, ret);
    }
    result_.trace.prints = prints_;
    result_.trace.final_db = db_.dump();
    return std::move(result_);
  }

private:
  struct Binding {
    Value v;
    int64_t writer = -1;
    bool init = false;
  };
  struct Frame {
    std::vector<std::map<std::string, Binding>> scopes;
    Value ret = int64_t{0};
    bool returned = false;
  };

  const Program &prog_;
  RunOptions opts_;
  MiniDb db_;
  Heap heap_;
  std::vector<std::string> prints_;
  RunResult result_;
  uint64_t steps_ = 0;
  uint32_t cur_stmt_ = 0;
  size_t depth_ = 0;

  // dynamic last-writer tracking, analysis-shaped (see interp.hpp)
  std::map<std::pair<uint64_t, std::string>, int64_t> field_writer_;
  std::map<std::pair<uint64_t, uint64_t>, int64_t> elem_writer_;
  std::map<std::string, std::vector<std::vector<int64_t>>> cell_writers_;

  [[noreturn]] void fail(const std::string &msg) {
    throw Diag("runtime", msg).at_stmt(cur_stmt_);
  }

  void count(uint32_t stmt) {
    if (opts_.profile)
      ++result_.profile.stmt_count[stmt];
    if (++steps_ > opts_.max_steps)
      throw Diag("runtime", "step limit exceeded (runaway loop?)").at_stmt(cur_stmt_);
  }

  void record_def(uint32_t stmt, const Value &v) {
    if (!opts_.profile)
      return;
    auto &s = result_.profile.def_size[stmt];
    s.total += wire_size(v, &heap_);
    ++s.samples;
  }

  void record_exec_def(uint32_t stmt, const std::vector<Value> &args) {
    if (!opts_.profile)
      return;
    auto &s = result_.profile.def_size[stmt];
    for (const auto &a : args)
      s.total += wire_size(a, &heap_);
    ++s.samples;
  }

  void record_use(int64_t writer, uint32_t use_stmt) {
    if (opts_.record_def_use && writer != 0 && use_stmt != 0)
      result_.def_use_pairs.insert(DynPair{writer, use_stmt});
  }

  // ---- variables ----

  Binding *find_binding(Frame &f, const std::string &name) {
    for (auto it = f.scopes.rbegin(); it != f.scopes.rend(); ++it) {
      auto b = it->find(name);
      if (b != it->end())
        return &b->second;
    }
    return nullptr;
  }

  Value read_var(Frame &f, const std::string &name) {
    Binding *b = find_binding(f, name);
    if (!b || !b->init)
      fail("use of uninitialized variable '" + name + "'");
    record_use(b->writer, cur_stmt_);
    return b->v;
  }

  void write_var(Frame &f, const std::string &name, Value v, int64_t writer) {
    Binding *b = find_binding(f, name);
    if (!b) {
      // normalized programs carry no declarations; bind in function scope
      b = &f.scopes.front()[name];
    }
    b->v = std::move(v);
    b->writer = writer;
    b->init = true;
  }

  // ---- values ----

  bool truthy(const Value &v) {
    try {
      return value_truthy(v);
    } catch (Diag &d) {
      throw d.at_stmt(cur_stmt_);
    }
  }

  Value binary(BinOp op, const Value &a, const Value &b) {
    try {
      return eval_binary(op, a, b);
    } catch (Diag &d) {
      throw d.at_stmt(cur_stmt_);
    }
  }

  Value coerce_store(const Value &v, ValueKind want, const std::string &what,
                     const std::string &class_name = "") {
    Value out = [&] {
      try {
        return coerce_store_value(v, want, what);
      } catch (Diag &d) {
        throw d.at_stmt(cur_stmt_);
      }
    }();
    if (want == ValueKind::ObjectRef && !class_name.empty()) {
      const Ref &r = std::get<Ref>(out);
      if (r.id != 0 && heap_.object(r.id).cls != class_name)
        fail("storing " + heap_.object(r.id).cls + " into " + what + " of class " +
             class_name);
    }
    return out;
  }

  Value default_value(const TypeRef &t) { return default_value_for(t); }
  Value default_scalar(ValueKind k) { return default_scalar_value(k); }

    // ---- heap access ----

  HeapObject &deref_object(const Value &v) {
    const Ref *r = std::get_if<Ref>(&v);
    if (!r || r->kind != ValueKind::ObjectRef)
      fail("field access on non-object value");
    if (r->id == 0)
      fail("field access on null");
    return heap_.object(r->id);
  }

  ArrayObj &deref_array(const Value &v) {
    const Ref *r = std::get_if<Ref>(&v);
    if (!r || r->kind != ValueKind::ArrayRef)
      fail("array access on non-array value");
    if (r->id == 0)
      fail("array access on null");
    return heap_.array(r->id);
  }

  size_t check_index(const ArrayObj &a, const Value &idx) {
    const int64_t *i = std::get_if<int64_t>(&idx);
    if (!i)
      fail("array index is not an int");
    if (*i < 0 || static_cast<uint64_t>(*i) >= a.data.size())
      fail("array index " + std::to_string(*i) + " out of bounds (length " +
           std::to_string(a.data.size()) + ")");
    return static_cast<size_t>(*i);
  }

  // ---- expression evaluation ----

  Value eval(Frame &f, const Expr &e) {
    switch (e.kind) {
    case Expr::Kind::IntLit: return e.int_val;
    case Expr::Kind::FloatLit: return e.float_val;
    case Expr::Kind::BoolLit: return e.bool_val;
    case Expr::Kind::StringLit: return e.str_val;
    case Expr::Kind::NullLit: return Ref{ValueKind::ObjectRef, 0};
    case Expr::Kind::Var: return read_var(f, e.name);
    case Expr::Kind::Field: {
      Value base = eval(f, *e.a);
      HeapObject &obj = deref_object(base);
      auto it = obj.fields.find(e.name);
      if (it == obj.fields.end())
        fail("class " + obj.cls + " has no field '" + e.name + "'");
      auto w = field_writer_.find({obj.id, e.name});
      record_use(w != field_writer_.end()
                     ? w->second
                     : -(field_index(prog_, obj.cls, e.name) + 1),
                 cur_stmt_);
      return it->second;
    }
    case Expr::Kind::Index: {
      Value base = eval(f, *e.a);
      ArrayObj &arr = deref_array(base);
      size_t i = check_index(arr, eval(f, *e.b));
      auto w = elem_writer_.find({arr.id, i});
      record_use(w != elem_writer_.end() ? w->second : arr.alloc_site, cur_stmt_);
      return arr.data[i];
    }
    case Expr::Kind::Len: {
      Value base = eval(f, *e.a);
      ArrayObj &arr = deref_array(base);
      record_use(arr.alloc_site, cur_stmt_);
      return static_cast<int64_t>(arr.data.size());
    }
    case Expr::Kind::Call: {
      std::vector<Value> args;
      for (const auto &a : e.args)
        args.push_back(eval(f, *a));
      return call_function(e.name, args, cur_stmt_, e.loc);
    }
    case Expr::Kind::Query:
      return run_query(f, e);
    case Expr::Kind::NewObject: {
      const ClassDecl *c = prog_.find_class(e.name);
      if (!c)
        fail("unknown class '" + e.name + "'");
      HeapObject obj;
      obj.id = heap_.next_id++;
      obj.cls = e.name;
      obj.alloc_site = cur_stmt_;
      for (const auto &fd : c->fields)
        obj.fields[fd.name] = default_value(fd.type);
      uint64_t id = obj.id;
      heap_.objects[id] = std::move(obj);
      return Ref{ValueKind::ObjectRef, id};
    }
    case Expr::Kind::NewArray: {
      Value n = eval(f, *e.a);
      const int64_t *len = std::get_if<int64_t>(&n);
      if (!len || *len < 0)
        fail("array length must be a non-negative int");
      ArrayObj arr;
      arr.id = heap_.next_id++;
      arr.elem = e.elem_kind;
      arr.alloc_site = cur_stmt_;
      arr.data.assign(static_cast<size_t>(*len), default_scalar(e.elem_kind));
      uint64_t id = arr.id;
      heap_.arrays[id] = std::move(arr);
      return Ref{ValueKind::ArrayRef, id};
    }
    case Expr::Kind::Binary: {
      if (e.bin == BinOp::And || e.bin == BinOp::Or) {
        bool a = truthy(eval(f, *e.a));
        if (e.bin == BinOp::And)
          return a ? Value{truthy(eval(f, *e.b))} : Value{false};
        return a ? Value{true} : Value{truthy(eval(f, *e.b))};
      }
      Value a = eval(f, *e.a);
      Value b = eval(f, *e.b);
      return binary(e.bin, a, b);
    }
    case Expr::Kind::Unary: {
      Value a = eval(f, *e.a);
      try {
        return eval_unary(e.un, a);
      } catch (Diag &d) {
        throw d.at_stmt(cur_stmt_);
      }
    }
    case Expr::Kind::PostIncDec: {
      Value old = read_var(f, e.name);
      const int64_t *i = std::get_if<int64_t>(&old);
      if (!i)
        fail("++/-- takes an int variable");
      write_var(f, e.name, binary(BinOp::Add, *i, int64_t{e.inc_delta}), cur_stmt_);
      return old;
    }
    }
    fail("internal: unknown expression kind");
  }

  Value run_query(Frame &f, const Expr &e) {
    QueryTemplate q = parse_query_template(e.str_val);
    std::vector<Value> args;
    for (const auto &a : e.args)
      args.push_back(eval(f, *a));
    std::vector<size_t> touched;
    ValueKind result_kind = ValueKind::Int;
    std::optional<std::vector<Value>> rows;
    try {
      rows = db_.run(q, args, &result_kind, &touched);
    } catch (Diag &d) {
      throw d.at_stmt(cur_stmt_);
    }
    record_db_effects(q, touched);
    if (e.is_exec || !rows) {
      record_exec_def(cur_stmt_, args);
      return Ref{ValueKind::ObjectRef, 0};
    }
    // materialize the rowset as a fresh array allocated at this statement
    ArrayObj arr;
    arr.id = heap_.next_id++;
    arr.elem = result_kind;
    arr.alloc_site = cur_stmt_;
    arr.data = std::move(*rows);
    uint64_t id = arr.id;
    heap_.arrays[id] = std::move(arr);
    return Ref{ValueKind::ArrayRef, id};
  }

  void record_db_effects(const QueryTemplate &q, const std::vector<size_t> &touched) {
    auto &writers = cell_writers_[q.table];
    const Table &t = db_.tables[q.table];
    writers.resize(t.rows.size());
    for (auto &row : writers)
      row.resize(t.cols.size(), 0);
    switch (q.op) {
    case QueryTemplate::Op::Get:
    case QueryTemplate::Op::Scan: {
      int k = t.col_index(q.key_col), r = t.col_index(q.result_col);
      for (size_t i : touched) {
        record_use(writers[i][static_cast<size_t>(k)], cur_stmt_);
        record_use(writers[i][static_cast<size_t>(r)], cur_stmt_);
      }
      break;
    }
    case QueryTemplate::Op::Insert:
      for (size_t i : touched)
        for (auto &w : writers[i])
          w = cur_stmt_;
      break;
    case QueryTemplate::Op::Update: {
      int k = t.col_index(q.key_col), s = t.col_index(q.set_col);
      for (size_t i : touched) {
        record_use(writers[i][static_cast<size_t>(k)], cur_stmt_);
        writers[i][static_cast<size_t>(s)] = cur_stmt_;
      }
      break;
    }
    }
  }

  // ---- statements ----

  Value call_function(const std::string &name, const std::vector<Value> &args,
                      uint32_t call_site, const SourceLoc &) {
    const FuncDecl *fn = prog_.find_function(name);
    if (!fn)
      throw Diag("runtime", "unknown function '" + name + "'").at_stmt(call_site);
    if (fn->params.size() != args.size())
      throw Diag("runtime", "arity mismatch calling '" + name + "'").at_stmt(call_site);
    if (++depth_ > 2000)
      throw Diag("runtime", "call depth limit exceeded").at_stmt(call_site);
    Frame f;
    f.scopes.emplace_back();
    for (size_t i = 0; i < args.size(); ++i) {
      Binding b;
      b.v = args[i];
      b.writer = call_site; // parameter bindings belong to the call statement
      b.init = true;
      f.scopes.back()[fn->params[i]] = std::move(b);
    }
    uint32_t saved = cur_stmt_;
    exec_body(f, fn->body);
    cur_stmt_ = saved;
    --depth_;
    return f.returned ? f.ret : Value{Ref{ValueKind::ObjectRef, 0}};
  }

  void exec_body(Frame &f, const std::vector<StmtPtr> &body) {
    f.scopes.emplace_back();
    for (const auto &s : body) {
      exec_stmt(f, *s);
      if (f.returned)
        break;
    }
    f.scopes.pop_back();
  }

  void exec_stmt(Frame &f, const Stmt &s) {
    cur_stmt_ = s.id;
    switch (s.kind) {
    case Stmt::Kind::VarDecl: {
      count(s.id);
      Binding b;
      if (s.expr) {
        b.v = eval(f, *s.expr);
        b.writer = s.id;
        b.init = true;
        record_def(s.id, b.v);
      }
      f.scopes.back()[s.name] = std::move(b);
      break;
    }
    case Stmt::Kind::Assign: {
      count(s.id);
      exec_assign(f, s);
      break;
    }
    case Stmt::Kind::ExprStmt: {
      count(s.id);
      Value v = eval(f, *s.expr);
      if (s.expr->kind == Expr::Kind::Query && !s.expr->is_exec)
        record_def(s.id, v); // discarded rowset still has a size
      break;
    }
    case Stmt::Kind::If: {
      count(s.id);
      cur_stmt_ = s.id;
      bool c = truthy(eval(f, *s.expr));
      if (c)
        exec_body(f, s.body);
      else
        exec_body(f, s.else_body);
      break;
    }
    case Stmt::Kind::While: {
      while (true) {
        f.scopes.emplace_back(); // prelude + loop variable scope
        for (const auto &c : s.cond_prelude) {
          exec_stmt(f, *c);
          if (f.returned)
            break;
        }
        if (f.returned) {
          f.scopes.pop_back();
          break;
        }
        cur_stmt_ = s.id;
        count(s.id);
        bool c = truthy(eval(f, *s.expr));
        if (!c) {
          f.scopes.pop_back();
          break;
        }
        exec_body(f, s.body);
        f.scopes.pop_back();
        if (f.returned)
          break;
      }
      break;
    }
    case Stmt::Kind::ForEach: {
      count(s.id);
      Value arr_v = eval(f, *s.expr);
      ArrayObj &arr = deref_array(arr_v);
      uint64_t arr_id = arr.id;
      size_t n = arr.data.size();
      for (size_t i = 0; i < n; ++i) {
        f.scopes.emplace_back();
        cur_stmt_ = s.id;
        ArrayObj &a = heap_.array(arr_id);
        if (i >= a.data.size())
          fail("array shrank during iteration");
        auto w = elem_writer_.find({arr_id, i});
        record_use(w != elem_writer_.end() ? w->second : a.alloc_site, s.id);
        Binding b;
        b.v = a.data[i];
        b.writer = s.id;
        b.init = true;
        f.scopes.back()[s.name] = std::move(b);
        for (const auto &st : s.body) {
          exec_stmt(f, *st);
          if (f.returned)
            break;
        }
        f.scopes.pop_back();
        if (f.returned)
          break;
      }
      break;
    }
    case Stmt::Kind::Return: {
      count(s.id);
      if (s.expr)
        f.ret = eval(f, *s.expr);
      else
        f.ret = Ref{ValueKind::ObjectRef, 0};
      f.returned = true;
      break;
    }
    case Stmt::Kind::Print: {
      count(s.id);
      std::ostringstream os;
      for (size_t i = 0; i < s.args.size(); ++i) {
        if (i)
          os << ' ';
        os << value_to_text(eval(f, *s.args[i]));
      }
      prints_.push_back(os.str());
      break;
    }
    }
  }

  void exec_assign(Frame &f, const Stmt &s) {
    const Expr &lv = *s.lhs;
    // Java-style order: lvalue subexpressions, current value for compound
    // assignment, then the right-hand side, then the store.
    if (lv.kind == Expr::Kind::Var) {
      Value v;
      if (s.is_compound) {
        Value cur = read_var(f, lv.name);
        Value rhs = eval(f, *s.expr);
        v = binary(s.compound_op, cur, rhs);
      } else {
        v = eval(f, *s.expr);
      }
      write_var(f, lv.name, v, s.id);
      if (!(s.expr->kind == Expr::Kind::Query && s.expr->is_exec))
        record_def(s.id, v);
      return;
    }
    if (lv.kind == Expr::Kind::Field) {
      Value base = eval(f, *lv.a);
      HeapObject &obj = deref_object(base);
      auto it = obj.fields.find(lv.name);
      if (it == obj.fields.end())
        fail("class " + obj.cls + " has no field '" + lv.name + "'");
      const ClassDecl *cd = prog_.find_class(obj.cls);
      const FieldDecl *fd = cd->find_field(lv.name);
      Value v;
      if (s.is_compound) {
        auto w = field_writer_.find({obj.id, lv.name});
        record_use(w != field_writer_.end()
                       ? w->second
                       : -(field_index(prog_, obj.cls, lv.name) + 1),
                   s.id);
        Value cur = it->second;
        Value rhs = eval(f, *s.expr);
        v = binary(s.compound_op, cur, rhs);
      } else {
        v = eval(f, *s.expr);
      }
      v = coerce_store(v, fd->type.kind, "field " + obj.cls + "." + lv.name,
                       fd->type.class_name);
      it->second = v;
      field_writer_[{obj.id, lv.name}] = s.id;
      record_def(s.id, v);
      return;
    }
    if (lv.kind == Expr::Kind::Index) {
      Value base = eval(f, *lv.a);
      ArrayObj &arr = deref_array(base);
      uint64_t arr_id = arr.id;
      size_t i = check_index(arr, eval(f, *lv.b));
      Value v;
      if (s.is_compound) {
        auto w = elem_writer_.find({arr_id, i});
        record_use(w != elem_writer_.end() ? w->second : arr.alloc_site, s.id);
        Value cur = arr.data[i];
        Value rhs = eval(f, *s.expr);
        v = binary(s.compound_op, cur, rhs);
      } else {
        v = eval(f, *s.expr);
      }
      ArrayObj &a2 = heap_.array(arr_id);
      v = coerce_store(v, a2.elem, "array element");
      a2.data[i] = v;
      elem_writer_[{arr_id, i}] = s.id;
      record_def(s.id, v);
      return;
    }
    fail("invalid assignment target");
  }
};

} // namespace

RunResult run_program(const Program &p, const Workload &w, const RunOptions &opts) {
  Interp interp(p, w, opts);
  return interp.run(w);
}

OutputTrace run_reference(const Program &p, const Workload &w) {
  RunOptions opts;
  return run_program(p, w, opts).trace;
}

Profile profile_program(const Program &p, const Workload &w) {
  RunOptions opts;
  opts.profile = true;
  return run_program(p, w, opts).profile;
}

} // namespace pyx
