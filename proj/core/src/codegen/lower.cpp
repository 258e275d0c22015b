#include "pyx/codegen.hpp"

#include <algorithm>
#include <sstream>

// Lowering PyxIL to execution blocks: maximal same-host straight-line runs
// become one block; placement changes, branches, calls and remote database
// operations end blocks. Every block ends by naming its successor. Locals
// live in slots of an explicitly managed stack frame (params first, then
// locals in first-occurrence order); the slot map is part of the artifact.

namespace pyx {

int FuncLayout::slot_of(const std::string &var) const {
  for (size_t i = 0; i < slot_names.size(); ++i)
    if (slot_names[i] == var)
      return static_cast<int>(i);
  throw Diag("internal", "no slot for variable '" + var + "' in " + name);
}

const FuncLayout &LoweredProgram::layout(const std::string &func) const {
  for (const auto &l : layouts)
    if (l.name == func)
      return l;
  throw Diag("internal", "no layout for function " + func);
}

const SplitClassLayout &LoweredProgram::cls(const std::string &name) const {
  for (const auto &c : classes)
    if (c.cls == name)
      return c;
  throw Diag("runtime", "unknown class " + name);
}

namespace {

class Lowerer {
public:
  explicit Lowerer(const PyxilProgram &px) : px_(px) {}

  LoweredProgram run() {
    for (const auto &c : px_.program.classes) {
      SplitClassLayout layout;
      layout.cls = c.name;
      for (const auto &f : c.fields) {
        int idx = field_index(px_.program, c.name, f.name);
        Host h = px_.field_host.count(idx) ? px_.field_host.at(idx) : Host::App;
        (h == Host::App ? layout.app_fields : layout.db_fields).push_back(f);
      }
      out_.classes.push_back(std::move(layout));
    }
    for (const auto &f : px_.program.functions)
      lower_function(f);
    for (const auto &e : px_.program.entry_points) {
      EntryWrapper w;
      w.func = e.func;
      w.entry_block = out_.layout(e.func).entry_block;
      w.arg_count = px_.program.find_function(e.func)->params.size();
      out_.wrappers.push_back(std::move(w));
    }
    return std::move(out_);
  }

private:
  const PyxilProgram &px_;
  LoweredProgram out_;

  const FuncLayout *layout_ = nullptr;
  int cur_ = -1;
  std::vector<bool> host_set_;
  std::string func_name_;
  uint32_t block_seq_ = 0;

  ExecutionBlock &blk(uint32_t id) { return out_.blocks[id]; }

  uint32_t new_block(std::optional<Host> host = std::nullopt) {
    ExecutionBlock b;
    b.id = static_cast<uint32_t>(out_.blocks.size());
    b.name = func_name_ + std::to_string(block_seq_++);
    b.host = host.value_or(Host::App);
    out_.blocks.push_back(std::move(b));
    host_set_.push_back(host.has_value());
    return out_.blocks.back().id;
  }

  void start(uint32_t id) { cur_ = static_cast<int>(id); }

  void seal(Terminator t) {
    blk(static_cast<uint32_t>(cur_)).term = std::move(t);
    cur_ = -1;
  }

  void ensure_open() {
    if (cur_ == -1)
      start(new_block()); // dead code after return still gets a home
  }

  void ensure(Host h) {
    ensure_open();
    uint32_t id = static_cast<uint32_t>(cur_);
    if (!host_set_[id]) {
      blk(id).host = h;
      host_set_[id] = true;
      return;
    }
    if (blk(id).host != h) {
      uint32_t next = new_block(h);
      Terminator t;
      t.kind = Terminator::Kind::Goto;
      t.target = next;
      seal(std::move(t));
      start(next);
    }
  }

  void emit(MicroOp op) { blk(static_cast<uint32_t>(cur_)).ops.push_back(std::move(op)); }

  Operand operand(const Expr &atom) const {
    switch (atom.kind) {
    case Expr::Kind::Var:
      return Operand::of_slot(layout_->slot_of(atom.name));
    case Expr::Kind::IntLit:
      return Operand::constant(atom.int_val);
    case Expr::Kind::FloatLit:
      return Operand::constant(atom.float_val);
    case Expr::Kind::BoolLit:
      return Operand::constant(atom.bool_val);
    case Expr::Kind::StringLit:
      return Operand::constant(atom.str_val);
    case Expr::Kind::NullLit:
      return Operand::constant(Ref{ValueKind::ObjectRef, 0});
    default:
      throw Diag("internal", "non-atom operand in lowering");
    }
  }

  void emit_sync_ops(const Stmt &s) {
    auto it = px_.sync_after.find(s.id);
    if (it == px_.sync_after.end())
      return;
    for (const auto &op : it->second) {
      MicroOp m;
      m.stmt_id = s.id;
      m.kind = op.kind == SyncOp::Kind::SendApp    ? MicroOp::Kind::SendApp
               : op.kind == SyncOp::Kind::SendDb   ? MicroOp::Kind::SendDb
                                                   : MicroOp::Kind::SendNative;
      m.obj = layout_->slot_of(op.var);
      emit(std::move(m));
    }
  }

  void lower_function(const FuncDecl &f) {
    func_name_ = f.name;
    block_seq_ = 0;
    FuncLayout layout;
    layout.name = f.name;
    layout.slot_names = f.params;
    for (const auto &l : f.locals)
      layout.slot_names.push_back(l);
    layout.frame_size = static_cast<uint32_t>(layout.slot_names.size());
    out_.layouts.push_back(std::move(layout));
    layout_ = &out_.layouts.back();

    size_t first_block = out_.blocks.size();
    uint32_t entry = new_block();
    out_.layouts.back().entry_block = entry;
    start(entry);
    lower_stmts(f.body);
    if (cur_ != -1) {
      Terminator t;
      t.kind = Terminator::Kind::Ret;
      t.has_value = false;
      seal(std::move(t));
    }
    resolve_pending_hosts(first_block);
    layout_ = nullptr;
  }

  void lower_stmts(const std::vector<StmtPtr> &body) {
    for (const auto &sp : body)
      lower_stmt(*sp);
  }

  void lower_stmt(const Stmt &s) {
    ensure_open();
    NormKind k = norm_kind(s);
    Host h = px_.host_of(s);
    switch (k) {
    case NormKind::Assign: {
      ensure(h);
      const Expr &rhs = *s.expr;
      MicroOp m;
      m.stmt_id = s.id;
      m.dst = layout_->slot_of(s.lhs->name);
      if (rhs.kind == Expr::Kind::Binary) {
        m.kind = MicroOp::Kind::Bin;
        m.bin = rhs.bin;
        m.a = operand(*rhs.a);
        m.b = operand(*rhs.b);
      } else if (rhs.kind == Expr::Kind::Unary) {
        m.kind = MicroOp::Kind::Un;
        m.un = rhs.un;
        m.a = operand(*rhs.a);
      } else {
        m.kind = MicroOp::Kind::Move;
        m.a = operand(rhs);
      }
      emit(std::move(m));
      emit_sync_ops(s);
      break;
    }
    case NormKind::FieldRead: {
      ensure(h);
      MicroOp m;
      m.stmt_id = s.id;
      m.kind = MicroOp::Kind::FieldLoad;
      m.dst = layout_->slot_of(s.lhs->name);
      m.obj = layout_->slot_of(s.expr->a->name);
      m.name = s.expr->name;
      emit(std::move(m));
      emit_sync_ops(s);
      break;
    }
    case NormKind::FieldWrite: {
      ensure(h);
      MicroOp m;
      m.stmt_id = s.id;
      m.kind = MicroOp::Kind::FieldStore;
      m.obj = layout_->slot_of(s.lhs->a->name);
      m.name = s.lhs->name;
      m.a = operand(*s.expr);
      emit(std::move(m));
      emit_sync_ops(s);
      break;
    }
    case NormKind::ArrayRead: {
      ensure(h);
      MicroOp m;
      m.stmt_id = s.id;
      m.dst = layout_->slot_of(s.lhs->name);
      if (s.expr->kind == Expr::Kind::Len) {
        m.kind = MicroOp::Kind::ArrLen;
        m.obj = layout_->slot_of(s.expr->a->name);
      } else {
        m.kind = MicroOp::Kind::ArrLoad;
        m.obj = layout_->slot_of(s.expr->a->name);
        m.a = operand(*s.expr->b);
      }
      emit(std::move(m));
      emit_sync_ops(s);
      break;
    }
    case NormKind::ArrayWrite: {
      ensure(h);
      MicroOp m;
      m.stmt_id = s.id;
      m.kind = MicroOp::Kind::ArrStore;
      m.obj = layout_->slot_of(s.lhs->a->name);
      m.a = operand(*s.lhs->b);
      m.b = operand(*s.expr);
      emit(std::move(m));
      emit_sync_ops(s);
      break;
    }
    case NormKind::AllocArray: {
      ensure(h);
      MicroOp m;
      m.stmt_id = s.id;
      m.kind = MicroOp::Kind::NewArr;
      m.dst = layout_->slot_of(s.lhs->name);
      m.elem = s.expr->elem_kind;
      m.a = operand(*s.expr->a);
      emit(std::move(m));
      emit_sync_ops(s);
      break;
    }
    case NormKind::AllocObject: {
      ensure(h);
      MicroOp m;
      m.stmt_id = s.id;
      m.kind = MicroOp::Kind::NewObj;
      m.dst = layout_->slot_of(s.lhs->name);
      m.name = s.expr->name;
      emit(std::move(m));
      emit_sync_ops(s);
      break;
    }
    case NormKind::Print: {
      ensure(h);
      MicroOp m;
      m.stmt_id = s.id;
      m.kind = MicroOp::Kind::Print;
      for (const auto &a : s.args)
        m.args.push_back(operand(*a));
      emit(std::move(m));
      break;
    }
    case NormKind::Call: {
      ensure(h);
      Terminator t;
      t.kind = Terminator::Kind::Call;
      t.callee = s.expr->name;
      for (const auto &a : s.expr->args)
        t.args.push_back(operand(*a));
      uint32_t ret_bid = new_block();
      t.ret_to = ret_bid;
      seal(std::move(t));
      start(ret_bid);
      if (s.kind == Stmt::Kind::Assign) {
        MicroOp m;
        m.stmt_id = s.id;
        m.kind = MicroOp::Kind::PopRet;
        m.dst = layout_->slot_of(s.lhs->name);
        emit(std::move(m));
      }
      break;
    }
    case NormKind::Query: {
      MicroOp m;
      m.stmt_id = s.id;
      m.kind = MicroOp::Kind::Query;
      m.name = s.expr->str_val;
      for (const auto &a : s.expr->args)
        m.args.push_back(operand(*a));
      if (s.kind == Stmt::Kind::Assign) {
        m.has_dst = true;
        m.dst = layout_->slot_of(s.lhs->name);
      }
      if (h == Host::Db) {
        ensure(Host::Db);
        emit(std::move(m));
        emit_sync_ops(s);
      } else {
        // remote database operation: detour through a DB stub block
        ensure(Host::App);
        uint32_t stub = new_block(Host::Db);
        uint32_t cont = new_block();
        Terminator to_stub;
        to_stub.kind = Terminator::Kind::Goto;
        to_stub.target = stub;
        seal(std::move(to_stub));
        bool ship_rows = m.has_dst;
        int rows_slot = m.dst;
        blk(stub).ops.push_back(std::move(m));
        if (ship_rows) {
          // the fresh rowset must reach its APP home before any use
          MicroOp send;
          send.stmt_id = s.id;
          send.kind = MicroOp::Kind::SendNative;
          send.obj = rows_slot;
          blk(stub).ops.push_back(std::move(send));
        }
        Terminator back;
        back.kind = Terminator::Kind::Goto;
        back.target = cont;
        blk(stub).term = std::move(back);
        start(cont);
        emit_sync_ops(s);
      }
      break;
    }
    case NormKind::IfHead: {
      ensure(h);
      Terminator t;
      t.kind = Terminator::Kind::Branch;
      t.cond = operand(*s.expr);
      uint32_t then_bid = s.body.empty() ? 0 : new_block();
      uint32_t else_bid = s.else_body.empty() ? 0 : new_block();
      uint32_t join = new_block();
      t.target = s.body.empty() ? join : then_bid;
      t.alt = s.else_body.empty() ? join : else_bid;
      seal(std::move(t));
      if (!s.body.empty()) {
        start(then_bid);
        lower_stmts(s.body);
        if (cur_ != -1) {
          Terminator g;
          g.kind = Terminator::Kind::Goto;
          g.target = join;
          seal(std::move(g));
        }
      }
      if (!s.else_body.empty()) {
        start(else_bid);
        lower_stmts(s.else_body);
        if (cur_ != -1) {
          Terminator g;
          g.kind = Terminator::Kind::Goto;
          g.target = join;
          seal(std::move(g));
        }
      }
      start(join);
      break;
    }
    case NormKind::LoopHead: {
      uint32_t loop_entry = new_block();
      {
        Terminator g;
        g.kind = Terminator::Kind::Goto;
        g.target = loop_entry;
        seal(std::move(g));
      }
      start(loop_entry);
      lower_stmts(s.cond_prelude);
      ensure(h); // the test itself
      Terminator t;
      t.kind = Terminator::Kind::Branch;
      t.cond = operand(*s.expr);
      uint32_t body_bid = s.body.empty() ? loop_entry : new_block();
      uint32_t exit_bid = new_block();
      t.target = body_bid;
      t.alt = exit_bid;
      seal(std::move(t));
      if (!s.body.empty()) {
        start(body_bid);
        lower_stmts(s.body);
        if (cur_ != -1) {
          Terminator g;
          g.kind = Terminator::Kind::Goto;
          g.target = loop_entry;
          seal(std::move(g));
        }
      }
      start(exit_bid);
      break;
    }
    case NormKind::Return: {
      ensure(h);
      Terminator t;
      t.kind = Terminator::Kind::Ret;
      if (s.expr) {
        t.value = operand(*s.expr);
        t.has_value = true;
      }
      seal(std::move(t));
      break;
    }
    }
  }

  // Pending hosts resolve to the successor's host, then the predecessor's,
  // so glue blocks never introduce phantom transfers.
  void resolve_pending_hosts(size_t first_block) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = first_block; i < out_.blocks.size(); ++i) {
        if (host_set_[i])
          continue;
        const Terminator &t = out_.blocks[i].term;
        std::optional<Host> h;
        if (t.kind == Terminator::Kind::Goto && host_set_[t.target])
          h = out_.blocks[t.target].host;
        else if (t.kind == Terminator::Kind::Branch && host_set_[t.target])
          h = out_.blocks[t.target].host;
        else if (t.kind == Terminator::Kind::Call && host_set_[t.ret_to])
          h = out_.blocks[t.ret_to].host;
        if (h) {
          out_.blocks[i].host = *h;
          host_set_[i] = true;
          changed = true;
        }
      }
      // fall back to predecessors for tail blocks (implicit returns)
      for (size_t i = first_block; i < out_.blocks.size(); ++i) {
        if (host_set_[i])
          continue;
        for (size_t j = first_block; j < out_.blocks.size(); ++j) {
          if (!host_set_[j])
            continue;
          const Terminator &t = out_.blocks[j].term;
          bool points_here =
              (t.kind == Terminator::Kind::Goto && t.target == i) ||
              (t.kind == Terminator::Kind::Branch && (t.target == i || t.alt == i)) ||
              (t.kind == Terminator::Kind::Call && t.ret_to == i);
          if (points_here) {
            out_.blocks[i].host = out_.blocks[j].host;
            host_set_[i] = true;
            changed = true;
            break;
          }
        }
      }
    }
    for (size_t i = first_block; i < out_.blocks.size(); ++i)
      host_set_[i] = true; // leftovers default to APP
  }
};

std::string operand_text(const Operand &o) {
  if (o.is_const)
    return value_to_text(o.const_val);
  return "[" + std::to_string(o.slot) + "]";
}

} // namespace

std::string LoweredProgram::dump_blocks() const {
  std::ostringstream os;
  os << "pyxblocks v1\n";
  for (const auto &l : layouts) {
    os << "layout " << l.name << " frame " << l.frame_size << " entry " << l.entry_block
       << " slots";
    for (size_t i = 0; i < l.slot_names.size(); ++i)
      os << ' ' << i << '=' << l.slot_names[i];
    os << '\n';
  }
  for (const auto &c : classes) {
    os << "class " << c.cls << " app";
    for (const auto &f : c.app_fields)
      os << ' ' << f.name;
    os << " db";
    for (const auto &f : c.db_fields)
      os << ' ' << f.name;
    os << '\n';
  }
  for (const auto &w : wrappers)
    os << "wrapper " << w.func << " entry " << w.entry_block << " args "
       << w.arg_count << '\n';
  for (const auto &b : blocks) {
    os << "block " << b.id << ' ' << b.name << ' ' << host_name(b.host) << '\n';
    for (const auto &op : b.ops) {
      os << "  ";
      switch (op.kind) {
      case MicroOp::Kind::Move:
        os << "move [" << op.dst << "] " << operand_text(op.a);
        break;
      case MicroOp::Kind::Bin:
        os << "bin [" << op.dst << "] " << operand_text(op.a) << ' '
           << binop_name(op.bin) << ' ' << operand_text(op.b);
        break;
      case MicroOp::Kind::Un:
        os << "un [" << op.dst << "] " << unop_name(op.un) << operand_text(op.a);
        break;
      case MicroOp::Kind::FieldLoad:
        os << "fldld [" << op.dst << "] [" << op.obj << "]." << op.name;
        break;
      case MicroOp::Kind::FieldStore:
        os << "fldst [" << op.obj << "]." << op.name << ' ' << operand_text(op.a);
        break;
      case MicroOp::Kind::ArrLoad:
        os << "arrld [" << op.dst << "] [" << op.obj << "][" << operand_text(op.a) << ']';
        break;
      case MicroOp::Kind::ArrStore:
        os << "arrst [" << op.obj << "][" << operand_text(op.a) << "] "
           << operand_text(op.b);
        break;
      case MicroOp::Kind::ArrLen:
        os << "arrlen [" << op.dst << "] [" << op.obj << ']';
        break;
      case MicroOp::Kind::NewArr:
        os << "newarr [" << op.dst << "] " << value_kind_name(op.elem) << '['
           << operand_text(op.a) << ']';
        break;
      case MicroOp::Kind::NewObj:
        os << "newobj [" << op.dst << "] " << op.name;
        break;
      case MicroOp::Kind::Print: {
        os << "print";
        for (const auto &a : op.args)
          os << ' ' << operand_text(a);
        break;
      }
      case MicroOp::Kind::Query: {
        os << "query";
        if (op.has_dst)
          os << " [" << op.dst << ']';
        os << " \"" << op.name << '"';
        for (const auto &a : op.args)
          os << ' ' << operand_text(a);
        break;
      }
      case MicroOp::Kind::SendApp:
        os << "sendAPP [" << op.obj << ']';
        break;
      case MicroOp::Kind::SendDb:
        os << "sendDB [" << op.obj << ']';
        break;
      case MicroOp::Kind::SendNative:
        os << "sendNative [" << op.obj << ']';
        break;
      case MicroOp::Kind::PopRet:
        os << "popret [" << op.dst << ']';
        break;
      }
      os << "  ; s" << op.stmt_id << '\n';
    }
    os << "  ";
    const Terminator &t = b.term;
    switch (t.kind) {
    case Terminator::Kind::Goto:
      os << "goto " << blocks[t.target].name;
      break;
    case Terminator::Kind::Branch:
      os << "if " << operand_text(t.cond) << " goto " << blocks[t.target].name
         << " else " << blocks[t.alt].name;
      break;
    case Terminator::Kind::Call: {
      os << "call " << t.callee << '(';
      for (size_t i = 0; i < t.args.size(); ++i)
        os << (i ? ", " : "") << operand_text(t.args[i]);
      os << ") ret " << blocks[t.ret_to].name;
      break;
    }
    case Terminator::Kind::Ret:
      os << "ret";
      if (t.has_value)
        os << ' ' << operand_text(t.value);
      break;
    case Terminator::Kind::Halt:
      os << "halt";
      break;
    }
    os << '\n';
  }
  return os.str();
}

LoweredProgram lower(const PyxilProgram &px) { return Lowerer(px).run(); }

} // namespace pyx
