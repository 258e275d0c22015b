#include "engine.hpp"

#include <algorithm>
#include <sstream>

namespace pyx::rt {

void HostEngine::fail(const std::string &msg) const {
  throw Diag("session", msg).at_stmt(cur_stmt_);
}

Frame &HostEngine::frame() {
  if (stack_.empty())
    fail("empty stack");
  return stack_.back();
}

Value HostEngine::load(const Operand &o) {
  if (o.is_const)
    return o.const_val;
  Frame &f = frame();
  if (o.slot < 0 || static_cast<size_t>(o.slot) >= f.slots.size())
    fail("slot out of range");
  return f.slots[static_cast<size_t>(o.slot)];
}

void HostEngine::store_slot(int slot, Value v) {
  Frame &f = frame();
  if (slot < 0 || static_cast<size_t>(slot) >= f.slots.size())
    fail("slot out of range");
  f.slots[static_cast<size_t>(slot)] = std::move(v);
  uint32_t fi = static_cast<uint32_t>(stack_.size() - 1);
  if (fi < synced_depth_)
    dirty_slots_.insert({fi, static_cast<uint32_t>(slot)});
}

uint8_t HostEngine::part_of_field(const std::string &cls, const std::string &field,
                                  const FieldDecl **decl, size_t *index) const {
  const SplitClassLayout &layout = bundle_->prog.cls(cls);
  for (size_t i = 0; i < layout.app_fields.size(); ++i)
    if (layout.app_fields[i].name == field) {
      *decl = &layout.app_fields[i];
      *index = i;
      return 0;
    }
  for (size_t i = 0; i < layout.db_fields.size(); ++i)
    if (layout.db_fields[i].name == field) {
      *decl = &layout.db_fields[i];
      *index = i;
      return 1;
    }
  fail("class " + cls + " has no field '" + field + "'");
}

ObjPart &HostEngine::materialize_part(uint64_t id, uint8_t part) {
  auto key = std::make_pair(id, part);
  auto it = heap_.parts.find(key);
  if (it != heap_.parts.end())
    return it->second;
  auto cls_it = heap_.obj_class.find(id);
  if (cls_it == heap_.obj_class.end())
    fail("object " + std::to_string(id) + " has no class registration on this host");
  const SplitClassLayout &layout = bundle_->prog.cls(cls_it->second);
  const auto &fields = part == 0 ? layout.app_fields : layout.db_fields;
  ObjPart p;
  for (const auto &f : fields)
    p.fields.push_back(default_value_for(f.type));
  return heap_.parts.emplace(key, std::move(p)).first->second;
}

void HostEngine::mark_dirty(PendingSend s) {
  if (std::find(batch_.begin(), batch_.end(), s) == batch_.end())
    batch_.push_back(s); // idempotent per batch window
}

void HostEngine::start_session(const EntryWrapper &w, const std::vector<Value> &args,
                               uint64_t next_object_id) {
  if (args.size() != w.arg_count)
    fail("entry '" + w.func + "' takes " + std::to_string(w.arg_count) + " arguments");
  const FuncLayout &layout = bundle_->prog.layout(w.func);
  Frame f;
  f.func = w.func;
  f.slots.assign(layout.frame_size, Ref{ValueKind::ObjectRef, 0});
  for (size_t i = 0; i < args.size(); ++i)
    f.slots[i] = args[i];
  f.return_pc = kHaltBlock;
  stack_.clear();
  stack_.push_back(std::move(f));
  synced_depth_ = 0;
  dirty_slots_.clear();
  batch_.clear();
  new_objects_.clear();
  retval_ = Ref{ValueKind::ObjectRef, 0};
  next_object_id_ = next_object_id;
}

uint32_t HostEngine::exec_block(const ExecutionBlock &b) {
  if (b.host != host_)
    fail("block " + b.name + " executed on the wrong host");
  for (const auto &op : b.ops) {
    exec_op(op);
    ++ops_executed;
  }
  const Terminator &t = b.term;
  switch (t.kind) {
  case Terminator::Kind::Goto:
    return t.target;
  case Terminator::Kind::Branch: {
    bool c;
    try {
      c = value_truthy(load(t.cond));
    } catch (Diag &d) {
      throw d.at_stmt(cur_stmt_);
    }
    return c ? t.target : t.alt;
  }
  case Terminator::Kind::Call: {
    const FuncLayout &layout = bundle_->prog.layout(t.callee);
    Frame f;
    f.func = t.callee;
    f.slots.assign(layout.frame_size, Ref{ValueKind::ObjectRef, 0});
    for (size_t i = 0; i < t.args.size(); ++i)
      f.slots[i] = load(t.args[i]);
    f.return_pc = t.ret_to;
    stack_.push_back(std::move(f));
    return layout.entry_block;
  }
  case Terminator::Kind::Ret: {
    retval_ = t.has_value ? load(t.value) : Value{Ref{ValueKind::ObjectRef, 0}};
    uint32_t pc = frame().return_pc;
    stack_.pop_back();
    synced_depth_ = std::min(synced_depth_, stack_.size());
    return pc;
  }
  case Terminator::Kind::Halt:
    return kHaltBlock;
  }
  fail("bad terminator");
}

void HostEngine::exec_op(const MicroOp &op) {
  cur_stmt_ = op.stmt_id;
  auto as_obj = [&](int slot) -> uint64_t {
    Value v = load(Operand::of_slot(slot));
    const Ref *r = std::get_if<Ref>(&v);
    if (!r || r->kind != ValueKind::ObjectRef)
      fail("expected an object reference");
    if (r->id == 0)
      fail("field access on null");
    return r->id;
  };
  auto as_arr = [&](int slot) -> ArrState & {
    Value v = load(Operand::of_slot(slot));
    const Ref *r = std::get_if<Ref>(&v);
    if (!r || r->kind != ValueKind::ArrayRef)
      fail("expected an array reference");
    if (r->id == 0)
      fail("array access on null");
    auto it = heap_.arrays.find(r->id);
    if (it == heap_.arrays.end())
      fail("array " + std::to_string(r->id) +
           " not present on this host (missing synchronization?)");
    return it->second;
  };
  auto idx_of = [&](const ArrState &a, const Operand &o) -> size_t {
    Value v = load(o);
    const int64_t *i = std::get_if<int64_t>(&v);
    if (!i)
      fail("array index is not an int");
    if (*i < 0 || static_cast<uint64_t>(*i) >= a.data.size())
      fail("array index " + std::to_string(*i) + " out of bounds (length " +
           std::to_string(a.data.size()) + ")");
    return static_cast<size_t>(*i);
  };

  switch (op.kind) {
  case MicroOp::Kind::Move:
    store_slot(op.dst, load(op.a));
    break;
  case MicroOp::Kind::Bin: {
    try {
      store_slot(op.dst, eval_binary(op.bin, load(op.a), load(op.b)));
    } catch (Diag &d) {
      throw d.at_stmt(op.stmt_id);
    }
    break;
  }
  case MicroOp::Kind::Un: {
    try {
      store_slot(op.dst, eval_unary(op.un, load(op.a)));
    } catch (Diag &d) {
      throw d.at_stmt(op.stmt_id);
    }
    break;
  }
  case MicroOp::Kind::FieldLoad: {
    uint64_t id = as_obj(op.obj);
    const FieldDecl *decl;
    size_t index;
    uint8_t part = part_of_field(heap_.obj_class.at(id), op.name, &decl, &index);
    ObjPart &p = materialize_part(id, part);
    bool remote_part = (part == 0) != (host_ == Host::App);
    if (truth_ && remote_part) {
      auto t = truth_->parts.find({id, part});
      if (t != truth_->parts.end() && p.version < t->second)
        ++truth_->stale_reads;
    }
    store_slot(op.dst, p.fields.at(index));
    break;
  }
  case MicroOp::Kind::FieldStore: {
    uint64_t id = as_obj(op.obj);
    const FieldDecl *decl;
    size_t index;
    uint8_t part = part_of_field(heap_.obj_class.at(id), op.name, &decl, &index);
    ObjPart &p = materialize_part(id, part);
    Value v;
    try {
      v = coerce_store_value(load(op.a), decl->type.kind,
                             "field " + heap_.obj_class.at(id) + "." + op.name);
    } catch (Diag &d) {
      throw d.at_stmt(op.stmt_id);
    }
    p.fields.at(index) = std::move(v);
    if (truth_)
      p.version = ++truth_->parts[{id, part}];
    else
      ++p.version;
    break;
  }
  case MicroOp::Kind::ArrLoad: {
    ArrState &a = as_arr(op.obj);
    if (truth_ && a.home != host_) {
      uint64_t id = std::get<Ref>(load(Operand::of_slot(op.obj))).id;
      auto t = truth_->arrays.find(id);
      if (t != truth_->arrays.end() && a.version < t->second)
        ++truth_->stale_reads;
    }
    store_slot(op.dst, a.data[idx_of(a, op.a)]);
    break;
  }
  case MicroOp::Kind::ArrStore: {
    ArrState &a = as_arr(op.obj);
    size_t i = idx_of(a, op.a);
    Value v;
    try {
      v = coerce_store_value(load(op.b), a.elem, "array element");
    } catch (Diag &d) {
      throw d.at_stmt(op.stmt_id);
    }
    a.data[i] = std::move(v);
    uint64_t id = std::get<Ref>(load(Operand::of_slot(op.obj))).id;
    if (truth_)
      a.version = ++truth_->arrays[id];
    else
      ++a.version;
    break;
  }
  case MicroOp::Kind::ArrLen: {
    ArrState &a = as_arr(op.obj);
    store_slot(op.dst, static_cast<int64_t>(a.data.size()));
    break;
  }
  case MicroOp::Kind::NewArr: {
    Value n = load(op.a);
    const int64_t *len = std::get_if<int64_t>(&n);
    if (!len || *len < 0)
      fail("array length must be a non-negative int");
    uint64_t id = next_object_id_++;
    ArrState a;
    a.elem = op.elem;
    a.home = host_;
    a.data.assign(static_cast<size_t>(*len), default_scalar_value(op.elem));
    heap_.arrays[id] = std::move(a);
    store_slot(op.dst, Ref{ValueKind::ArrayRef, id});
    break;
  }
  case MicroOp::Kind::NewObj: {
    uint64_t id = next_object_id_++;
    heap_.obj_class[id] = op.name;
    new_objects_.insert(id);
    materialize_part(id, 0);
    materialize_part(id, 1);
    store_slot(op.dst, Ref{ValueKind::ObjectRef, id});
    break;
  }
  case MicroOp::Kind::Print: {
    if (host_ != Host::App || !console_)
      fail("print executed off the application host");
    std::ostringstream os;
    for (size_t i = 0; i < op.args.size(); ++i) {
      if (i)
        os << ' ';
      os << value_to_text(load(op.args[i]));
    }
    console_->push_back(os.str());
    break;
  }
  case MicroOp::Kind::Query: {
    if (host_ != Host::Db || !db_)
      fail("database operation executed off the database host");
    QueryTemplate q = parse_query_template(op.name);
    std::vector<Value> args;
    for (const auto &a : op.args)
      args.push_back(load(a));
    ValueKind result_kind = ValueKind::Int;
    std::optional<std::vector<Value>> rows;
    try {
      rows = db_->run(q, args, &result_kind);
    } catch (Diag &d) {
      throw d.at_stmt(op.stmt_id);
    }
    if (op.has_dst) {
      uint64_t id = next_object_id_++;
      ArrState a;
      a.elem = result_kind;
      a.home = host_;
      a.data = rows ? std::move(*rows) : std::vector<Value>{};
      heap_.arrays[id] = std::move(a);
      store_slot(op.dst, Ref{ValueKind::ArrayRef, id});
    }
    break;
  }
  case MicroOp::Kind::SendApp:
  case MicroOp::Kind::SendDb: {
    uint64_t id = as_obj(op.obj);
    mark_dirty(PendingSend{op.kind == MicroOp::Kind::SendApp ? uint8_t{0} : uint8_t{1}, id});
    break;
  }
  case MicroOp::Kind::SendNative: {
    Value v = load(Operand::of_slot(op.obj));
    const Ref *r = std::get_if<Ref>(&v);
    if (!r || r->kind != ValueKind::ArrayRef || r->id == 0)
      fail("sendNative takes an array");
    mark_dirty(PendingSend{2, r->id});
    break;
  }
  case MicroOp::Kind::PopRet:
    store_slot(op.dst, retval_);
    break;
  }
}

std::string HostEngine::build_transfer(uint32_t next_block) {
  WireWriter w;
  w.u32(next_block);
  uint32_t base = static_cast<uint32_t>(std::min(synced_depth_, stack_.size()));
  w.u32(base);
  w.u32(static_cast<uint32_t>(stack_.size() - base));
  for (size_t i = base; i < stack_.size(); ++i) {
    const Frame &f = stack_[i];
    w.str(f.func);
    w.u32(f.return_pc);
    w.u32(static_cast<uint32_t>(f.slots.size()));
    for (const auto &v : f.slots)
      w.value(v);
  }
  // changed slots of frames the peer already has
  std::vector<std::pair<uint32_t, uint32_t>> dirty;
  for (const auto &d : dirty_slots_)
    if (d.first < base)
      dirty.push_back(d);
  w.u32(static_cast<uint32_t>(dirty.size()));
  for (const auto &[fi, slot] : dirty) {
    w.u32(fi);
    w.u32(slot);
    w.value(stack_[fi].slots[slot]);
  }
  w.value(retval_);
  w.u64(next_object_id_);
  w.u32(static_cast<uint32_t>(new_objects_.size()));
  for (uint64_t id : new_objects_) {
    w.u64(id);
    w.str(heap_.obj_class.at(id));
  }
  w.u32(static_cast<uint32_t>(batch_.size()));
  for (const auto &s : batch_) {
    w.u8(s.kind);
    w.u64(s.id);
    if (s.kind == 2) {
      const ArrState &a = heap_.arrays.at(s.id);
      w.u8(static_cast<uint8_t>(a.elem));
      w.u8(a.home == Host::Db ? 1 : 0);
      w.u64(a.version);
      w.u32(static_cast<uint32_t>(a.data.size()));
      for (const auto &v : a.data)
        w.value(v);
    } else {
      const ObjPart &p = heap_.parts.at({s.id, s.kind});
      w.str(heap_.obj_class.at(s.id));
      w.u64(p.version);
      w.u32(static_cast<uint32_t>(p.fields.size()));
      for (const auto &v : p.fields)
        w.value(v);
    }
  }
  synced_depth_ = stack_.size();
  dirty_slots_.clear();
  batch_.clear();
  new_objects_.clear();
  return w.take();
}

uint32_t HostEngine::apply_transfer(const std::string &payload) {
  WireReader r(payload);
  uint32_t next = r.u32();
  uint32_t base = r.u32();
  if (base > stack_.size())
    fail("malformed frame: stack base beyond replica depth");
  stack_.resize(base);
  uint32_t pushed = r.u32();
  for (uint32_t i = 0; i < pushed; ++i) {
    Frame f;
    f.func = r.str();
    f.return_pc = r.u32();
    uint32_t n = r.u32();
    f.slots.reserve(n);
    for (uint32_t k = 0; k < n; ++k)
      f.slots.push_back(r.value());
    stack_.push_back(std::move(f));
  }
  uint32_t dirty = r.u32();
  for (uint32_t i = 0; i < dirty; ++i) {
    uint32_t fi = r.u32();
    uint32_t slot = r.u32();
    Value v = r.value();
    if (fi >= stack_.size() || slot >= stack_[fi].slots.size())
      fail("malformed frame: dirty slot outside replica");
    stack_[fi].slots[slot] = std::move(v);
  }
  retval_ = r.value();
  next_object_id_ = r.u64();
  uint32_t objs = r.u32();
  for (uint32_t i = 0; i < objs; ++i) {
    uint64_t id = r.u64();
    heap_.obj_class[id] = r.str();
  }
  uint32_t updates = r.u32();
  for (uint32_t i = 0; i < updates; ++i) {
    uint8_t kind = r.u8();
    uint64_t id = r.u64();
    if (kind == 2) {
      ArrState a;
      a.elem = static_cast<ValueKind>(r.u8());
      a.home = r.u8() ? Host::Db : Host::App;
      a.version = r.u64();
      uint32_t n = r.u32();
      a.data.reserve(n);
      for (uint32_t k = 0; k < n; ++k)
        a.data.push_back(r.value());
      heap_.arrays[id] = std::move(a);
    } else if (kind == 0 || kind == 1) {
      std::string cls = r.str();
      heap_.obj_class[id] = cls;
      ObjPart p;
      p.version = r.u64();
      uint32_t n = r.u32();
      p.fields.reserve(n);
      for (uint32_t k = 0; k < n; ++k)
        p.fields.push_back(r.value());
      heap_.parts[{id, kind}] = std::move(p);
    } else {
      fail("malformed frame: bad heap update kind");
    }
  }
  if (!r.done())
    fail("malformed frame: trailing bytes");
  synced_depth_ = stack_.size();
  dirty_slots_.clear();
  return next;
}

} // namespace pyx::rt
