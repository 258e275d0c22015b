#include "pyx/runtime.hpp"

#include "json.hpp"

#include <cstring>

// Artifact bundle: block tables, layouts, split classes and wrappers in one
// canonical JSON document shared by both hosts. Doubles are stored as their
// IEEE bit patterns so the bundle round-trips bit-exactly; the artifact hash
// is the FNV-1a of the canonical form with the hash field zeroed.

namespace pyx {

namespace {

using Json = nlohmann::ordered_json;

Json value_json(const Value &v) {
  struct Visitor {
    Json operator()(int64_t i) const { return Json{{"k", "int"}, {"v", i}}; }
    Json operator()(double d) const {
      uint64_t bits;
      std::memcpy(&bits, &d, 8);
      return Json{{"k", "float"}, {"bits", bits}};
    }
    Json operator()(bool b) const { return Json{{"k", "bool"}, {"v", b}}; }
    Json operator()(const std::string &s) const {
      return Json{{"k", "string"}, {"v", s}};
    }
    Json operator()(const Ref &r) const {
      return Json{{"k", r.kind == ValueKind::ArrayRef ? "arr" : "obj"}, {"v", r.id}};
    }
  };
  return std::visit(Visitor{}, v);
}

Value value_from_json(const Json &j) {
  std::string k = j.at("k");
  if (k == "int")
    return j.at("v").get<int64_t>();
  if (k == "float") {
    uint64_t bits = j.at("bits").get<uint64_t>();
    double d;
    std::memcpy(&d, &bits, 8);
    return d;
  }
  if (k == "bool")
    return j.at("v").get<bool>();
  if (k == "string")
    return j.at("v").get<std::string>();
  if (k == "obj")
    return Ref{ValueKind::ObjectRef, j.at("v").get<uint64_t>()};
  if (k == "arr")
    return Ref{ValueKind::ArrayRef, j.at("v").get<uint64_t>()};
  throw Diag("format", "bad value kind in bundle: " + k);
}

Json operand_json(const Operand &o) {
  if (o.is_const)
    return Json{{"const", value_json(o.const_val)}};
  return Json{{"slot", o.slot}};
}

Operand operand_from_json(const Json &j) {
  if (j.contains("const"))
    return Operand::constant(value_from_json(j.at("const")));
  return Operand::of_slot(j.at("slot").get<int>());
}

const char *kind_name(MicroOp::Kind k) {
  switch (k) {
  case MicroOp::Kind::Move: return "move";
  case MicroOp::Kind::Bin: return "bin";
  case MicroOp::Kind::Un: return "un";
  case MicroOp::Kind::FieldLoad: return "fldld";
  case MicroOp::Kind::FieldStore: return "fldst";
  case MicroOp::Kind::ArrLoad: return "arrld";
  case MicroOp::Kind::ArrStore: return "arrst";
  case MicroOp::Kind::ArrLen: return "arrlen";
  case MicroOp::Kind::NewArr: return "newarr";
  case MicroOp::Kind::NewObj: return "newobj";
  case MicroOp::Kind::Print: return "print";
  case MicroOp::Kind::Query: return "query";
  case MicroOp::Kind::SendApp: return "sendapp";
  case MicroOp::Kind::SendDb: return "senddb";
  case MicroOp::Kind::SendNative: return "sendnative";
  case MicroOp::Kind::PopRet: return "popret";
  }
  return "?";
}

MicroOp::Kind kind_from_name(const std::string &s) {
  static const std::map<std::string, MicroOp::Kind> m = {
      {"move", MicroOp::Kind::Move},       {"bin", MicroOp::Kind::Bin},
      {"un", MicroOp::Kind::Un},           {"fldld", MicroOp::Kind::FieldLoad},
      {"fldst", MicroOp::Kind::FieldStore},{"arrld", MicroOp::Kind::ArrLoad},
      {"arrst", MicroOp::Kind::ArrStore},  {"arrlen", MicroOp::Kind::ArrLen},
      {"newarr", MicroOp::Kind::NewArr},   {"newobj", MicroOp::Kind::NewObj},
      {"print", MicroOp::Kind::Print},     {"query", MicroOp::Kind::Query},
      {"sendapp", MicroOp::Kind::SendApp}, {"senddb", MicroOp::Kind::SendDb},
      {"sendnative", MicroOp::Kind::SendNative}, {"popret", MicroOp::Kind::PopRet},
  };
  auto it = m.find(s);
  if (it == m.end())
    throw Diag("format", "bad micro-op kind in bundle: " + s);
  return it->second;
}

Json field_json(const FieldDecl &f) {
  Json j;
  j["name"] = f.name;
  j["type"] = f.type.str();
  return j;
}

TypeRef type_from_str(const std::string &s) {
  TypeRef t;
  auto scalar = [&](const std::string &n, ValueKind k) {
    if (s == n) {
      t.kind = k;
      return true;
    }
    if (s == n + "[]") {
      t.kind = ValueKind::ArrayRef;
      t.elem = k;
      return true;
    }
    return false;
  };
  if (scalar("int", ValueKind::Int) || scalar("float", ValueKind::Float) ||
      scalar("bool", ValueKind::Bool) || scalar("string", ValueKind::String))
    return t;
  t.kind = ValueKind::ObjectRef;
  t.class_name = s;
  return t;
}

} // namespace

std::string Bundle::serialize() const {
  Json j;
  j["format"] = "pyxbundle";
  j["version"] = 1;
  j["hash"] = hash;
  j["program"] = program_name;
  j["budget"] = budget;

  Json layouts = Json::array();
  for (const auto &l : prog.layouts) {
    Json lj;
    lj["name"] = l.name;
    lj["entry"] = l.entry_block;
    lj["frame"] = l.frame_size;
    lj["slots"] = l.slot_names;
    layouts.push_back(std::move(lj));
  }
  j["layouts"] = std::move(layouts);

  Json classes = Json::array();
  for (const auto &c : prog.classes) {
    Json cj;
    cj["name"] = c.cls;
    Json app = Json::array(), db = Json::array();
    for (const auto &f : c.app_fields)
      app.push_back(field_json(f));
    for (const auto &f : c.db_fields)
      db.push_back(field_json(f));
    cj["app"] = std::move(app);
    cj["db"] = std::move(db);
    classes.push_back(std::move(cj));
  }
  j["classes"] = std::move(classes);

  Json wrappers = Json::array();
  for (const auto &w : prog.wrappers)
    wrappers.push_back(Json{{"func", w.func}, {"entry", w.entry_block},
                            {"args", w.arg_count}});
  j["wrappers"] = std::move(wrappers);

  Json blocks = Json::array();
  for (const auto &b : prog.blocks) {
    Json bj;
    bj["id"] = b.id;
    bj["name"] = b.name;
    bj["host"] = host_name(b.host);
    Json ops = Json::array();
    for (const auto &op : b.ops) {
      Json oj;
      oj["k"] = kind_name(op.kind);
      oj["stmt"] = op.stmt_id;
      if (op.dst >= 0)
        oj["dst"] = op.dst;
      if (op.obj >= 0)
        oj["obj"] = op.obj;
      if (op.a.is_const || op.a.slot >= 0)
        oj["a"] = operand_json(op.a);
      if (op.b.is_const || op.b.slot >= 0)
        oj["b"] = operand_json(op.b);
      if (op.kind == MicroOp::Kind::Bin)
        oj["op"] = binop_name(op.bin);
      if (op.kind == MicroOp::Kind::Un)
        oj["op"] = unop_name(op.un);
      if (!op.name.empty())
        oj["name"] = op.name;
      if (op.kind == MicroOp::Kind::NewArr)
        oj["elem"] = value_kind_name(op.elem);
      if (op.has_dst)
        oj["has_dst"] = true;
      if (!op.args.empty()) {
        Json args = Json::array();
        for (const auto &arg : op.args)
          args.push_back(operand_json(arg));
        oj["args"] = std::move(args);
      }
      ops.push_back(std::move(oj));
    }
    bj["ops"] = std::move(ops);
    Json tj;
    const Terminator &t = b.term;
    switch (t.kind) {
    case Terminator::Kind::Goto:
      tj["k"] = "goto";
      tj["to"] = t.target;
      break;
    case Terminator::Kind::Branch:
      tj["k"] = "branch";
      tj["cond"] = operand_json(t.cond);
      tj["then"] = t.target;
      tj["else"] = t.alt;
      break;
    case Terminator::Kind::Call: {
      tj["k"] = "call";
      tj["callee"] = t.callee;
      tj["ret"] = t.ret_to;
      Json args = Json::array();
      for (const auto &arg : t.args)
        args.push_back(operand_json(arg));
      tj["args"] = std::move(args);
      break;
    }
    case Terminator::Kind::Ret:
      tj["k"] = "ret";
      if (t.has_value)
        tj["value"] = operand_json(t.value);
      break;
    case Terminator::Kind::Halt:
      tj["k"] = "halt";
      break;
    }
    bj["term"] = std::move(tj);
    blocks.push_back(std::move(bj));
  }
  j["blocks"] = std::move(blocks);
  j["pyxil"] = pyxil_text;
  j["report"] = placement_report;
  return j.dump(1);
}

uint64_t Bundle::compute_hash(const Bundle &b) {
  Bundle copy = b;
  copy.hash = 0;
  return fnv1a(copy.serialize());
}

Bundle Bundle::deserialize(const std::string &text) {
  Json j = Json::parse(text);
  if (j.value("format", "") != std::string("pyxbundle"))
    throw Diag("format", "not a bundle file");
  Bundle b;
  b.hash = j.at("hash").get<uint64_t>();
  b.program_name = j.at("program").get<std::string>();
  b.budget = j.at("budget").get<int64_t>();
  for (const auto &lj : j.at("layouts")) {
    FuncLayout l;
    l.name = lj.at("name").get<std::string>();
    l.entry_block = lj.at("entry").get<uint32_t>();
    l.frame_size = lj.at("frame").get<uint32_t>();
    l.slot_names = lj.at("slots").get<std::vector<std::string>>();
    b.prog.layouts.push_back(std::move(l));
  }
  for (const auto &cj : j.at("classes")) {
    SplitClassLayout c;
    c.cls = cj.at("name").get<std::string>();
    for (const auto &fj : cj.at("app"))
      c.app_fields.push_back(FieldDecl{fj.at("name").get<std::string>(),
                                       type_from_str(fj.at("type").get<std::string>()),
                                       SourceLoc{}});
    for (const auto &fj : cj.at("db"))
      c.db_fields.push_back(FieldDecl{fj.at("name").get<std::string>(),
                                      type_from_str(fj.at("type").get<std::string>()),
                                      SourceLoc{}});
    b.prog.classes.push_back(std::move(c));
  }
  for (const auto &wj : j.at("wrappers")) {
    EntryWrapper w;
    w.func = wj.at("func").get<std::string>();
    w.entry_block = wj.at("entry").get<uint32_t>();
    w.arg_count = wj.at("args").get<size_t>();
    b.prog.wrappers.push_back(std::move(w));
  }
  for (const auto &bj : j.at("blocks")) {
    ExecutionBlock blk;
    blk.id = bj.at("id").get<uint32_t>();
    blk.name = bj.at("name").get<std::string>();
    blk.host = bj.at("host").get<std::string>() == "DB" ? Host::Db : Host::App;
    for (const auto &oj : bj.at("ops")) {
      MicroOp op;
      op.kind = kind_from_name(oj.at("k").get<std::string>());
      op.stmt_id = oj.at("stmt").get<uint32_t>();
      op.dst = oj.value("dst", -1);
      op.obj = oj.value("obj", -1);
      if (oj.contains("a"))
        op.a = operand_from_json(oj.at("a"));
      if (oj.contains("b"))
        op.b = operand_from_json(oj.at("b"));
      if (oj.contains("op")) {
        std::string o = oj.at("op").get<std::string>();
        if (op.kind == MicroOp::Kind::Bin) {
          static const std::map<std::string, BinOp> ops = {
              {"+", BinOp::Add}, {"-", BinOp::Sub}, {"*", BinOp::Mul},
              {"/", BinOp::Div}, {"%", BinOp::Mod}, {"==", BinOp::Eq},
              {"!=", BinOp::Ne}, {"<", BinOp::Lt},  {"<=", BinOp::Le},
              {">", BinOp::Gt},  {">=", BinOp::Ge}};
          op.bin = ops.at(o);
        } else {
          op.un = o == "!" ? UnOp::Not : UnOp::Neg;
        }
      }
      op.name = oj.value("name", "");
      if (oj.contains("elem")) {
        std::string e = oj.at("elem").get<std::string>();
        op.elem = e == "float"    ? ValueKind::Float
                  : e == "bool"   ? ValueKind::Bool
                  : e == "string" ? ValueKind::String
                                  : ValueKind::Int;
      }
      op.has_dst = oj.value("has_dst", false);
      if (oj.contains("args"))
        for (const auto &aj : oj.at("args"))
          op.args.push_back(operand_from_json(aj));
      blk.ops.push_back(std::move(op));
    }
    const Json &tj = bj.at("term");
    std::string k = tj.at("k").get<std::string>();
    Terminator &t = blk.term;
    if (k == "goto") {
      t.kind = Terminator::Kind::Goto;
      t.target = tj.at("to").get<uint32_t>();
    } else if (k == "branch") {
      t.kind = Terminator::Kind::Branch;
      t.cond = operand_from_json(tj.at("cond"));
      t.target = tj.at("then").get<uint32_t>();
      t.alt = tj.at("else").get<uint32_t>();
    } else if (k == "call") {
      t.kind = Terminator::Kind::Call;
      t.callee = tj.at("callee").get<std::string>();
      t.ret_to = tj.at("ret").get<uint32_t>();
      for (const auto &aj : tj.at("args"))
        t.args.push_back(operand_from_json(aj));
    } else if (k == "ret") {
      t.kind = Terminator::Kind::Ret;
      if (tj.contains("value")) {
        t.value = operand_from_json(tj.at("value"));
        t.has_value = true;
      }
    } else {
      t.kind = Terminator::Kind::Halt;
    }
    b.prog.blocks.push_back(std::move(blk));
  }
  b.pyxil_text = j.value("pyxil", "");
  b.placement_report = j.value("report", "");
  return b;
}

} // namespace pyx
