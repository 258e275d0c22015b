#include "pyx/analysis.hpp"

#include <sstream>

namespace pyx {

const char *edge_kind_name(EdgeKind k) {
  switch (k) {
  case EdgeKind::Control: return "control";
  case EdgeKind::Data: return "data";
  case EdgeKind::Update: return "update";
  case EdgeKind::Anti: return "anti";
  case EdgeKind::Output: return "output";
  }
  return "?";
}

std::string NodeId::str(const Program *p) const {
  switch (kind) {
  case Kind::Stmt:
    return "s:" + std::to_string(index);
  case Kind::Field: {
    if (p) {
      auto [cls, fld] = field_by_index(*p, static_cast<int>(index));
      return "f:" + cls + "." + fld;
    }
    return "f:" + std::to_string(index);
  }
  case Kind::DbCode:
    return "dbcode";
  case Kind::Console:
    return "console";
  }
  return "?";
}

NodeId NodeId::parse(const std::string &text, const Program *p) {
  if (text == "dbcode")
    return db_code();
  if (text == "console")
    return console();
  if (text.rfind("s:", 0) == 0)
    return stmt(static_cast<uint32_t>(std::stoul(text.substr(2))));
  if (text.rfind("f:", 0) == 0) {
    std::string body = text.substr(2);
    auto dot = body.find('.');
    if (dot == std::string::npos)
      return field(static_cast<int>(std::stoul(body)));
    if (!p)
      throw Diag("format", "field node needs a program for lookup: " + text);
    int idx = field_index(*p, body.substr(0, dot), body.substr(dot + 1));
    if (idx < 0)
      throw Diag("format", "unknown field node: " + text);
    return field(idx);
  }
  throw Diag("format", "bad node id: " + text);
}

std::string dump_deps(const Program &p, const std::vector<DepEdge> &edges) {
  std::ostringstream os;
  os << "pyxdeps v1\n";
  for (const auto &e : edges) {
    os << "edge " << edge_kind_name(e.kind) << ' ' << e.src.str(&p) << ' '
       << e.dst.str(&p);
    if (e.is_back_edge)
      os << " back";
    if (e.is_interprocedural)
      os << " interproc";
    os << '\n';
  }
  return os.str();
}

} // namespace pyx
