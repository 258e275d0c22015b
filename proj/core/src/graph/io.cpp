#include "pyx/graph.hpp"

#include <charconv>
#include <sstream>

namespace pyx {

namespace {

std::string weight_text(double w) {
  std::ostringstream os;
  os << format_double(w);
  return os.str();
}

double parse_weight(const std::string &s) { return std::stod(s); }

} // namespace

std::string dump_graph(const PartitionGraph &g, const Program *p) {
  std::ostringstream os;
  os << "pyxgraph v1\n";
  for (const auto &n : g.nodes) {
    os << "node " << n.id.str(p) << ' ' << pg_node_kind_name(n.kind) << " w "
       << n.weight;
    if (n.pin)
      os << " pin " << host_name(*n.pin);
    if (n.colocate_group)
      os << " group " << *n.colocate_group;
    if (!n.label.empty())
      os << " # " << n.label;
    os << '\n';
  }
  for (const auto &e : g.edges) {
    os << "edge " << edge_kind_name(e.kind) << ' ' << e.src.str(p) << ' '
       << e.dst.str(p);
    if (e.weighted)
      os << " w " << weight_text(e.weight);
    if (e.is_back_edge)
      os << " back";
    if (e.is_interprocedural)
      os << " interproc";
    os << '\n';
  }
  return os.str();
}

PartitionGraph parse_graph(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "pyxgraph v1")
    throw Diag("format", "bad graph header");
  PartitionGraph g;
  while (std::getline(in, line)) {
    auto hash = line.find(" # ");
    std::string label;
    if (hash != std::string::npos) {
      label = line.substr(hash + 3);
      line = line.substr(0, hash);
    }
    auto toks = split_ws(line);
    if (toks.empty())
      continue;
    if (toks[0] == "node") {
      if (toks.size() < 5 || toks[3] != "w")
        throw Diag("format", "bad node line: " + line);
      PGNode n;
      n.id = NodeId::parse(toks[1]);
      std::string kind = toks[2];
      n.kind = kind == "stmt"      ? PGNodeKind::Statement
               : kind == "field"   ? PGNodeKind::Field
               : kind == "db-code" ? PGNodeKind::DbCode
               : kind == "console" ? PGNodeKind::Console
                                   : throw Diag("format", "bad node kind " + kind);
      n.weight = std::stoull(toks[4]);
      n.label = label;
      for (size_t i = 5; i < toks.size(); ++i) {
        if (toks[i] == "pin" && i + 1 < toks.size()) {
          n.pin = toks[i + 1] == "DB" ? Host::Db : Host::App;
          ++i;
        } else if (toks[i] == "group" && i + 1 < toks.size()) {
          n.colocate_group = std::stoi(toks[i + 1]);
          ++i;
        }
      }
      g.nodes.push_back(std::move(n));
    } else if (toks[0] == "edge") {
      if (toks.size() < 4)
        throw Diag("format", "bad edge line: " + line);
      PGEdge e;
      std::string kind = toks[1];
      e.kind = kind == "control"  ? EdgeKind::Control
               : kind == "data"   ? EdgeKind::Data
               : kind == "update" ? EdgeKind::Update
               : kind == "anti"   ? EdgeKind::Anti
               : kind == "output" ? EdgeKind::Output
                                  : throw Diag("format", "bad edge kind " + kind);
      e.src = NodeId::parse(toks[2]);
      e.dst = NodeId::parse(toks[3]);
      for (size_t i = 4; i < toks.size(); ++i) {
        if (toks[i] == "w" && i + 1 < toks.size()) {
          e.weighted = true;
          e.weight = parse_weight(toks[i + 1]);
          ++i;
        } else if (toks[i] == "back") {
          e.is_back_edge = true;
        } else if (toks[i] == "interproc") {
          e.is_interprocedural = true;
        }
      }
      g.edges.push_back(std::move(e));
    } else {
      throw Diag("format", "bad graph line: " + line);
    }
  }
  g.rebuild_index();
  return g;
}

} // namespace pyx
