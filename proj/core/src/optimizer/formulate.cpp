#include "pyx/optimizer.hpp"

#include <sstream>

namespace pyx {

Host Assignment::host_of(NodeId id) const {
  auto it = placement.find(id);
  if (it == placement.end())
    throw Diag("solver", "no placement for node " + id.str());
  return it->second;
}

IlpProblem formulate(const PartitionGraph &g, int64_t budget) {
  if (budget < 0)
    throw Diag("config", "budget must be non-negative");
  IlpProblem prob;
  prob.graph = &g;
  prob.budget = static_cast<uint64_t>(budget);

  // collapse co-location groups onto a single variable
  std::map<int, size_t> group_var;
  for (const auto &n : g.nodes) {
    size_t v;
    if (n.colocate_group) {
      auto it = group_var.find(*n.colocate_group);
      if (it == group_var.end()) {
        v = prob.node_vars.size();
        prob.node_vars.emplace_back();
        group_var[*n.colocate_group] = v;
      } else {
        v = it->second;
      }
    } else {
      v = prob.node_vars.size();
      prob.node_vars.emplace_back();
    }
    IlpProblem::NodeVar &nv = prob.node_vars[v];
    nv.members.push_back(n.id);
    if (n.kind == PGNodeKind::Statement)
      nv.stmt_weight += n.weight;
    if (n.pin) {
      if (nv.pin && *nv.pin != *n.pin)
        throw Diag("infeasible", "conflicting pins inside co-location group at node " +
                                     n.id.str() + " (" + host_name(*n.pin) + " vs " +
                                     host_name(*nv.pin) + ")");
      nv.pin = n.pin;
    }
    prob.var_of[n.id] = v;
  }

  size_t edge_var_base = prob.node_vars.size();
  for (const auto &e : g.edges) {
    if (!e.weighted)
      continue;
    size_t a = prob.var_of.at(e.src), b = prob.var_of.at(e.dst);
    if (a == b)
      continue; // co-located endpoints can never be cut
    IlpProblem::EdgeVar ev;
    ev.edge_id = e.id;
    ev.var_a = a;
    ev.var_b = b;
    ev.weight = e.weight;
    size_t ei = edge_var_base + prob.edge_vars.size();
    prob.edge_vars.push_back(ev);
    // n_a - n_b - e <= 0 and n_b - n_a - e <= 0
    prob.constraints.push_back({{{a, 1.0}, {b, -1.0}, {ei, -1.0}}, 0.0});
    prob.constraints.push_back({{{b, 1.0}, {a, -1.0}, {ei, -1.0}}, 0.0});
  }

  // budget row over statement-node weights
  IlpProblem::Constraint budget_row;
  for (size_t v = 0; v < prob.node_vars.size(); ++v)
    if (prob.node_vars[v].stmt_weight > 0)
      budget_row.coeffs.push_back({v, static_cast<double>(prob.node_vars[v].stmt_weight)});
  budget_row.bound = static_cast<double>(prob.budget);
  prob.constraints.push_back(std::move(budget_row));

  return prob;
}

std::string IlpProblem::dump_lp() const {
  std::ostringstream os;
  auto var_name = [&](size_t v) {
    return v < node_vars.size() ? "n" + std::to_string(v)
                                : "e" + std::to_string(v - node_vars.size());
  };
  os << "/* minimize cut weight, budget " << budget << " */\n";
  os << "min:";
  for (size_t i = 0; i < edge_vars.size(); ++i)
    os << " + " << format_double(edge_vars[i].weight) << " e" << i;
  os << ";\n";
  for (const auto &c : constraints) {
    bool first = true;
    for (const auto &[v, coef] : c.coeffs) {
      if (coef >= 0 && !first)
        os << " + " << format_double(coef) << ' ' << var_name(v);
      else if (coef >= 0)
        os << format_double(coef) << ' ' << var_name(v);
      else
        os << " - " << format_double(-coef) << ' ' << var_name(v);
      first = false;
    }
    os << " <= " << format_double(c.bound) << ";\n";
  }
  for (size_t v = 0; v < node_vars.size(); ++v)
    if (node_vars[v].pin)
      os << "n" << v << " = " << (*node_vars[v].pin == Host::Db ? 1 : 0) << ";\n";
  os << "int";
  for (size_t v = 0; v < var_count(); ++v)
    os << ' ' << var_name(v);
  os << ";\n";
  return os.str();
}

double cut_objective(const PartitionGraph &g,
                     const std::map<NodeId, Host> &placement) {
  double total = 0;
  for (const auto &e : g.edges)
    if (e.weighted && placement.at(e.src) != placement.at(e.dst))
      total += e.weight;
  return total;
}

PlacedGraph apply(const Assignment &a, const PartitionGraph &g) {
  for (const auto &n : g.nodes)
    (void)a.host_of(n.id); // placement must cover every node
  PlacedGraph pg;
  pg.graph = g;
  pg.assignment = a;
  return pg;
}

std::string dump_assignment(const Assignment &a, const PartitionGraph &g,
                            const Program *p) {
  std::ostringstream os;
  os << "objective " << format_double(a.objective) << '\n';
  uint64_t db_load = 0;
  for (const auto &n : g.nodes) {
    if (n.kind == PGNodeKind::Statement && a.host_of(n.id) == Host::Db)
      db_load += n.weight;
  }
  os << "db-load " << db_load << '\n';
  for (const auto &n : g.nodes) {
    os << "place " << n.id.str(p) << ' ' << host_name(a.host_of(n.id));
    if (!n.label.empty())
      os << " # " << n.label;
    os << '\n';
  }
  for (uint32_t id : a.cut_edges) {
    const PGEdge &e = g.edges[id];
    os << "cut " << edge_kind_name(e.kind) << ' ' << e.src.str(p) << ' '
       << e.dst.str(p) << " w " << format_double(e.weight) << '\n';
  }
  return os.str();
}

} // namespace pyx
