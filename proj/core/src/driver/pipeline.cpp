#include "pyx/driver.hpp"

#include <algorithm>

namespace pyx {

PartitionResult partition_program(const Program &p, const Profile &prof,
                                  int64_t budget, const NetParams &np,
                                  const std::string &program_name) {
  DepAnalysis deps = analyze(p);
  PartitionGraph graph = build_graph(p, deps, prof, np);
  Assignment assignment = solve(formulate(graph, budget));

  PartitionResult out;
  out.placed = apply(assignment, graph);
  out.reordered = reorder(out.placed, p);
  out.pyxil = insert_sync(out.placed, out.reordered);

  Bundle b;
  b.program_name = program_name;
  b.budget = budget;
  b.prog = lower(out.pyxil);
  b.pyxil_text = emit_pyxil_text(out.pyxil);
  b.placement_report = dump_assignment(assignment, graph, &p);
  b.hash = Bundle::compute_hash(b);
  out.bundle = std::move(b);
  return out;
}

int64_t total_statement_weight(const Profile &prof, const Program &p) {
  uint64_t total = 0;
  for_each_stmt_in_program(p, [&](const FuncDecl &, const Stmt &s) {
    total += prof.count(s.id);
  });
  for (const auto &e : p.entry_points)
    total += prof.count(e.stmt_id);
  return static_cast<int64_t>(total);
}

int64_t parse_budget(const std::string &text, const Program &p, const Profile &prof) {
  if (text == "inf" || text == "max")
    return total_statement_weight(prof, p);
  if (!text.empty() && text.back() == '%') {
    double pct = std::stod(text.substr(0, text.size() - 1));
    if (pct < 0)
      throw Diag("config", "budget percentage must be non-negative");
    double total = static_cast<double>(total_statement_weight(prof, p));
    return static_cast<int64_t>(total * pct / 100.0);
  }
  try {
    size_t used = 0;
    int64_t v = std::stoll(text, &used);
    if (used != text.size())
      throw std::invalid_argument(text);
    return v;
  } catch (const std::exception &) {
    throw Diag("config", "bad budget '" + text + "' (want an integer, a percentage, or inf)");
  }
}

} // namespace pyx
