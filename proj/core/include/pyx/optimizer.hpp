#ifndef PYX_OPTIMIZER_HPP
#define PYX_OPTIMIZER_HPP

#include "pyx/graph.hpp"

#include <optional>
#include <set>

// Binary integer program for node placement: minimize the summed weight of
// cut edges subject to a DB-side instruction budget, db-code/console pins,
// and one shared variable for all database API call statements. Solved
// exactly by branch and bound; tie-broken toward APP placements.

namespace pyx {

struct IlpProblem {
  // one variable per co-location class of nodes
  struct NodeVar {
    std::vector<NodeId> members;
    std::optional<Host> pin;
    uint64_t stmt_weight = 0; // summed execution counts of member statements
  };
  // one variable per weighted edge whose endpoints live in different classes
  struct EdgeVar {
    uint32_t edge_id = 0;
    size_t var_a = 0, var_b = 0;
    double weight = 0;
  };
  // n_j - n_k - e_i <= 0 pairs plus the budget row, kept explicit for
  // inspection and the constraint property tests. Variables are numbered
  // node vars first, then edge vars.
  struct Constraint {
    std::vector<std::pair<size_t, double>> coeffs;
    double bound = 0; // sum coeffs*x <= bound
  };

  const PartitionGraph *graph = nullptr;
  std::vector<NodeVar> node_vars;
  std::map<NodeId, size_t> var_of;
  std::vector<EdgeVar> edge_vars;
  std::vector<Constraint> constraints;
  uint64_t budget = 0;

  size_t var_count() const { return node_vars.size() + edge_vars.size(); }
  std::string dump_lp() const; // lp-style text for debugging
};

IlpProblem formulate(const PartitionGraph &g, int64_t budget);

struct Assignment {
  std::map<NodeId, Host> placement;
  std::set<uint32_t> cut_edges; // ids of cut weighted edges
  double objective = 0;

  Host host_of(NodeId id) const;
};

// Exact optimum; deterministic via (objective, DB-node count, lexicographic
// placement vector) comparison. Throws Diag("infeasible") naming the pins
// when the pins cannot be satisfied within the budget.
Assignment solve(const IlpProblem &prob);

struct PlacedGraph {
  PartitionGraph graph;
  Assignment assignment;

  Host host_of(NodeId id) const { return assignment.host_of(id); }
  bool is_cut(const PGEdge &e) const {
    return e.weighted && host_of(e.src) != host_of(e.dst);
  }
};

PlacedGraph apply(const Assignment &a, const PartitionGraph &g);

// Objective of a full valuation, summed in edge order; the solver, the
// brute-force test oracle and the placement reports all use this one
// routine so equality checks are exact.
double cut_objective(const PartitionGraph &g,
                     const std::map<NodeId, Host> &placement);

std::string dump_assignment(const Assignment &a, const PartitionGraph &g,
                            const Program *p = nullptr);

} // namespace pyx

#endif
