#include "pyx/optimizer.hpp"

#include <algorithm>

// Depth-first branch and bound over the node variables. The lower bound is
// the weight of edges already forced cut plus, for every undecided variable
// with decided neighbors on both sides, the cheaper side's detachment cost.
// Pruning uses a small slack so floating-point noise can only cost search
// time, never the optimum; leaves are re-summed in edge order, making
// objective values comparable bit-for-bit with the enumeration oracle.

namespace pyx {

namespace {

constexpr double kPruneSlack = 1e-9;

struct AdjEdge {
  size_t other;
  double weight;
};

class Solver {
public:
  explicit Solver(const IlpProblem &prob) : prob_(prob), n_(prob.node_vars.size()) {
    adj_.resize(n_);
    for (const auto &ev : prob.edge_vars) {
      adj_[ev.var_a].push_back({ev.var_b, ev.weight});
      adj_[ev.var_b].push_back({ev.var_a, ev.weight});
    }
    value_.assign(n_, -1);
    cut_to_[0].assign(n_, 0.0);
    cut_to_[1].assign(n_, 0.0);

    // heaviest total incident weight first, node id as the deterministic tie
    order_.resize(n_);
    for (size_t i = 0; i < n_; ++i)
      order_[i] = i;
    std::vector<double> incident(n_, 0.0);
    for (const auto &ev : prob.edge_vars) {
      incident[ev.var_a] += ev.weight;
      incident[ev.var_b] += ev.weight;
    }
    std::stable_sort(order_.begin(), order_.end(), [&](size_t a, size_t b) {
      if (incident[a] != incident[b])
        return incident[a] > incident[b];
      return prob_.node_vars[a].members.front() < prob_.node_vars[b].members.front();
    });

    uint64_t pinned_db = 0;
    for (size_t v = 0; v < n_; ++v)
      if (prob.node_vars[v].pin == Host::Db)
        pinned_db += prob.node_vars[v].stmt_weight;
    if (pinned_db > prob.budget) {
      std::string who;
      for (size_t v = 0; v < n_; ++v)
        if (prob.node_vars[v].pin == Host::Db && prob.node_vars[v].stmt_weight > 0)
          who += (who.empty() ? "" : ", ") + prob.node_vars[v].members.front().str();
      throw Diag("infeasible", "DB-pinned nodes exceed the budget (" +
                                   std::to_string(pinned_db) + " > " +
                                   std::to_string(prob.budget) + "): " + who);
    }
  }

  Assignment run() {
    search(0);
    if (!found_)
      throw Diag("infeasible", "no feasible assignment under the given pins/budget");
    Assignment out;
    out.objective = best_objective_;
    for (size_t v = 0; v < n_; ++v) {
      Host h = best_value_[v] ? Host::Db : Host::App;
      for (NodeId m : prob_.node_vars[v].members)
        out.placement[m] = h;
    }
    const PartitionGraph &g = *prob_.graph;
    for (const auto &e : g.edges)
      if (e.weighted && out.placement.at(e.src) != out.placement.at(e.dst))
        out.cut_edges.insert(e.id);
    return out;
  }

private:
  const IlpProblem &prob_;
  size_t n_;
  std::vector<std::vector<AdjEdge>> adj_;
  std::vector<int8_t> value_;
  std::vector<double> cut_to_[2]; // per var: weight toward decided APP / DB
  std::vector<size_t> order_;
  double forced_cut_ = 0;
  double undecided_min_sum_ = 0;
  uint64_t db_weight_ = 0;

  bool found_ = false;
  double best_objective_ = 0;
  uint64_t best_db_nodes_ = 0;
  std::vector<int8_t> best_value_;
  std::vector<int8_t> best_lex_;

  // lexicographic placement vector over node ids
  std::vector<int8_t> lex_vector(const std::vector<int8_t> &vals) const {
    std::vector<int8_t> lex;
    lex.reserve(prob_.var_of.size());
    for (const auto &[node, var] : prob_.var_of)
      lex.push_back(vals[var]);
    return lex;
  }

  uint64_t db_node_count(const std::vector<int8_t> &vals) const {
    uint64_t n = 0;
    for (size_t v = 0; v < n_; ++v)
      if (vals[v])
        n += prob_.node_vars[v].members.size();
    return n;
  }

  void leaf() {
    // exact objective, summed in edge order
    double obj = 0;
    for (const auto &ev : prob_.edge_vars)
      if (value_[ev.var_a] != value_[ev.var_b])
        obj += ev.weight;
    uint64_t db_nodes = db_node_count(value_);
    std::vector<int8_t> lex = lex_vector(value_);
    bool better = !found_;
    if (!better && obj < best_objective_)
      better = true;
    else if (!better && obj == best_objective_) {
      if (db_nodes < best_db_nodes_)
        better = true;
      else if (db_nodes == best_db_nodes_ && lex < best_lex_)
        better = true;
    }
    if (better) {
      found_ = true;
      best_objective_ = obj;
      best_db_nodes_ = db_nodes;
      best_value_ = value_;
      best_lex_ = std::move(lex);
    }
  }

  void assign(size_t v, int8_t side, std::vector<std::pair<size_t, double>> &undo) {
    value_[v] = side;
    undecided_min_sum_ -= std::min(cut_to_[0][v], cut_to_[1][v]);
    if (side)
      db_weight_ += prob_.node_vars[v].stmt_weight;
    for (const auto &ae : adj_[v]) {
      if (value_[ae.other] >= 0) {
        if (value_[ae.other] != side)
          forced_cut_ += ae.weight;
      } else {
        double before = std::min(cut_to_[0][ae.other], cut_to_[1][ae.other]);
        cut_to_[side][ae.other] += ae.weight;
        double after = std::min(cut_to_[0][ae.other], cut_to_[1][ae.other]);
        undecided_min_sum_ += after - before;
        undo.push_back({ae.other, ae.weight});
      }
    }
  }

  void unassign(size_t v, int8_t side,
                const std::vector<std::pair<size_t, double>> &undo) {
    for (auto it = undo.rbegin(); it != undo.rend(); ++it) {
      double before = std::min(cut_to_[0][it->first], cut_to_[1][it->first]);
      cut_to_[side][it->first] -= it->second;
      double after = std::min(cut_to_[0][it->first], cut_to_[1][it->first]);
      undecided_min_sum_ += after - before;
    }
    for (const auto &ae : adj_[v]) {
      if (value_[ae.other] >= 0 && value_[ae.other] != side)
        forced_cut_ -= ae.weight;
    }
    if (side)
      db_weight_ -= prob_.node_vars[v].stmt_weight;
    value_[v] = -1;
    undecided_min_sum_ += std::min(cut_to_[0][v], cut_to_[1][v]);
  }

  bool prunable() const {
    if (!found_)
      return false;
    double bound = forced_cut_ + undecided_min_sum_;
    if (bound > best_objective_ + kPruneSlack)
      return true;
    return false;
  }

  void search(size_t depth) {
    if (depth == n_) {
      leaf();
      return;
    }
    size_t v = order_[depth];
    const auto &nv = prob_.node_vars[v];
    for (int8_t side : {int8_t{0}, int8_t{1}}) {
      if (nv.pin && (side == 1) != (*nv.pin == Host::Db))
        continue;
      if (side == 1 && db_weight_ + nv.stmt_weight > prob_.budget)
        continue;
      std::vector<std::pair<size_t, double>> undo;
      assign(v, side, undo);
      if (!prunable())
        search(depth + 1);
      unassign(v, side, undo);
    }
  }
};

} // namespace

Assignment solve(const IlpProblem &prob) {
  if (prob.node_vars.empty()) {
    Assignment a;
    return a;
  }
  return Solver(prob).run();
}

} // namespace pyx
