#ifndef PYX_DRIVER_HPP
#define PYX_DRIVER_HPP

#include "pyx/runtime.hpp"

// End-to-end pipeline: normalized program + profile + network parameters ->
// placement, reordered PyxIL, lowered blocks, sealed artifact bundle.

namespace pyx {

struct PartitionResult {
  Bundle bundle;
  PlacedGraph placed;
  ReorderResult reordered;
  PyxilProgram pyxil;
};

PartitionResult partition_program(const Program &p, const Profile &prof,
                                  int64_t budget, const NetParams &np,
                                  const std::string &program_name);

// total statement weight, the always-feasible "infinite" budget
int64_t total_statement_weight(const Profile &prof, const Program &p);

// "0", "1234", "inf"/"max", or "25%" of the total statement weight
int64_t parse_budget(const std::string &text, const Program &p, const Profile &prof);

} // namespace pyx

#endif
