#pragma once

#include <vector>

#include "gsec/family.hpp"
#include "gsec/set_function.hpp"

namespace gsec {

/// Non-members of `fam` (inside `cond` when given) all of whose proper
/// subgraphs are members. Uses the cover relation when fam is downward
/// closed and the full subgraph check otherwise.
std::vector<Forest> minimal_infeasible(const ForestFamily& fam);
std::vector<Forest> minimal_infeasible(const ForestFamily& fam, const ForestFamily& cond);

/// l(S) = 1 + max{|F| : F minimal infeasible (in cond), V(F) = S}, else 1.
/// `valid` is false when some value exceeds |S|, so no RhsTable exists.
struct LowerBound {
  std::vector<int> values;
  bool valid = true;
  std::vector<VertexSet> blocking;  // B(F, C), ascending
  std::vector<Forest> minimal;      // the minimal infeasible forests used

  /// Throws OutOfRange when !valid.
  RhsTable table() const;
};

LowerBound lower_bound_table(const ForestFamily& fam);
LowerBound lower_bound_table(const ForestFamily& fam, const ForestFamily& cond);

/// u(S) = min over members F of |S| - |E(F) & E(S)|. Throws EmptyFamily.
RhsTable upper_bound_table(const ForestFamily& fam);

}  // namespace gsec
