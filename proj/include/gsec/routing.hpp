#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gsec/family.hpp"
#include "gsec/graph.hpp"
#include "gsec/rational.hpp"
#include "gsec/set_function.hpp"

namespace gsec {

/// Customers are 0..n-1 on the complete customer graph. In G_0 the depot is
/// vertex 0 and customer i is vertex i + 1.
struct VrpInstance {
  int n = 0;
  int k = 1;
  std::vector<Rational> depot_costs;  // c(0, i+1)
  std::vector<Rational> edge_costs;   // by edge id of Graph::complete(n)
  PathFamily routes = PathFamily::all();
  RhsTable rhs = RhsTable::ones(0);
};

/// Throws BadParams when sizes, signs or k are off, or the routes miss a
/// trivial path; CapExceeded above the enumeration cap.
void validate(const VrpInstance& inst);

/// Integer point of the formulation: depot[i] in {0,1,2}, customer[e] in {0,1}.
struct VrpX {
  std::vector<int> depot;
  std::vector<int> customer;
};

struct VrpSolution {
  std::vector<std::vector<int>> cycles;  // G_0 labels, each 0 ... 0
  VrpX x;
  Rational cost;
};

/// Cost of the depot cycle through a customer path.
Rational route_cost(const VrpInstance& inst, std::span<const int> path);

/// Best split into exactly k nonempty routes from `routes`, by enumeration.
std::optional<VrpSolution> oracle_solve_vrp(const VrpInstance& inst);
/// Exact optimum of the GSEC formulation by depth-first branch and bound.
std::optional<VrpSolution> solve_vrp_form(const VrpInstance& inst);

/// Splits x into k depot cycles. Throws MalformedX.
std::vector<std::vector<int>> decode_x_to_cycles(const VrpX& x, int n, int k);
/// Incidence vector of a list of G_0 cycles.
VrpX cycles_to_x(const std::vector<std::vector<int>>& cycles, int n);
/// The cycles visit every customer once and each customer path is a route.
bool routes_feasible(const VrpInstance& inst, const std::vector<std::vector<int>>& cycles);

/// Graph over {0} ∪ V with depot 0; `load` is g over the customers, with
/// customer i of `load` at vertex i + 1.
struct RcmstInstance {
  Graph graph;
  std::vector<Rational> costs;  // by edge id of graph
  SetFunction load = SetFunction::zero(0);
};

struct RcmstSolution {
  EdgeSet tree;
  Rational cost;
};

/// Throws BadParams on size mismatch or a disconnected graph, and
/// PreconditionFailed when the load is not subadditive.
void validate(const RcmstInstance& inst);

/// Spanning tree whose depot subtrees all lie in Theta(load).
bool rcmst_tree_feasible(const RcmstInstance& inst, EdgeSet tree);

/// Enumerates spanning trees; CapExceeded beyond `tree_cap` trees.
std::optional<RcmstSolution> oracle_solve_rcmst(const RcmstInstance& inst, long long tree_cap = 1'000'000);
/// Branch and bound with lazy GSEC checks against max{1, ceil(g)}.
std::optional<RcmstSolution> bnb_solve_rcmst(const RcmstInstance& inst);
/// Runs both; InternalMismatch if they disagree. Returns the B&B tree.
std::optional<RcmstSolution> solve_rcmst(const RcmstInstance& inst);

}  // namespace gsec
