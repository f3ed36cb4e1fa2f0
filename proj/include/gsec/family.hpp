#pragma once

#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "gsec/certificate.hpp"
#include "gsec/graph.hpp"
#include "gsec/rational.hpp"
#include "gsec/set_function.hpp"

namespace gsec {

/// Family of paths given as a predicate on vertex tuples. Membership is
/// invariant under reversal.
class PathFamily {
 public:
  struct All {};
  struct Explicit {
    std::vector<PathSeq> paths;  // canonical, sorted, unique
  };
  /// Bike rebalancing: every contiguous demand interval has |sum| <= Q.
  struct Brp {
    std::vector<Rational> d;
    Rational capacity;
  };
  /// Capacitated routing: d(V(P)) <= Q.
  struct Cvrp {
    std::vector<Rational> d;
    Rational capacity;
  };
  using Kind = std::variant<All, Explicit, Brp, Cvrp>;

  static PathFamily all();
  static PathFamily explicit_paths(std::vector<PathSeq> paths);
  /// Throws InvalidDemand unless |d_v| <= Q for all v.
  static PathFamily brp(std::vector<Rational> d, Rational capacity);
  /// Throws InvalidDemand unless 0 <= d_v <= Q for all v.
  static PathFamily cvrp(std::vector<Rational> d, Rational capacity);

  const Kind& kind() const { return kind_; }
  std::string kind_name() const;
  bool contains(const PathSeq& p) const;

 private:
  explicit PathFamily(Kind k) : kind_(std::move(k)) {}
  Kind kind_;
};

/// Family of trees used to build F(T), the forests all of whose components
/// lie in T.
class TreeFamily {
 public:
  /// Trees whose every subtree T' has g(V(T')) <= 1.
  struct Theta {
    SetFunction g;
    std::vector<char> within_budget;  // g(W) <= 1, by bitmask
  };
  struct ExplicitTrees {
    std::vector<Forest> trees;  // sorted, unique
  };
  /// Trees that are paths belonging to the path family.
  struct Paths {
    PathFamily routes;
  };
  using Kind = std::variant<Theta, ExplicitTrees, Paths>;

  static TreeFamily theta(SetFunction g);
  static TreeFamily explicit_trees(std::vector<Forest> trees);
  static TreeFamily paths(PathFamily routes);

  const Kind& kind() const { return kind_; }
  std::string kind_name() const;
  bool contains(const Graph& host, const Forest& tree) const;

 private:
  explicit TreeFamily(Kind k) : kind_(std::move(k)) {}
  Kind kind_;
};

/// Membership oracle for a family of forests of a fixed host graph.
class ForestFamily {
 public:
  struct All {};
  struct Explicit {
    std::vector<Forest> forests;  // canonical order, unique
  };
  /// Every tree T of the forest has d(V(T)) <= Q.
  struct Cmst {
    std::vector<Rational> d;
    Rational capacity;
  };
  /// Every vertex v has degree at most b_v inside the forest.
  struct DegreeBounded {
    std::vector<int> bounds;
  };
  struct TreeClosure {
    TreeFamily trees;
  };
  /// Members of `base` whose components are all paths.
  struct PathRestriction {
    std::shared_ptr<const ForestFamily> base;
  };
  using Kind = std::variant<All, Explicit, Cmst, DegreeBounded, TreeClosure, PathRestriction>;

  static ForestFamily all(Graph host);
  /// Validates every forest against the host; stores them de-duplicated.
  static ForestFamily explicit_forests(Graph host, std::vector<Forest> forests);
  static ForestFamily cmst(Graph host, std::vector<Rational> d, Rational capacity);
  static ForestFamily degree_bounded(Graph host, std::vector<int> bounds);
  static ForestFamily tree_closure(Graph host, TreeFamily trees);
  static ForestFamily path_restriction(ForestFamily base);
  /// C_path: all forests whose components are paths.
  static ForestFamily linear_forests(Graph host);
  /// F(R_brp) with R_brp the bike-rebalancing routes.
  static ForestFamily brp(Graph host, std::vector<Rational> d, Rational capacity);
  /// F(Theta(g)).
  static ForestFamily theta(Graph host, SetFunction g);
  /// F(R) for an arbitrary path family R.
  static ForestFamily routes(Graph host, PathFamily r);

  const Graph& host() const { return host_; }
  const Kind& kind() const { return kind_; }
  std::string kind_name() const;

  bool contains(const Forest& f) const;

 private:
  ForestFamily(Graph host, Kind kind) : host_(std::move(host)), kind_(std::move(kind)) {}
  Graph host_;
  Kind kind_;
};

/// Members among all forests of the host, canonical order.
std::vector<Forest> members(const ForestFamily& fam);
/// Same membership, stored as an explicit list (fast repeated queries).
ForestFamily materialize(const ForestFamily& fam);

CheckResult is_downward_closed(const ForestFamily& fam);
CheckResult is_edge_consistent(const ForestFamily& fam);
/// The unique edge-consistent family with the same incidence vectors.
ForestFamily edge_consistent_closure(const ForestFamily& fam);
/// Membership depends only on the vertex sets of the component trees.
CheckResult is_vertex_consistent(const ForestFamily& fam);
/// Every edgeless forest (including the empty graph) is a member.
CheckResult contains_edgeless(const ForestFamily& fam);

/// Prefix-sum band test: D_max(i) - D_min(i) <= Q at every prefix.
bool brp_feasible_prefix_band(std::span<const Rational> d, const Rational& capacity, std::span<const int> order);
/// Every contiguous interval has |sum| <= Q.
bool brp_feasible_interval_sums(std::span<const Rational> d, const Rational& capacity, std::span<const int> order);
/// Runs both evaluators; throws InvalidDemand when some |d_v| > Q and
/// InternalMismatch if the evaluators disagree.
bool brp_path_feasible(std::span<const Rational> d, const Rational& capacity, std::span<const int> order);

CheckResult contains_trivial_paths(const PathFamily& r, const Graph& g);
/// Closed under contiguous subpaths (subgraph sense).
CheckResult is_subpath_closed(const PathFamily& r, const Graph& g);
/// Closed under subsequences that are paths of g (the strong tuple sense).
CheckResult is_subsequence_closed(const PathFamily& r, const Graph& g);
CheckResult is_vertex_consistent(const PathFamily& r, const Graph& g);

}  // namespace gsec
