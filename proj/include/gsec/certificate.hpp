#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gsec/graph.hpp"
#include "gsec/rational.hpp"

namespace gsec {

/// Two forests related by a failed structural property. `relation` is one of
/// "missing_subgraph" (first is a member, second a non-member subgraph),
/// "same_edge_set" or "same_vertex_set" (first member, second non-member;
/// vertex sets are compared tree by tree).
struct ForestPair {
  Forest first;
  Forest second;
  std::string relation;
};

/// The GSEC x(S) <= |S| - f(S) fails at `lhs`; rhs_value = |S| - f(S).
struct ViolatedGsec {
  VertexSet subset;
  Rational lhs;
  int rhs_value = 0;
  std::optional<Forest> forest;
};

/// An integer point of the polytope whose forest is not in the family.
struct ExtraIntegerPoint {
  EdgeSet edges;
};

/// A point of the inner polytope that violates the outer GSEC at `subset`.
struct SeparatingPoint {
  std::vector<Rational> x;
  VertexSet subset;
  Rational lhs;
  int rhs_value = 0;
};

/// A single forest with the reason it witnesses failure, e.g.
/// "mip_violation", "missing_edgeless", "minimal_infeasible".
struct ForestWitness {
  Forest forest;
  std::string reason;
};

/// Disjoint a, b with g(a | b) > g(a) + g(b).
struct SubsetPair {
  VertexSet a;
  VertexSet b;
};

/// Two paths related by a failed path property ("star", "vertex_consistency",
/// "subpath", "subsequence", "trivial_path").
struct PathPair {
  PathSeq first;
  PathSeq second;
  std::string relation;
};

using Certificate =
    std::variant<ForestPair, ViolatedGsec, ExtraIntegerPoint, SeparatingPoint, ForestWitness, SubsetPair, PathPair>;

struct CheckResult {
  bool holds = true;
  std::optional<Certificate> certificate;

  explicit operator bool() const { return holds; }
  static CheckResult ok() { return {}; }
  static CheckResult fail(Certificate c) { return {false, std::move(c)}; }
};

}  // namespace gsec
