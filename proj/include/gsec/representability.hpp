#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gsec/bounds.hpp"
#include "gsec/certificate.hpp"
#include "gsec/family.hpp"
#include "gsec/polytope.hpp"

namespace gsec {

/// Forest F lies in Phi(f): |S| - |E(F) & E(S)| >= f(S) for every nonempty
/// S inside V(F). Equivalent to |F'| >= f(V(F')) over all subgraphs F'.
bool phi_contains(std::span<const int> f, const Graph& g, const Forest& forest);

/// Every member F has |F| >= l(V(F)); the certificate is a member that fails.
CheckResult has_mip_property(const ForestFamily& fam);
CheckResult has_mip_property(const ForestFamily& fam, const LowerBound& ell);

struct ReprReport {
  bool nonempty = false;
  bool downward_closed = false;
  bool edge_consistent = false;
  bool contains_edgeless = false;
  bool mip_property = false;
  bool representable = false;
  /// The input was not edge-consistent and was analysed after closure.
  bool auto_closed = false;
  LowerBound ell;
  std::optional<RhsTable> u;
  std::vector<Certificate> certificates;
};

struct ReprOptions {
  /// Confirm the verdict against P(l) by enumeration (InternalMismatch).
  bool cross_validate = true;
};

ReprReport is_representable(const ForestFamily& fam, const ReprOptions& opts = {});

struct AdmissibleReport {
  bool admissible = false;
  bool representable = false;
  bool lower_contains = false;  // P(f) ⊆ P(l)
  bool upper_contained = false;  // P(u) ⊆ P(f)
  std::optional<Certificate> certificate;
};

/// Characterization verdict (Phi-equality plus LP sandwich) checked against direct
/// enumeration of P(f); InternalMismatch when they differ.
AdmissibleReport rhs_admissible(const ForestFamily& fam, const RhsTable& f);

struct ConditionedReport {
  bool holds = false;
  bool condition_i = false;
  bool condition_ii = false;
  LowerBound ell;              // l_{H,C}
  std::optional<RhsTable> u;  // u_H, absent when H is empty
  std::optional<RhsTable> f_used;
  std::optional<Certificate> certificate;
};

/// P(f) ∩ Q represents h, where Q represents c. With no f, l_{H,C} is tried.
/// Throws PreconditionFailed naming the violated hypothesis.
ConditionedReport conditioned_representable(const ForestFamily& h, const ForestFamily& c,
                                            const std::optional<RhsTable>& f = std::nullopt);

/// Minimal infeasible paths of F(R) admit no feasible reordering.
CheckResult path_star_property(const PathFamily& r, const Graph& g);

struct GhosalReport {
  bool trivial_paths = false;
  bool subpath_closed = false;
  bool subsequence_closed = false;
  bool star = false;
  bool vertex_consistent = false;
  /// trivial paths, subgraph-closed and star: some f models VRP-PROB(R).
  bool corollary_applies = false;
  std::vector<Certificate> certificates;
};

GhosalReport ghosal_conditions(const PathFamily& r, const Graph& g);

/// Minimal infeasible forests sharing a vertex set have equal component
/// counts. PreconditionFailed without the MIP property; InternalMismatch if
/// the claim fails.
bool claim_equal_components(const ForestFamily& fam);

}  // namespace gsec
