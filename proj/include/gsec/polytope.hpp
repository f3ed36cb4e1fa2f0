#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gsec/certificate.hpp"
#include "gsec/family.hpp"
#include "gsec/graph.hpp"
#include "gsec/set_function.hpp"

namespace gsec {

/// P(f; G) = {x in [0,1]^E : x(E(S)) <= |S| - f(S) for all nonempty S}.
class GsecPolytope {
 public:
  /// Throws BadParams when the table and graph sizes differ.
  GsecPolytope(Graph host, RhsTable rhs);

  const Graph& host() const { return host_; }
  const RhsTable& rhs() const { return rhs_; }
  /// |S| - f(S)
  int bound(VertexSet s) const { return s.size() - rhs_(s); }

 private:
  Graph host_;
  RhsTable rhs_;
};

/// 1_F in P; on failure the certificate names the smallest violated S.
CheckResult indicator_in_polytope(const GsecPolytope& p, const Forest& f);
/// Smallest violated GSEC for a point already inside the box, if any.
std::optional<VertexSet> violated_gsec(const GsecPolytope& p, std::span<const Rational> x);
bool in_polytope(const GsecPolytope& p, std::span<const Rational> x);

/// Edge sets of the 0/1 points of P, ascending. With `cross_check` and at
/// most 20 edges, a full 0/1 scan must agree (InternalMismatch otherwise).
std::vector<EdgeSet> integer_points(const GsecPolytope& p, bool cross_check = true);

/// P ∩ Z^E equals the indicator vectors of fam.
CheckResult represents(const GsecPolytope& p, const ForestFamily& fam);

struct LpOptions {
  /// Drop GSECs implied by the box and keep one row per trace on S.
  bool prune = true;
  /// Shuffle the constraint rows with this seed.
  std::optional<std::uint64_t> shuffle_seed;
};

struct MaxResult {
  Rational value;
  std::vector<Rational> x;  // one coordinate per host edge
};

/// max x(E(S)) over P, exact.
MaxResult max_xS(const GsecPolytope& p, VertexSet s, const LpOptions& opts = {});

/// inner ⊆ outer; the certificate is an optimal point of inner that cuts an
/// outer GSEC.
CheckResult polytope_contains(const GsecPolytope& outer, const GsecPolytope& inner);

/// Removing any edge from an integer point yields an integer point.
CheckResult integer_points_downward_closed(const GsecPolytope& p);

}  // namespace gsec
