#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "gsec/family.hpp"
#include "gsec/routing.hpp"
#include "gsec/set_function.hpp"

namespace gsec {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
int uniform_int(Rng& rng, int lo, int hi);
bool coin(Rng& rng, double p);
/// Rational in [lo, hi] with denominator at most max_den.
Rational random_rational(Rng& rng, const Rational& lo, const Rational& hi, int max_den);
std::vector<Rational> random_rationals(Rng& rng, int count, const Rational& lo, const Rational& hi, int max_den);

/// G(n, p) with edges in canonical order.
Graph random_graph(Rng& rng, int n, double p);
/// Graph over {0} ∪ {1..customers}, connected through the depot.
Graph random_depot_graph(Rng& rng, int customers, double p);

/// Random acyclic edge set with some extra isolated vertices.
Forest random_forest(Rng& rng, const Graph& g, double edge_p, double vertex_p);
/// Down-closure of `generators` random forests, then edge-consistent closure.
ForestFamily random_downward_family(Rng& rng, const Graph& g, int generators);
/// One of cmst, degree, theta, brp, all, linear forests.
ForestFamily random_structured_family(Rng& rng, const Graph& g);

RhsTable random_rhs(Rng& rng, int n);
/// Uniform table between lo and hi pointwise (lo <= hi required).
RhsTable random_rhs_between(Rng& rng, std::span<const int> lo, std::span<const int> hi);

/// XOS with up to `max_vectors` weight vectors, entries k/4 for k in [-4, 4].
SetFunction random_xos(Rng& rng, int n, int max_vectors);

/// Trivial paths plus a random selection, optionally closed under subpaths.
PathFamily random_path_family(Rng& rng, const Graph& g);

VrpInstance random_cvrp(Rng& rng, int n, int k);
VrpInstance random_brp(Rng& rng, int n, int k);
/// Budgeted uncertainty with the given gamma.
RcmstInstance random_rcmst(Rng& rng, int customers, const Rational& gamma);

}  // namespace gsec
