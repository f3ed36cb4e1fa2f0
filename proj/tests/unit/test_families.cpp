#include <gtest/gtest.h>

#include <numeric>

#include "gsec/errors.hpp"
#include "gsec/family.hpp"
#include "gsec/random_instances.hpp"
#include "oracles.hpp"

using namespace gsec;

namespace {

Forest star_on(const Graph& g, int center, std::initializer_list<int> leaves) {
  EdgeSet es;
  VertexSet vs = VertexSet::single(center);
  for (int l : leaves) {
    es = es.with(*g.edge_id(center, l));
    vs = vs.with(l);
  }
  return make_forest(g, vs, es);
}

const std::vector<Rational> kExampleDemand{1, 1, -1};

}  // namespace

TEST(Membership, CmstPath) {
  const Graph k3 = Graph::complete(3);
  const auto fam = ForestFamily::cmst(k3, {1, 1, 1}, 2);
  EXPECT_FALSE(fam.contains(path_to_forest(k3, PathSeq({0, 1, 2}))));
  EXPECT_TRUE(fam.contains(path_to_forest(k3, PathSeq({0, 1}))));
}

TEST(Membership, DegreeStarInfeasible) {
  const Graph k4 = Graph::complete(4);
  const auto fam = ForestFamily::degree_bounded(k4, {2, 2, 2, 2});
  EXPECT_FALSE(fam.contains(star_on(k4, 0, {1, 2, 3})));
  EXPECT_TRUE(fam.contains(path_to_forest(k4, PathSeq({0, 1, 2, 3}))));
}

TEST(Membership, EmptyForestAlwaysIn) {
  const Graph k4 = Graph::complete(4);
  EXPECT_TRUE(ForestFamily::cmst(k4, {1, 1, 1, 1}, 1).contains(Forest{}));
  EXPECT_TRUE(ForestFamily::degree_bounded(k4, {0, 0, 0, 0}).contains(Forest{}));
  EXPECT_TRUE(ForestFamily::theta(k4, SetFunction::cardinality(4)).contains(Forest{}));
}

TEST(BrpEvaluators, WorkedExample) {
  const std::vector<int> bad{0, 1, 2}, good{0, 2, 1};
  EXPECT_FALSE(brp_path_feasible(kExampleDemand, 1, bad));
  EXPECT_TRUE(brp_path_feasible(kExampleDemand, 1, good));
  for (int v = 0; v < 3; ++v) {
    const std::vector<int> one{v};
    EXPECT_TRUE(brp_path_feasible(kExampleDemand, 1, one));
  }
}

TEST(BrpEvaluators, RejectsOversizedDemand) {
  const std::vector<Rational> d{2, 0};
  const std::vector<int> order{0, 1};
  EXPECT_THROW(brp_path_feasible(d, 1, order), InvalidDemand);
  EXPECT_THROW(PathFamily::brp(d, 1), InvalidDemand);
  EXPECT_THROW(PathFamily::cvrp({Rational(-1)}, 1), InvalidDemand);
}

TEST(BrpEvaluators, AgreeOnAllOrderingsProperty) {
  Rng rng(17);
  for (int len = 1; len <= 6; ++len)
    for (int t = 0; t < 10; ++t) {
      const Rational q = random_rational(rng, 1, 3, 3);
      const auto d = random_rationals(rng, len, -q, q, 3);
      std::vector<int> order(static_cast<std::size_t>(len));
      std::iota(order.begin(), order.end(), 0);
      do {
        const bool band = brp_feasible_prefix_band(d, q, order);
        EXPECT_EQ(band, brp_feasible_interval_sums(d, q, order));
        EXPECT_EQ(band, oracle::brp_by_initial_load(d, q, order));
      } while (std::next_permutation(order.begin(), order.end()));
    }
}

TEST(DownwardClosed, Examples) {
  Rng rng(1);
  for (int t = 0; t < 5; ++t) {
    const int n = uniform_int(rng, 3, 5);
    const Graph g = random_graph(rng, n, 0.7);
    EXPECT_TRUE(is_downward_closed(ForestFamily::cmst(g, random_rationals(rng, n, 0, 2, 2), 2)).holds);
    std::vector<int> b(static_cast<std::size_t>(n));
    for (auto& x : b) x = uniform_int(rng, 0, 3);
    EXPECT_TRUE(is_downward_closed(ForestFamily::degree_bounded(g, b)).holds);
  }
  const Graph k3 = Graph::complete(3);
  const auto fam = ForestFamily::explicit_forests(k3, {Forest{}, path_to_forest(k3, PathSeq({0, 1, 2}))});
  const auto r = is_downward_closed(fam);
  ASSERT_FALSE(r.holds);
  const auto& pair = std::get<ForestPair>(*r.certificate);
  EXPECT_EQ(pair.relation, "missing_subgraph");
  EXPECT_TRUE(is_subgraph(pair.second, pair.first));
  EXPECT_FALSE(fam.contains(pair.second));
}

TEST(EdgeConsistency, ExplicitAndClosure) {
  const Graph k3 = Graph::complete(3);
  const Forest e01 = make_forest(k3, VertexSet::of({0, 1}), EdgeSet::single(*k3.edge_id(0, 1)));
  const Forest e01plus = make_forest(k3, k3.all_vertices(), e01.edges);
  const auto fam = ForestFamily::explicit_forests(k3, {e01});
  const auto r = is_edge_consistent(fam);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(std::get<ForestPair>(*r.certificate).relation, "same_edge_set");
  const auto closed = edge_consistent_closure(fam);
  EXPECT_TRUE(closed.contains(e01));
  EXPECT_TRUE(closed.contains(e01plus));
  EXPECT_TRUE(is_edge_consistent(closed).holds);
  EXPECT_TRUE(is_edge_consistent(ForestFamily::cmst(k3, {1, 1, 1}, 2)).holds);
}

TEST(VertexConsistency, Examples) {
  const Graph k3 = Graph::complete(3);
  EXPECT_FALSE(is_vertex_consistent(PathFamily::brp(kExampleDemand, 1), k3).holds);
  EXPECT_FALSE(is_vertex_consistent(ForestFamily::path_restriction(
                                        ForestFamily::tree_closure(k3, TreeFamily::paths(PathFamily::brp(kExampleDemand, 1)))))
                   .holds);
  const Graph k4 = Graph::complete(4);
  EXPECT_FALSE(is_vertex_consistent(ForestFamily::degree_bounded(k4, {2, 2, 2, 2})).holds);
  Rng rng(4);
  for (int t = 0; t < 5; ++t)
    EXPECT_TRUE(is_vertex_consistent(ForestFamily::cmst(k4, random_rationals(rng, 4, 0, 2, 2), 2)).holds);
}

TEST(PathClosure, BrpIsSubpathButNotSubsequenceClosed) {
  // (v1, v2, v3) with d = (1, -1, 1), Q = 1 is feasible; dropping the middle
  // vertex leaves (v1, v3) with load 2.
  const std::vector<Rational> d{1, -1, 1};
  const std::vector<int> full{0, 1, 2}, skip{0, 2};
  EXPECT_TRUE(brp_path_feasible(d, 1, full));
  EXPECT_FALSE(brp_path_feasible(d, 1, skip));
  const Graph k3 = Graph::complete(3);
  EXPECT_TRUE(is_subpath_closed(PathFamily::brp(d, 1), k3).holds);
  EXPECT_FALSE(is_subsequence_closed(PathFamily::brp(d, 1), k3).holds);
}

TEST(PathClosure, ExhaustiveSmallInstances) {
  Rng rng(8);
  for (int t = 0; t < 15; ++t) {
    const int n = uniform_int(rng, 2, 6);
    const Graph kn = Graph::complete(n);
    const Rational q = random_rational(rng, 1, 3, 2);
    EXPECT_TRUE(is_subpath_closed(PathFamily::brp(random_rationals(rng, n, -q, q, 2), q), kn).holds);
    const auto cvrp = PathFamily::cvrp(random_rationals(rng, n, 0, q, 2), q);
    EXPECT_TRUE(is_subsequence_closed(cvrp, kn).holds);
    EXPECT_TRUE(is_subpath_closed(cvrp, kn).holds);
    EXPECT_TRUE(contains_trivial_paths(cvrp, kn).holds);
  }
}

TEST(TreeClosure, ComponentwiseMembership) {
  Rng rng(21);
  for (int t = 0; t < 10; ++t) {
    const int n = uniform_int(rng, 3, 5);
    const Graph g = random_graph(rng, n, 0.7);
    const SetFunction xos = random_xos(rng, n, 3);
    const auto fam = ForestFamily::theta(g, xos);
    const TreeFamily trees = TreeFamily::theta(xos);
    for (const auto& f : enumerate_forests(g)) {
      bool all = true;
      for (const auto& c : components(g, f)) all = all && trees.contains(g, c);
      EXPECT_EQ(fam.contains(f), all);
      EXPECT_EQ(fam.contains(f), oracle::in_theta_closure(g, [&](VertexSet s) { return xos(s); }, f));
    }
  }
}

TEST(PathRestriction, MembershipIsBaseAndLinear) {
  Rng rng(22);
  for (int t = 0; t < 10; ++t) {
    const Graph g = random_graph(rng, uniform_int(rng, 3, 5), 0.7);
    const auto base = random_structured_family(rng, g);
    const auto restricted = ForestFamily::path_restriction(base);
    for (const auto& f : enumerate_forests(g))
      EXPECT_EQ(restricted.contains(f), base.contains(f) && oracle::is_linear_forest(g, f));
  }
}

TEST(ContainsEdgeless, Detection) {
  const Graph k3 = Graph::complete(3);
  EXPECT_TRUE(contains_edgeless(ForestFamily::all(k3)).holds);
  const auto r = contains_edgeless(ForestFamily::explicit_forests(k3, {Forest{}}));
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(std::get<ForestWitness>(*r.certificate).reason, "missing_edgeless");
}
