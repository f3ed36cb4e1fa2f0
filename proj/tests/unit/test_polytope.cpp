#include <gtest/gtest.h>

#include "gsec/errors.hpp"
#include "gsec/polytope.hpp"
#include "gsec/random_instances.hpp"
#include "gsec/simplex.hpp"
#include "oracles.hpp"

using namespace gsec;

namespace {

std::vector<int> as_vector(const RhsTable& f) { return {f.values().begin(), f.values().end()}; }

RhsTable table_k3(int whole) { return RhsTable(3, {0, 1, 1, 1, 1, 1, 1, whole}); }

}  // namespace

TEST(Indicator, Examples) {
  Rng rng(1);
  const Graph k4 = Graph::complete(4);
  const GsecPolytope secs(k4, RhsTable::ones(4));
  for (const auto& f : enumerate_forests(k4)) EXPECT_TRUE(indicator_in_polytope(secs, f).holds);

  std::vector<int> l(16, 1);
  l[0] = 0;
  l[15] = 2;
  const GsecPolytope deg(k4, RhsTable(4, l));
  const auto r = indicator_in_polytope(deg, path_to_forest(k4, PathSeq({0, 1, 2, 3})));
  ASSERT_FALSE(r.holds);
  const auto& v = std::get<ViolatedGsec>(*r.certificate);
  EXPECT_EQ(v.subset, k4.all_vertices());
  EXPECT_EQ(v.lhs, 3);
  EXPECT_EQ(v.rhs_value, 2);
  for (int t = 0; t < 5; ++t)
    EXPECT_TRUE(indicator_in_polytope(GsecPolytope(k4, random_rhs(rng, 4)), Forest{}).holds);
}

TEST(IntegerPoints, Examples) {
  const Graph k3 = Graph::complete(3);
  EXPECT_EQ(integer_points(GsecPolytope(k3, RhsTable::cardinality(3))), std::vector<EdgeSet>{EdgeSet()});
  EXPECT_EQ(integer_points(GsecPolytope(k3, RhsTable::ones(3))).size(), 7u);
  const std::vector<Rational> d{1, 1, -1};
  const auto pts = integer_points(GsecPolytope(k3, rhs_from_g(brp_load(d, 1))));
  EXPECT_EQ(std::count(pts.begin(), pts.end(), EdgeSet::single(*k3.edge_id(0, 1))), 0);
}

TEST(IntegerPoints, MatchScanAndAreDownwardClosed) {
  Rng rng(2);
  for (int t = 0; t < 30; ++t) {
    const Graph g = random_graph(rng, uniform_int(rng, 2, 5), 0.7);
    const RhsTable f = random_rhs(rng, g.num_vertices());
    const GsecPolytope p(g, f);
    const auto pts = integer_points(p, false);
    EXPECT_EQ(pts, oracle::integer_points(g, as_vector(f)));
    for (EdgeSet x : pts)
      for (int id : x.indices()) EXPECT_TRUE(std::binary_search(pts.begin(), pts.end(), x.without(id)));
    EXPECT_TRUE(integer_points_downward_closed(p).holds);
  }
}

TEST(Represents, Examples) {
  const Graph k3 = Graph::complete(3);
  EXPECT_TRUE(represents(GsecPolytope(k3, RhsTable::ones(3)), ForestFamily::all(k3)).holds);
  const Graph k4 = Graph::complete(4);
  const auto deg = ForestFamily::degree_bounded(k4, {2, 2, 2, 2});
  Rng rng(3);
  for (int t = 0; t < 50; ++t) EXPECT_FALSE(represents(GsecPolytope(k4, random_rhs(rng, 4)), deg).holds);
}

TEST(MaxXS, Examples) {
  const Graph k3 = Graph::complete(3);
  EXPECT_EQ(max_xS(GsecPolytope(k3, RhsTable::ones(3)), k3.all_vertices()).value, 2);
  EXPECT_EQ(max_xS(GsecPolytope(k3, RhsTable::cardinality(3)), VertexSet::of({0, 1})).value, 0);
  EXPECT_EQ(max_xS(GsecPolytope(k3, table_k3(2)), k3.all_vertices()).value, 1);
  EXPECT_EQ(oracle::lp_vertex_max(k3, as_vector(table_k3(2)), k3.all_vertices()), 1);
  EXPECT_EQ(oracle::lp_vertex_max(k3, as_vector(RhsTable::ones(3)), k3.all_vertices()), 2);
}

TEST(MaxXS, PropertiesOnRandomTables) {
  Rng rng(4);
  for (int t = 0; t < 25; ++t) {
    const int n = uniform_int(rng, 2, 5);
    const Graph g = random_graph(rng, n, 0.8);
    const GsecPolytope p(g, random_rhs(rng, n));
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
      const VertexSet vs(s);
      const auto a = max_xS(p, vs);
      EXPECT_TRUE(in_polytope(p, a.x));
      EXPECT_LE(a.value, std::min(p.bound(vs), g.edges_within(vs).size()));
      EXPECT_EQ(a.value, max_xS(p, vs, {.prune = false, .shuffle_seed = rng()}).value);
      for (int v = 0; v < n; ++v)
        if (!vs.contains(v)) EXPECT_GE(max_xS(p, vs.with(v)).value, a.value);
    }
  }
}

TEST(Containment, Examples) {
  const Graph k2 = Graph::complete(2);
  const auto r = polytope_contains(GsecPolytope(k2, RhsTable::cardinality(2)), GsecPolytope(k2, RhsTable::ones(2)));
  ASSERT_FALSE(r.holds);
  const auto& sep = std::get<SeparatingPoint>(*r.certificate);
  EXPECT_EQ(sep.x, std::vector<Rational>{1});
  const Graph k3 = Graph::complete(3);
  const GsecPolytope p(k3, table_k3(2));
  EXPECT_TRUE(polytope_contains(p, p).holds);
}

TEST(Containment, PointwiseDominanceImpliesContainment) {
  Rng rng(5);
  int converse_seen = 0;
  for (int t = 0; t < 150; ++t) {
    const int n = uniform_int(rng, 2, 4);
    const Graph g = random_graph(rng, n, 0.7);
    const RhsTable a = random_rhs(rng, n), b = random_rhs(rng, n);
    const bool contains = polytope_contains(GsecPolytope(g, a), GsecPolytope(g, b)).holds;
    if (pointwise_leq(a, b)) EXPECT_TRUE(contains);
    if (contains && !pointwise_leq(a, b)) ++converse_seen;
  }
  // Containment without dominance happens (e.g. on subsets without edges).
  EXPECT_GT(converse_seen, 0);
}

TEST(Simplex, SmallProblems) {
  // max x + y s.t. x + 2y <= 4, 3x + y <= 6.
  const LpResult r = maximize({{{1, 2}, {3, 1}}, {4, 6}, {1, 1}});
  ASSERT_TRUE(r.bounded);
  EXPECT_EQ(r.value, Rational(14, 5));
  EXPECT_EQ(r.x, (std::vector<Rational>{Rational(8, 5), Rational(6, 5)}));
  EXPECT_FALSE(maximize({{{1, -1}}, {1}, {1, 1}}).bounded);
  EXPECT_THROW(maximize({{{1}}, {-1}, {1}}), BadParams);
}
