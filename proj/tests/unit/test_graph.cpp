#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "gsec/errors.hpp"
#include "gsec/graph.hpp"
#include "gsec/random_instances.hpp"
#include "oracles.hpp"

using namespace gsec;

TEST(EnumerateForests, SingleVertex) {
  const Graph g(1, {});
  const auto fs = enumerate_forests(g);
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_TRUE(fs[0].empty());
  EXPECT_EQ(fs[1].verts, VertexSet::single(0));
  EXPECT_TRUE(fs[1].edges.empty());
}

TEST(EnumerateForests, TriangleHasSeventeen) {
  const Graph k3 = Graph::complete(3);
  const auto fs = enumerate_forests(k3);
  EXPECT_EQ(fs.size(), 17u);
  EXPECT_EQ(fs.size(), oracle::all_forests(k3).size());
}

TEST(EnumerateForests, MatchesCycleFreeFilter) {
  for (int n = 1; n <= 5; ++n) {
    const Graph kn = Graph::complete(n);
    EXPECT_EQ(enumerate_forests(kn), oracle::all_forests(kn)) << "K" << n;
  }
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    const Graph g = random_graph(rng, uniform_int(rng, 2, 6), 0.5);
    EXPECT_EQ(enumerate_forests(g), oracle::all_forests(g));
  }
}

TEST(EnumerateForests, CapIsEnforced) {
  const int saved = enumeration_cap();
  set_enumeration_cap(4);
  EXPECT_THROW(enumerate_forests(Graph::complete(5)), CapExceeded);
  set_enumeration_cap(saved);
  EXPECT_NO_THROW(enumerate_forests(Graph::complete(5)));
}

TEST(EnumerateForests, Invariants) {
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    const Graph g = random_graph(rng, uniform_int(rng, 2, 6), 0.6);
    const auto fs = enumerate_forests(g);
    EXPECT_TRUE(std::adjacent_find(fs.begin(), fs.end(), std::greater_equal<>()) == fs.end()) << "strictly ordered";
    for (const auto& f : fs) {
      EXPECT_EQ(f.num_components(), oracle::count_components(g, f.verts, f.edges));
      EXPECT_EQ(induced_subforest(g, f, f.verts), f);
      for (std::uint32_t s = 0; s < (1u << g.num_vertices()); s += 3) {
        const Forest sub = induced_subforest(g, f, VertexSet(s));
        EXPECT_TRUE(std::binary_search(fs.begin(), fs.end(), sub)) << "closed under restriction";
        const Forest bigger = induced_subforest(g, f, VertexSet(s) | VertexSet::single(0));
        EXPECT_TRUE(sub.edges.subset_of(bigger.edges)) << "monotone";
      }
    }
  }
}

TEST(InducedSubforest, Examples) {
  const Graph k4 = Graph::complete(4);
  const Forest path = path_to_forest(k4, PathSeq({0, 1, 2}));
  const Forest r = induced_subforest(k4, path, VertexSet::of({0, 1}));
  EXPECT_EQ(r.verts, VertexSet::of({0, 1}));
  EXPECT_EQ(r.edges, EdgeSet::single(*k4.edge_id(0, 1)));
  EXPECT_TRUE(induced_subforest(k4, path, VertexSet()).empty());

  const Forest star = make_forest(k4, k4.all_vertices(),
                                  EdgeSet::of({*k4.edge_id(0, 1), *k4.edge_id(0, 2), *k4.edge_id(0, 3)}));
  const Forest leaves = induced_subforest(k4, star, VertexSet::of({1, 2, 3}));
  EXPECT_TRUE(leaves.edges.empty());
  EXPECT_EQ(leaves.num_components(), 3);
}

TEST(Components, Examples) {
  const Graph k4 = Graph::complete(4);
  EXPECT_TRUE(components(k4, Forest{}).empty());
  EXPECT_EQ(components(k4, edgeless_forest(VertexSet::of({0, 2, 3}))).size(), 3u);
  const Forest two = make_forest(k4, k4.all_vertices(), EdgeSet::of({*k4.edge_id(0, 1), *k4.edge_id(2, 3)}));
  const auto cs = components(k4, two);
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(cs[0].verts, VertexSet::of({0, 1}));
  EXPECT_EQ(cs[1].verts, VertexSet::of({2, 3}));
}

TEST(MakeForest, RejectsCyclesAndStrayEdges) {
  const Graph k3 = Graph::complete(3);
  EXPECT_THROW(make_forest(k3, k3.all_vertices(), k3.all_edges()), InvalidGraph);
  EXPECT_THROW(make_forest(k3, VertexSet::of({0}), EdgeSet::single(*k3.edge_id(0, 1))), InvalidGraph);
  EXPECT_THROW(Graph(2, {{0, 0}}), InvalidGraph);
  EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), InvalidGraph);
}

TEST(EnumeratePaths, SmallCliques) {
  const auto p2 = enumerate_paths(Graph::complete(2));
  ASSERT_EQ(p2.size(), 4u);
  EXPECT_TRUE(p2[0].empty());
  const auto p3 = enumerate_paths(Graph::complete(3));
  EXPECT_EQ(p3.size(), 10u);
  // Independent count: vertex orderings modulo reversal.
  std::set<std::vector<int>> seen;
  for (std::uint32_t s = 1; s < 8; ++s) {
    auto perm = VertexSet(s).indices();
    do {
      auto rev = perm;
      std::reverse(rev.begin(), rev.end());
      seen.insert(std::min(perm, rev));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  EXPECT_EQ(p3.size(), seen.size() + 1);
}

TEST(EnumeratePaths, UniqueUpToReversalAndSingleComponent) {
  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    const Graph g = random_graph(rng, uniform_int(rng, 2, 6), 0.6);
    const auto ps = enumerate_paths(g);
    std::set<std::vector<int>> keys;
    for (const auto& p : ps) {
      std::vector<int> v(p.verts().begin(), p.verts().end());
      auto r = v;
      std::reverse(r.begin(), r.end());
      EXPECT_TRUE(keys.insert(std::min(v, r)).second);
      EXPECT_EQ(path_to_forest(g, p).num_components(), p.empty() ? 0 : 1);
      EXPECT_EQ(PathSeq(r), p);
    }
  }
}

TEST(EnumerateTrees, TriangleHasNine) {
  const Graph k3 = Graph::complete(3);
  const auto ts = enumerate_trees(k3);
  EXPECT_EQ(ts.size(), 9u);
  std::size_t single = 0;
  for (const auto& f : enumerate_forests(k3)) single += f.num_components() == 1 ? 1 : 0;
  EXPECT_EQ(ts.size(), single);
}

TEST(BitMask, Basics) {
  const VertexSet s = VertexSet::of({1, 3});
  EXPECT_EQ(s.size(), 2);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(0));
  EXPECT_EQ(s.with(0).bits(), 0b1011u);
  EXPECT_EQ(s.without(1), VertexSet::single(3));
  EXPECT_TRUE(VertexSet::single(1).subset_of(s));
  EXPECT_EQ(VertexSet::full(3).indices(), (std::vector<int>{0, 1, 2}));
}
