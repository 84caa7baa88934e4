#include "wlcovers/graph.hpp"

#include <map>
#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "wlcovers/bundled.hpp"

namespace wlcovers {
namespace {

bool symmetric(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (Vertex u : g.neighbors(v)) {
      if (!g.has_edge(u, v) || u == v) return false;
    }
  }
  return true;
}

TEST(FromEdgeListTest, Triangle) {
  const Graph g = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g, cycle_graph(3));
}

TEST(FromEdgeListTest, DuplicatePairCollapses) {
  const Graph g = Graph::from_edge_list(2, {{0, 1}, {1, 0}});
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}}));
}

TEST(FromEdgeListTest, BundledBase) {
  const Graph g = rigid_base_graph();
  EXPECT_EQ(g.vertex_count(), 9u);
  EXPECT_EQ(g.edge_count(), 10u);
  EXPECT_EQ(euler_characteristic(g), -1);
  EXPECT_TRUE(is_connected(g));
}

TEST(FromEdgeListTest, RejectsBadInput) {
  EXPECT_THROW(Graph::from_edge_list(3, {{0, 3}}), GraphError);
  EXPECT_THROW(Graph::from_edge_list(3, {{1, 1}}), GraphError);
}

TEST(FromEdgeListTest, RandomGraphsAreSymmetric) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<std::size_t> size(0, 12);
    EXPECT_TRUE(symmetric(oracle::random_graph(size(rng), 0.4, rng)));
  }
}

TEST(DisjointUnionTest, Examples) {
  const auto two_c3 = disjoint_union(cycle_graph(3), cycle_graph(3));
  EXPECT_EQ(two_c3.graph.vertex_count(), 6u);
  EXPECT_EQ(two_c3.offset, 3u);
  EXPECT_EQ(connected_components(two_c3.graph).size(), 2u);

  const auto with_empty = disjoint_union(Graph{}, cycle_graph(3));
  EXPECT_EQ(with_empty.offset, 0u);
  EXPECT_EQ(with_empty.graph, cycle_graph(3));

  const auto twelve = disjoint_union(cycle_graph(6), two_c3.graph);
  EXPECT_EQ(twelve.graph.vertex_count(), 12u);
  EXPECT_EQ(twelve.graph.edge_count(), 12u);
  EXPECT_FALSE(twelve.graph.has_edge(5, 6));
}

TEST(DisjointUnionTest, EulerCharacteristicIsAdditive) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(7, 0.3, rng);
    const Graph h = oracle::random_graph(5, 0.5, rng);
    EXPECT_EQ(euler_characteristic(disjoint_union(g, h).graph), euler_characteristic(g) + euler_characteristic(h));
  }
}

TEST(ConnectedComponentsTest, Examples) {
  EXPECT_EQ(connected_components(cycle_graph(6)).groups, (std::vector<std::vector<Vertex>>{{0, 1, 2, 3, 4, 5}}));
  const Graph two_c3 = disjoint_union(cycle_graph(3), cycle_graph(3)).graph;
  EXPECT_EQ(connected_components(two_c3).groups, (std::vector<std::vector<Vertex>>{{0, 1, 2}, {3, 4, 5}}));
  const Graph isolated = Graph::from_edge_list(4, {{0, 2}, {2, 3}});
  EXPECT_EQ(connected_components(isolated).groups, (std::vector<std::vector<Vertex>>{{0, 2, 3}, {1}}));
}

TEST(EulerCharacteristicTest, Examples) {
  EXPECT_EQ(euler_characteristic(cycle_graph(6)), 0);
  std::mt19937_64 rng(3);
  for (std::size_t n = 1; n < 15; ++n) EXPECT_EQ(euler_characteristic(oracle::random_tree(n, rng)), 1);
  EXPECT_EQ(euler_characteristic(rigid_base_graph()), -1);
}

TEST(GraphsIsomorphicTest, Examples) {
  const Graph c3 = cycle_graph(3);
  const std::vector<Vertex> perm{2, 0, 1};
  const auto phi = graphs_isomorphic(c3, relabel(c3, perm));
  ASSERT_TRUE(phi);
  EXPECT_TRUE(is_isomorphism(c3, relabel(c3, perm), *phi));

  EXPECT_FALSE(graphs_isomorphic(cycle_graph(6), disjoint_union(c3, c3).graph));
}

TEST(GraphsIsomorphicTest, SizeGuardRefuses) {
  EXPECT_THROW(graphs_isomorphic(cycle_graph(40), cycle_graph(40), 32), SizeGuardExceeded);
}

TEST(GraphsIsomorphicTest, RelabelledRandomGraphs) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 30);
    const Graph g = oracle::random_graph(size(rng), 0.25, rng);
    const auto perm = oracle::random_permutation(g.vertex_count(), rng);
    const Graph h = relabel(g, perm);
    const auto phi = graphs_isomorphic(g, h);
    ASSERT_TRUE(phi);
    EXPECT_TRUE(is_isomorphism(g, h, *phi));
  }
}

TEST(GraphsIsomorphicTest, HardRegularPairs) {
  // Strongly regular-like WL-blind pairs: every vertex class is a single cell.
  const Graph c12 = cycle_graph(12);
  const Graph four_c3 =
      disjoint_union(disjoint_union(cycle_graph(3), cycle_graph(3)).graph,
                     disjoint_union(cycle_graph(3), cycle_graph(3)).graph).graph;
  const Graph c4_c8 = disjoint_union(cycle_graph(4), cycle_graph(8)).graph;
  EXPECT_FALSE(graphs_isomorphic(c12, four_c3));
  EXPECT_FALSE(graphs_isomorphic(c12, c4_c8));
  EXPECT_FALSE(graphs_isomorphic(four_c3, c4_c8));
  std::mt19937_64 rng(9);
  const Graph shuffled = relabel(c4_c8, oracle::random_permutation(12, rng));
  EXPECT_TRUE(graphs_isomorphic(c4_c8, shuffled));
}

TEST(GraphsIsomorphicTest, EquivalenceRelationOnRandomGraphs) {
  std::mt19937_64 rng(13);
  std::vector<Graph> graphs;
  for (int k = 0; k < 40; ++k) {
    std::uniform_int_distribution<std::size_t> size(4, 6);
    const Graph g = oracle::random_graph(size(rng), 0.5, rng);
    graphs.push_back(g);
    graphs.push_back(relabel(g, oracle::random_permutation(g.vertex_count(), rng)));
  }
  const std::size_t k = graphs.size();
  std::vector<std::vector<bool>> iso(k, std::vector<bool>(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) iso[a][b] = graphs_isomorphic(graphs[a], graphs[b]).has_value();
  }
  for (std::size_t a = 0; a < k; ++a) {
    EXPECT_TRUE(iso[a][a]);
    for (std::size_t b = 0; b < k; ++b) {
      EXPECT_EQ(iso[a][b], iso[b][a]);
      for (std::size_t c = 0; c < k; ++c) {
        if (iso[a][b] && iso[b][c]) EXPECT_TRUE(iso[a][c]);
      }
    }
  }
}

// Every labelled graph on up to six vertices is compared with the brute-force
// canonical representative of its class and with every other class sharing
// its degree sequence.
TEST(GraphsIsomorphicTest, AgreesWithExhaustiveSearchUpToSixVertices) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    std::map<std::vector<bool>, Graph> reps;
    std::vector<std::pair<Graph, std::vector<bool>>> all;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
      Graph g = oracle::graph_from_code(n, code);
      auto canon = oracle::brute_force_canonical(g);
      reps.try_emplace(canon, g);
      all.emplace_back(std::move(g), std::move(canon));
    }
    auto degrees = [](const Graph& g) {
      std::vector<std::size_t> d;
      for (Vertex v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
      std::sort(d.begin(), d.end());
      return d;
    };
    for (const auto& [g, canon] : all) {
      const auto same = graphs_isomorphic(g, reps.at(canon));
      ASSERT_TRUE(same) << "n=" << n;
      ASSERT_TRUE(is_isomorphism(g, reps.at(canon), *same));
      for (const auto& [other_canon, other] : reps) {
        if (other_canon == canon || degrees(other) != degrees(g)) continue;
        ASSERT_FALSE(graphs_isomorphic(g, other)) << "n=" << n;
      }
    }
    if (n == 6) EXPECT_EQ(reps.size(), 156u);  // unlabelled graphs on 6 vertices
  }
}

TEST(GraphsIsomorphicTest, MatchesBruteForceOnRandomPairs) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(7, 0.45, rng);
    const Graph h = oracle::random_graph(7, 0.45, rng);
    EXPECT_EQ(graphs_isomorphic(g, h).has_value(), oracle::brute_force_isomorphic(g, h));
  }
}

}  // namespace
}  // namespace wlcovers
