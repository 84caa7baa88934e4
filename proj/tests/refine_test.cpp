#include "wlcovers/refine.hpp"

#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "wlcovers/bundled.hpp"
#include "wlcovers/covers.hpp"

namespace wlcovers {
namespace {

bool refines(const Coloring& finer, const Coloring& coarser) {
  std::map<Color, Color> image;
  for (std::size_t v = 0; v < finer.colors.size(); ++v) {
    auto [it, inserted] = image.emplace(finer.colors[v], coarser.colors[v]);
    if (!inserted && it->second != coarser.colors[v]) return false;
  }
  return true;
}

Graph union_of(std::initializer_list<Graph> parts) {
  Graph out;
  for (const Graph& g : parts) out = disjoint_union(out, g).graph;
  return out;
}

TEST(ColorRefineTest, PathOnThreeVertices) {
  const RefinementTrace trace = color_refine(path_graph(3));
  EXPECT_EQ(trace.stable_round, 2u);
  EXPECT_EQ(trace.stable().class_count(), 2u);
  EXPECT_EQ(trace.stable().colors[0], trace.stable().colors[2]);
  EXPECT_NE(trace.stable().colors[0], trace.stable().colors[1]);
}

TEST(ColorRefineTest, CycleIsMonochromatic) {
  const RefinementTrace trace = color_refine(cycle_graph(6));
  EXPECT_EQ(trace.stable().class_count(), 1u);
  EXPECT_EQ(trace.stable_round, 1u);
}

TEST(ColorRefineTest, BundledBaseIsDiscrete) {
  EXPECT_EQ(stable_coloring(rigid_base_graph()).class_count(), 9u);
  EXPECT_EQ(stable_coloring(second_rigid_base_graph()).class_count(), 7u);
}

TEST(ColorRefineTest, InitialColoringIsRespected) {
  Coloring initial{{5, 5, 9}};
  const RefinementTrace trace = color_refine(path_graph(3), initial);
  EXPECT_EQ(trace.rounds[0].colors, (std::vector<Color>{0, 0, 1}));
  EXPECT_EQ(trace.stable().class_count(), 3u);
  EXPECT_THROW(color_refine(path_graph(3), Coloring{{0, 0}}), std::invalid_argument);
}

TEST(ColorRefineTest, EmptyGraph) {
  const RefinementTrace trace = color_refine(Graph{});
  EXPECT_EQ(trace.rounds.size(), 1u);
  EXPECT_EQ(trace.stable_round, 0u);
}

TEST(ColorRefineTest, MonotoneAndBoundedOnRandomGraphs) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 25);
    const Graph g = oracle::random_graph(size(rng), 0.2, rng);
    const RefinementTrace trace = color_refine(g);
    EXPECT_LE(trace.stable_round, g.vertex_count());
    for (std::size_t r = 0; r + 1 < trace.rounds.size(); ++r) {
      EXPECT_TRUE(refines(trace.rounds[r + 1], trace.rounds[r]));
    }
    const auto& last = trace.rounds[trace.stable_round];
    const auto& before = trace.rounds[trace.stable_round - 1];
    EXPECT_EQ(last.class_count(), before.class_count());
  }
}

TEST(ColorRefineTest, HistogramIsPermutationInvariant) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(15, 0.2, rng);
    const Graph h = relabel(g, oracle::random_permutation(15, rng));
    EXPECT_EQ(histogram(stable_coloring(g)), histogram(stable_coloring(h)));
  }
}

TEST(WLTest, CycleAgainstTwoTriangles) {
  const Graph two_c3 = union_of({cycle_graph(3), cycle_graph(3)});
  EXPECT_TRUE(wl_test(cycle_graph(6), two_c3).equivalent);
}

TEST(WLTest, SelfAndDistinguishedAtRoundOne) {
  const Graph base = rigid_base_graph();
  EXPECT_TRUE(wl_test(base, base).equivalent);
  const WLVerdict v = wl_test(cycle_graph(3), path_graph(3));
  EXPECT_FALSE(v.equivalent);
  EXPECT_EQ(v.distinguishing_round, 1u);
  EXPECT_EQ(wl_test(cycle_graph(3), cycle_graph(4)).distinguishing_round, 0u);
}

TEST(WLTest, SymmetricAndSoundOnRandomGraphs) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> size(2, 8);
    const std::size_t n = size(rng);
    const Graph g = oracle::random_graph(n, 0.4, rng);
    const Graph h = trial % 2 ? relabel(g, oracle::random_permutation(n, rng)) : oracle::random_graph(n, 0.4, rng);
    const WLVerdict gh = wl_test(g, h);
    const WLVerdict hg = wl_test(h, g);
    EXPECT_EQ(gh.equivalent, hg.equivalent);
    EXPECT_EQ(gh.distinguishing_round, hg.distinguishing_round);
    if (oracle::brute_force_isomorphic(g, h)) EXPECT_TRUE(gh.equivalent);
  }
}

TEST(IsDiscreteTest, Examples) {
  EXPECT_FALSE(is_discrete(cycle_graph(6)));
  const Graph spider = Graph::from_edge_list(7, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}});
  EXPECT_TRUE(is_discrete(spider));
  EXPECT_TRUE(is_discrete(rigid_base_graph()));
}

TEST(ComponentColorGroupsTest, Examples) {
  const auto all_cycles = component_color_groups(union_of({cycle_graph(6), cycle_graph(3), cycle_graph(3)}));
  ASSERT_EQ(all_cycles.groups.size(), 1u);
  EXPECT_EQ(all_cycles.groups[0].components, (std::vector<std::size_t>{0, 1, 2}));

  EXPECT_EQ(component_color_groups(union_of({cycle_graph(3), path_graph(3)})).groups.size(), 2u);

  const auto squares = component_color_groups(union_of({cycle_graph(4), cycle_graph(4), path_graph(2)}));
  ASSERT_EQ(squares.groups.size(), 2u);
  EXPECT_EQ(squares.groups[0].components, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(squares.groups[1].components, (std::vector<std::size_t>{2}));
}

TEST(ComponentColorGroupsTest, ColorSetsEqualOrDisjointOnRandomUnions) {
  // component_color_groups throws on a partial overlap.
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(20, 0.1, rng);
    EXPECT_NO_THROW(component_color_groups(g));
  }
}

TEST(CheckDecompositionTest, CycleAgainstTwoTriangles) {
  const auto v = check_decomposition(cycle_graph(6), union_of({cycle_graph(3), cycle_graph(3)}));
  EXPECT_TRUE(v.passed);
  ASSERT_EQ(v.groups.size(), 1u);
  EXPECT_EQ(v.groups[0].g_order, 6u);
  EXPECT_EQ(v.groups[0].h_order, 6u);
  EXPECT_EQ(v.groups[0].h_components.size(), 2u);
}

TEST(CheckDecompositionTest, AllCyclesShareOneGroup) {
  // Every 2-regular graph has the same stable colouring, so C6 ⊕ C4 and
  // C3 ⊕ C3 ⊕ C4 form a single group of order 10.
  const auto v = check_decomposition(union_of({cycle_graph(6), cycle_graph(4)}),
                                     union_of({cycle_graph(3), cycle_graph(3), cycle_graph(4)}));
  EXPECT_TRUE(v.passed);
  ASSERT_EQ(v.groups.size(), 1u);
  EXPECT_EQ(v.groups[0].g_order, 10u);
}

TEST(CheckDecompositionTest, TwoGroups) {
  const Graph k4 = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const auto v = check_decomposition(union_of({cycle_graph(6), k4}), union_of({cycle_graph(3), k4, cycle_graph(3)}));
  EXPECT_TRUE(v.passed);
  EXPECT_EQ(v.groups.size(), 2u);
}

TEST(CheckDecompositionTest, OrderMismatchFails) {
  const auto v = check_decomposition(cycle_graph(6), cycle_graph(3));
  EXPECT_FALSE(v.passed);
  EXPECT_EQ(v.offending_group, 0u);
  EXPECT_NE(v.message.find("6 != 3"), std::string::npos);
}

TEST(CheckDecompositionTest, OneSidedGroupFails) {
  const auto v = check_decomposition(union_of({cycle_graph(3), path_graph(3)}), union_of({cycle_graph(3), cycle_graph(3)}));
  EXPECT_FALSE(v.passed);
}

TEST(CheckDecompositionTest, AgreesWithWLTestOnRandomUnions) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(9, 0.15, rng);
    const Graph h = trial % 3 == 0 ? relabel(g, oracle::random_permutation(9, rng)) : oracle::random_graph(9, 0.15, rng);
    EXPECT_EQ(check_decomposition(g, h).passed, wl_test(g, h).equivalent);
  }
}

}  // namespace
}  // namespace wlcovers
