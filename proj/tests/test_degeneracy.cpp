#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "recolor/recolor.hpp"

using namespace recolor;

TEST(DegeneracyOrdering, Examples) {
  EXPECT_EQ(degeneracy(graphs::path(3)), 1);
  const auto p3 = degeneracy_ordering(graphs::path(3));
  EXPECT_NE(p3.order.back(), 1);  // ends at an endpoint
  EXPECT_EQ(degeneracy(graphs::complete(4)), 3);
  EXPECT_EQ(degeneracy(graphs::cube()), 3);
  EXPECT_EQ(oracle::degeneracy_by_orderings(graphs::cube()), 3);
  EXPECT_EQ(degeneracy(Graph(4, {})), 0);
  EXPECT_EQ(degeneracy(graphs::cycle(6)), 2);
  EXPECT_EQ(degeneracy(graphs::petersen()), 3);
  EXPECT_EQ(oracle::degeneracy(graphs::petersen()), 3);
  EXPECT_EQ(degeneracy(graphs::diamond()), 2);
  EXPECT_EQ(degeneracy(Graph(0, {})), 0);
}

TEST(DegeneracyOrdering, WitnessIsConsistent) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const auto g = oracle::random_graph(8, 0.45, rng);
    const auto o = degeneracy_ordering(g);
    for (int i = 0; i < g.order(); ++i) EXPECT_EQ(o.position[o.order[i]], i);
    for (Vertex v = 0; v < g.order(); ++v) {
      int back = 0;
      for (Vertex w : g.neighbours(v)) back += o.position[w] < o.position[v];
      EXPECT_EQ(back, o.back_degree[v]);
    }
    EXPECT_LE(o.degeneracy(), g.max_degree());
  }
}

TEST(Degeneracy, MatchesBruteForceOnAllSmallGraphs) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : all_graphs(n)) ASSERT_EQ(degeneracy(g), oracle::degeneracy(g)) << n;
}

TEST(Degeneracy, MatchesBruteForceOnRandomEightVertexGraphs) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const auto g = oracle::random_graph(8, 0.5, rng);
    ASSERT_EQ(degeneracy(g), oracle::degeneracy(g));
  }
}

TEST(Degeneracy, HereditaryOnInducedSubgraphs) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    const auto g = oracle::random_graph(8, 0.5, rng);
    const int d = degeneracy(g);
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.order(); ++v)
      if (rng() % 2) keep.push_back(v);
    EXPECT_LE(degeneracy(induced_subgraph(g, keep).graph), d);
  }
}

TEST(CheckNonRegularDegeneracy, Examples) {
  EXPECT_EQ(check_non_regular_degeneracy(graphs::path(3)), 1);
  EXPECT_EQ(check_non_regular_degeneracy(graphs::diamond()), 2);
  try {
    check_non_regular_degeneracy(graphs::cycle(6));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GraphIsRegular);
  }
  try {
    check_non_regular_degeneracy(Graph(4, {{0, 1}, {1, 2}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GraphDisconnected);
  }
}

TEST(CheckNonRegularDegeneracy, HoldsOnAllConnectedNonRegularGraphs) {
  for (int n = 3; n <= 7; ++n)
    for (const auto& g : all_graphs(n))
      if (is_connected(g) && !g.is_regular()) {
        EXPECT_LE(check_non_regular_degeneracy(g), g.max_degree() - 1);
      }
}

namespace {

void expect_valid(const Graph& g, const DegeneratePartition& p) {
  std::vector<int> seen(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t t = 0; t < p.parts.size(); ++t) {
    for (Vertex v : p.parts[t]) {
      ++seen[v];
      EXPECT_EQ(p.part_of[v], static_cast<int>(t));
      EXPECT_LE(p.witness[v], p.budgets[t]);
    }
    EXPECT_LE(oracle::degeneracy_of(g, p.parts[t]), p.budgets[t]) << "part " << t;
  }
  for (int s : seen) EXPECT_EQ(s, 1);
}

}  // namespace

TEST(DegeneratePartition, Examples) {
  const int k4_budgets[] = {0, 2};
  const auto k4 = degenerate_partition(graphs::complete(4), 3, k4_budgets);
  expect_valid(graphs::complete(4), k4);
  EXPECT_EQ(k4.parts[0].size(), 1u);

  // Trees with (0, 0): a bipartition.
  const int zeros[] = {0, 0};
  for (const auto& tree : {graphs::path(6), graphs::star(4)}) {
    const auto p = degenerate_partition(tree, 1, zeros);
    expect_valid(tree, p);
    for (auto [u, v] : tree.edges()) EXPECT_NE(p.part_of[u], p.part_of[v]);
  }

  // Random connected non-regular n = 8 graphs with Delta = 4.
  std::mt19937_64 rng(21);
  int tried = 0;
  const int budgets[] = {0, 2};
  while (tried < 20) {
    const auto g = oracle::random_graph(8, 0.4, rng);
    if (!is_connected(g) || g.is_regular() || g.max_degree() != 4 || degeneracy(g) > 3) continue;
    ++tried;
    expect_valid(g, degenerate_partition(g, 3, budgets));
  }
}

TEST(DegeneratePartition, Errors) {
  const int bad_sum[] = {1, 2};
  try {
    degenerate_partition(graphs::complete(4), 3, bad_sum);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetSumMismatch);
  }
  const int budgets[] = {0, 1};
  try {
    degenerate_partition(graphs::complete(4), 2, budgets);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotKDegenerate);
  }
  const int negative[] = {-1, 3};
  EXPECT_THROW(degenerate_partition(graphs::complete(4), 3, negative), Error);
  EXPECT_THROW(degenerate_partition(graphs::complete(4), 3, std::span<const int>{}), Error);
}

TEST(DegeneratePartition, SinglePart) {
  const int budgets[] = {3};
  const auto p = degenerate_partition(graphs::petersen(), 3, budgets);
  EXPECT_EQ(p.parts[0].size(), 10u);
}

TEST(AugmentToMaximalIndependent, Examples) {
  const auto p3 = graphs::path(3);
  DegeneratePartition mid{{{1}, {0, 2}}, {0, 1}, {1, 0, 1}, {0, 0, 0}};
  EXPECT_EQ(augment_to_maximal_independent(p3, mid).parts, mid.parts);

  const auto p4 = graphs::path(4);
  DegeneratePartition first{{{0}, {1, 2, 3}}, {0, 1}, {0, 1, 1, 1}, {0, 0, 0, 0}};
  const auto grown = augment_to_maximal_independent(p4, first);
  EXPECT_EQ(grown.parts[0], (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(grown.parts[1], (std::vector<Vertex>{1, 3}));
  EXPECT_EQ(augment_to_maximal_independent(p4, grown).parts, grown.parts);

  DegeneratePartition clash{{{0, 1}, {2, 3}}, {0, 1}, {0, 0, 1, 1}, {0, 0, 0, 0}};
  try {
    augment_to_maximal_independent(p4, clash);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PartNotIndependent);
  }
}

TEST(AugmentToMaximalIndependent, MaximalAndDominating) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    const auto g = oracle::random_graph(8, 0.35, rng);
    const int d = std::max(1, degeneracy(g));
    const int budgets[] = {0, d - 1};
    const auto before = degenerate_partition(g, d, budgets);
    const auto after = augment_to_maximal_independent(g, before);
    for (auto [u, v] : g.edges()) EXPECT_FALSE(after.part_of[u] == 0 && after.part_of[v] == 0);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (after.part_of[v] == 0) continue;
      bool dominated = false;
      for (Vertex w : g.neighbours(v)) dominated |= after.part_of[w] == 0;
      EXPECT_TRUE(dominated) << "vertex " << v << " could join part 0";
    }
    EXPECT_LE(after.parts[1].size(), before.parts[1].size());
    EXPECT_LE(oracle::degeneracy_of(g, after.parts[1]), d - 1);
  }
}
