#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "rnalab/families.hpp"
#include "rnalab/solvers.hpp"
#include "rnalab/tree_codes.hpp"

using namespace rnalab;

TEST(Star, Construction) {
  EXPECT_EQ(star(1), path(2));
  EXPECT_EQ(star(4).max_degree(), 4u);
  EXPECT_EQ(star(9).order(), 10u);
  EXPECT_THROW(star(0), Error);
}

TEST(Path, Construction) {
  EXPECT_EQ(path(2).size(), 1u);
  EXPECT_EQ(rna(path(7)).value, 1u);
  EXPECT_EQ(path(1).order(), 1u);
}

TEST(Spider, ConstructionAndIds) {
  Graph s = spider(7, 3);
  EXPECT_EQ(s.order(), 10u);
  EXPECT_EQ(s.max_degree(), 7u);
  EXPECT_TRUE(is_tree(s));
  // long leg 0-1-8-9
  EXPECT_TRUE(s.has_edge(0, 1));
  EXPECT_TRUE(s.has_edge(1, 8));
  EXPECT_TRUE(s.has_edge(8, 9));
  for (Vertex leaf = 2; leaf <= 7; ++leaf) EXPECT_EQ(s.degree(leaf), 1u);
  EXPECT_EQ(spider(5, 1), star(5));
  EXPECT_EQ(rna(spider(7, 3)).value, 3u);
  EXPECT_THROW(spider(1, 3), Error);
  EXPECT_THROW(spider(3, 0), Error);
}

TEST(PerfectKary, Construction) {
  Graph k5 = perfect_kary_depth2(5);
  EXPECT_EQ(k5.order(), 26u);
  std::size_t leaves = 0;
  for (Vertex v = 0; v < k5.order(); ++v) {
    if (k5.degree(v) == 1) ++leaves;
    else EXPECT_EQ(k5.degree(v), 5u);
  }
  EXPECT_EQ(leaves, 20u);
  EXPECT_EQ(perfect_kary_depth2(3).order(), 10u);
  Graph k2 = perfect_kary_depth2(2);
  EXPECT_EQ(canonical_tree_code(k2), canonical_tree_code(path(5)));
}

TEST(RandomTree, DeterministicPerSeed) {
  EXPECT_EQ(random_tree(12, std::uint64_t{7}), random_tree(12, std::uint64_t{7}));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) EXPECT_TRUE(is_tree(random_tree(2 + i % 30, rng)));
  EXPECT_THROW(random_tree(1, std::uint64_t{1}), Error);
}

TEST(RandomTree, ReachesEveryFreeTreeShape) {
  std::mt19937_64 rng(5);
  std::set<std::string> seen;
  for (int i = 0; i < 3000; ++i) seen.insert(canonical_tree_code(random_tree(7, rng)));
  EXPECT_EQ(seen.size(), 11u);
}

TEST(ConnectedSplit, WorkedExamples) {
  EXPECT_EQ(connected_split_min(star(6)).value, 5u);
  EXPECT_EQ(connected_split_min(star(5)).value, 4u);
  EXPECT_EQ(connected_split_min(path(6)).value, 0u);
  auto s = connected_split_min(spider(7, 3));
  EXPECT_EQ(s.value, 4u);
  EXPECT_EQ(s.witness.small_side.size(), 3u);
  EXPECT_THROW(connected_split_min(Graph(1)), Error);
  EXPECT_THROW(connected_split_min(Graph(3, {{0, 1}, {1, 2}, {0, 2}})), Error);
}

TEST(ConnectedSplit, MatchesSubsetOracle) {
  for (std::size_t p = 2; p <= 9; ++p)
    for (const auto& t : enumerate_free_trees(p)) {
      EXPECT_EQ(connected_split_min(t).value, *oracle::connected_split(t));
      for (std::size_t a = 1; a < p; ++a) EXPECT_EQ(bounded_connected_split(t, a), oracle::connected_split(t, a));
    }
}

TEST(ConnectedSplit, SidesReproduceEdgeDeletion) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    Graph t = random_tree(2 + i % 15, rng);
    for (const auto& e : t.edges()) {
      auto s = make_split(t, e);
      EXPECT_EQ(s.small_side.size() + s.large_side.size(), t.order());
      EXPECT_LE(s.small_side.size(), s.large_side.size());
      auto parts = split_by_edge_deletion(t, {e});
      EXPECT_TRUE((parts[0] == s.small_side && parts[1] == s.large_side) ||
                  (parts[1] == s.small_side && parts[0] == s.large_side));
    }
  }
}

TEST(BoundedConnectedSplit, WorkedExamplesAndMonotonicity) {
  EXPECT_EQ(bounded_connected_split(star(5), 1), std::optional<std::size_t>(4));
  EXPECT_EQ(bounded_connected_split(spider(7, 3), 2), std::optional<std::size_t>(6));
  EXPECT_EQ(bounded_connected_split(path(6), 3), std::optional<std::size_t>(0));
  EXPECT_THROW(bounded_connected_split(path(6), 0), Error);
  for (std::size_t p = 2; p <= 9; ++p)
    for (const auto& t : enumerate_free_trees(p)) {
      EXPECT_EQ(bounded_connected_split(t, p - 1), connected_split_min(t).value);
      for (std::size_t a = 1; a + 1 < p; ++a) EXPECT_GE(*bounded_connected_split(t, a), *bounded_connected_split(t, a + 1));
      if (p >= 3 && t.max_degree() + 1 != p) {
        EXPECT_LE(connected_split_min(t).value, p - 3);
      }
    }
}

TEST(BranchDecomposition, WorkedExamples) {
  auto k5 = branch_decomposition(perfect_kary_depth2(5), 0);
  EXPECT_EQ(k5.sizes(), (std::vector<std::size_t>{5, 5, 5, 5, 5}));
  EXPECT_EQ(k5.delta, 5u);
  EXPECT_EQ(branch_decomposition(star(4), 0).sizes(), (std::vector<std::size_t>{1, 1, 1, 1}));
  auto s = branch_decomposition(spider(7, 3), 0);
  EXPECT_EQ(s.sizes(), (std::vector<std::size_t>{3, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(s.secondary_branches[0], (VertexSet{1, 8, 9}));
  EXPECT_EQ(s.secondary_branches[1], (VertexSet{2}));
}

TEST(BranchDecomposition, InvariantsOnRandomTrees) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    Graph t = random_tree(2 + i % 14, rng);
    const Vertex a = static_cast<Vertex>(rng() % t.order());
    auto b = branch_decomposition(t, a);
    EXPECT_EQ(b.secondary_branches.size(), t.degree(a));
    std::size_t total = 0;
    for (std::size_t j = 0; j < b.secondary_branches.size(); ++j) {
      total += b.secondary_branches[j].size();
      EXPECT_FALSE(b.secondary_branches[j].contains(a));
      if (j > 0) {
        EXPECT_GE(b.secondary_branches[j - 1].size(), b.secondary_branches[j].size());
      }
    }
    EXPECT_EQ(total, t.order() - 1);
  }
}

TEST(SpiderBaseSignature, AttainsFormula) {
  EXPECT_EQ(sign_edges(spider(7, 3), spider_base_signature(7, 3)).negative.size(), 3u);
  EXPECT_EQ(sign_edges(spider(5, 2), spider_base_signature(5, 2)).negative.size(), 2u);
  for (std::size_t p = 4; p <= 24; ++p)
    for (std::size_t l = 2; l <= p / 2; ++l) {
      const std::size_t m = p - l;
      const std::size_t neg = sign_edges(spider(m, l), spider_base_signature(m, l)).negative.size();
      EXPECT_EQ(neg, p / 2 - l + 1) << m << "," << l;
      EXPECT_GE(neg, rna(spider(m, l)).value);
    }
  EXPECT_THROW(spider_base_signature(5, 1), Error);
  EXPECT_THROW(spider_base_signature(2, 5), Error);
}

TEST(ConnectedGraphs, EnumerationCounts) {
  // connected labelled graphs on 1..5 vertices
  const std::size_t expected[] = {0, 1, 1, 4, 38, 728};
  for (std::size_t p = 1; p <= 5; ++p) {
    std::size_t count = 0;
    for_each_connected_graph(p, [&](const Graph& g) {
      EXPECT_TRUE(oracle::connected(g));
      ++count;
    });
    EXPECT_EQ(count, expected[p]);
  }
}
