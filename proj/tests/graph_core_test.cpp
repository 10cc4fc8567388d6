#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "rnalab/families.hpp"
#include "rnalab/graph.hpp"
#include "rnalab/io.hpp"
#include "rnalab/spanning.hpp"
#include "rnalab/tree_codes.hpp"

using namespace rnalab;

namespace {

Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.push_back(Edge::make(i, static_cast<Vertex>((i + 1) % n)));
  return Graph(n, e);
}

}  // namespace

TEST(Graph, RejectsMalformedInput) {
  EXPECT_THROW(Graph(0), Error);
  EXPECT_THROW(Graph(3, {{0, 0}}), Error);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), Error);
  EXPECT_THROW(Graph(3, {{0, 3}}), Error);
}

TEST(Graph, NormalizesEdgesAndAdjacency) {
  Graph g(4, {{3, 1}, {2, 0}, {1, 0}});
  ASSERT_EQ(g.edges().size(), 3u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
  EXPECT_EQ(g.edges()[2], (Edge{1, 3}));
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex w : g.neighbors(v)) EXPECT_TRUE(g.has_edge(w, v));
  EXPECT_EQ(g.degree(0), 2u);
  EXPECT_EQ(g.max_degree(), 2u);
}

TEST(Graph, Connectivity) {
  EXPECT_TRUE(is_connected(path(3)));
  EXPECT_FALSE(is_connected(Graph(2)));
  EXPECT_TRUE(is_connected(cycle(4)));
  EXPECT_TRUE(is_tree(star(4)));
  EXPECT_FALSE(is_tree(cycle(4)));
  EXPECT_TRUE(is_tree(path(6)));
}

TEST(Graph, InducedRelabelsByRank) {
  Graph g = path(5);
  Graph h = g.induced(VertexSet{1, 2, 4});
  EXPECT_EQ(h.order(), 3u);
  EXPECT_EQ(h.size(), 1u);
  EXPECT_TRUE(h.has_edge(0, 1));
  EXPECT_EQ(g.without_vertex(0), path(4));
}

TEST(Bridges, WorkedExamples) {
  EXPECT_EQ(bridges(path(4)).size(), 3u);
  EXPECT_TRUE(bridges(cycle(4)).empty());
  auto b = bridges(triangle_with_pendants());
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0], (Edge{0, 1}));
  EXPECT_EQ(b[1], (Edge{3, 4}));
  EXPECT_THROW(bridges(Graph(3, {{0, 1}})), Error);
}

TEST(Bridges, MatchesDeletionOracleOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = 2 + i % 13;
    Graph g = random_connected_graph(n, static_cast<std::size_t>(i % 5), rng);
    const auto expected = oracle::bridges(g);
    EXPECT_EQ(bridges(g), expected) << write_graph6(g);
    for (const auto& e : g.edges()) {
      const bool is_bridge = std::binary_search(expected.begin(), expected.end(), e);
      EXPECT_EQ(split_by_edge_deletion(g, {e}).size(), is_bridge ? 2u : 1u);
    }
  }
}

TEST(SplitByEdgeDeletion, WorkedExamples) {
  auto p4 = split_by_edge_deletion(path(4), {Edge{1, 2}});
  ASSERT_EQ(p4.size(), 2u);
  EXPECT_EQ(p4[0], (VertexSet{0, 1}));
  EXPECT_EQ(p4[1], (VertexSet{2, 3}));

  auto k14 = split_by_edge_deletion(star(4), {Edge{0, 1}});
  ASSERT_EQ(k14.size(), 2u);
  EXPECT_EQ(k14[0], (VertexSet{0, 2, 3, 4}));
  EXPECT_EQ(k14[1], (VertexSet{1}));

  // g-u-v-z(-t)-y-x-h with the bridges uv and xy removed
  Graph t(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {5, 6}, {6, 7}});
  auto parts = split_by_edge_deletion(t, {Edge{1, 2}, Edge{5, 6}});
  std::multiset<std::size_t> sizes;
  for (const auto& c : parts) sizes.insert(c.size());
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{2, 2, 4}));

  EXPECT_THROW(split_by_edge_deletion(path(4), {Edge{0, 2}}), Error);
}

TEST(FreeTrees, CountsMatchKnownSequence) {
  for (std::size_t p = 1; p <= 11; ++p) EXPECT_EQ(enumerate_free_trees(p).size(), oracle::kFreeTreeCounts[p]) << p;
  EXPECT_THROW(enumerate_free_trees(12), CapError);
}

TEST(FreeTrees, PruferRouteAgreesWithExtension) {
  for (std::size_t p = 1; p <= 9; ++p) EXPECT_EQ(free_tree_codes_by_prufer(p), free_tree_codes(p)) << p;
}

TEST(FreeTrees, LabeledCountMatchesCayley) {
  for (std::size_t p = 2; p <= 7; ++p) {
    std::size_t count = 0;
    for_each_labeled_tree(p, [&](const Graph& t) {
      ASSERT_TRUE(is_tree(t));
      ++count;
    });
    std::size_t cayley = 1;
    for (std::size_t i = 0; i + 2 < p; ++i) cayley *= p;
    EXPECT_EQ(count, cayley);
  }
}

TEST(FreeTrees, RepresentativesAreTreesAndPairwiseNonIsomorphic) {
  for (std::size_t p = 1; p <= 8; ++p) {
    auto trees = enumerate_free_trees(p);
    std::set<std::string> codes;
    for (const auto& t : trees) {
      EXPECT_TRUE(is_tree(t));
      codes.insert(canonical_tree_code(t));
    }
    EXPECT_EQ(codes.size(), trees.size());
    for (std::size_t i = 0; i < trees.size(); ++i)
      for (std::size_t j = i + 1; j < trees.size(); ++j) EXPECT_FALSE(oracle::isomorphic(trees[i], trees[j]));
  }
  EXPECT_EQ(enumerate_free_trees(4).size(), 2u);
  EXPECT_EQ(enumerate_free_trees(7).size(), 11u);
}

TEST(CanonicalCode, InvariantUnderRelabeling) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    Graph t = random_tree(2 + i % 9, rng);
    std::vector<Vertex> perm(t.order());
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph u = t.relabeled(perm);
    EXPECT_EQ(canonical_tree_code(t), canonical_tree_code(u));
    EXPECT_EQ(canonical_tree_code(tree_from_code(canonical_tree_code(t))), canonical_tree_code(t));
  }
  EXPECT_NE(canonical_tree_code(path(4)), canonical_tree_code(star(3)));
  EXPECT_THROW(canonical_tree_code(cycle(4)), Error);
}

TEST(CanonicalCode, AgreesWithPermutationIsomorphism) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 300; ++i) {
    const std::size_t p = 3 + i % 5;
    Graph a = random_tree(p, rng), b = random_tree(p, rng);
    EXPECT_EQ(canonical_tree_code(a) == canonical_tree_code(b), oracle::isomorphic(a, b));
  }
  std::set<std::string> codes;
  for_each_labeled_tree(3, [&](const Graph& t) { codes.insert(canonical_tree_code(t)); });
  EXPECT_EQ(codes.size(), 1u);
}

TEST(Prufer, WorkedExamplesAndRoundTrip) {
  EXPECT_EQ(prufer_decode({}), Graph(2, {{0, 1}}));
  EXPECT_EQ(prufer_decode({0, 0, 0}), star(4));
  EXPECT_THROW(prufer_decode({5}), Error);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    std::vector<Vertex> seq(7);
    for (auto& x : seq) x = static_cast<Vertex>(rng() % 9);
    Graph t = prufer_decode(seq);
    EXPECT_TRUE(is_tree(t));
    EXPECT_EQ(prufer_encode(t), seq);
    EXPECT_EQ(prufer_decode(prufer_encode(t)), t);
  }
}

TEST(EdgeList, ParsesHeaderCommentsAndInference) {
  Graph g = parse_edge_list("# star\np 5\n0 1\n0 2\n\n0 3\n0 4\n");
  EXPECT_EQ(g, star(4));
  Graph h = parse_edge_list("0 1\n1 2\n");
  EXPECT_EQ(h, path(3));
  EXPECT_EQ(parse_edge_list("p 3\n").size(), 0u);
  EXPECT_EQ(parse_edge_list(write_edge_list(triangle_with_pendants())), triangle_with_pendants());
}

TEST(EdgeList, ReportsLineNumbers) {
  auto line_of = [](const std::string& text) {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("p 3\n0 1\n1 x\n"), 3u);
  EXPECT_EQ(line_of("p 3\n0 1\n1 5\n"), 3u);
  EXPECT_EQ(line_of("0 1\n2 2\n"), 2u);
  EXPECT_EQ(line_of("0 1\n1 2\n1 0\n"), 3u);
  EXPECT_EQ(line_of("0 1 2\n"), 1u);
  EXPECT_EQ(line_of("# nothing\n"), 1u);
  EXPECT_EQ(line_of(""), 1u);
}

TEST(Graph6, KnownStringsAndRoundTrip) {
  EXPECT_EQ(write_graph6(Graph(2, {{0, 1}})), "A_");
  EXPECT_EQ(write_graph6(Graph(3, {{0, 1}, {0, 2}, {1, 2}})), "Bw");
  EXPECT_EQ(write_graph6(Graph(1)), "@");
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    Graph g = random_connected_graph(1 + i % 70, static_cast<std::size_t>(i % 4), rng);
    EXPECT_EQ(parse_graph6(write_graph6(g)), g);
  }
  EXPECT_EQ(parse_graph(">>graph6<<Bw\n"), Graph(3, {{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(parse_graph("0 1\n"), path(2));
  EXPECT_THROW(parse_graph6("B"), ParseError);
  EXPECT_THROW(parse_graph6("Bx"), ParseError);
}

TEST(SpanningTrees, Counts) {
  EXPECT_EQ(spanning_trees(triangle_with_pendants()).size(), 3u);
  EXPECT_EQ(spanning_trees(cycle(6)).size(), 6u);
  Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(spanning_trees(k4).size(), 16u);
  for (const auto& t : spanning_trees(k4)) EXPECT_TRUE(is_tree(t));
  EXPECT_THROW(spanning_trees(path(11)), CapError);
  EXPECT_THROW(spanning_trees(Graph(10, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7}, {0, 8}, {0, 9},
                                          {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {1, 9}}),
                              SpanningLimits{10, 100}),
               CapError);
}
