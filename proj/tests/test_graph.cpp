#include <gtest/gtest.h>

#include "oracles.hpp"
#include "strongclique/errors.hpp"
#include "strongclique/generators.hpp"
#include "strongclique/graph.hpp"
#include "strongclique/graph_id.hpp"

using namespace strongclique;

namespace {

int edges_of_line_graph_expected(const Graph& g) {
  int total = 0;
  for (Vertex v = 0; v < g.order(); ++v) total += g.degree(v) * (g.degree(v) - 1) / 2;
  return total;
}

}  // namespace

TEST(GraphConstruction, RejectsLoopsAndOutOfRange) {
  EXPECT_THROW(Graph::from_edges(3, {{0, 0}}), InvalidArgument);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), InvalidArgument);
  EXPECT_THROW(Graph::from_edges(3, {{-1, 2}}), InvalidArgument);
  EXPECT_THROW(Graph(kMaxVertices + 1), CapacityExceeded);
  EXPECT_THROW(Graph(-1), InvalidArgument);
}

TEST(GraphConstruction, CollapsesRepeatedEdgesAndSortsNeighbours) {
  const Graph g = Graph::from_edges(4, {{2, 0}, {0, 2}, {3, 0}, {1, 0}});
  EXPECT_EQ(g.edge_count(), 3u);
  const std::vector<Vertex> n0(g.neighbors(0).begin(), g.neighbors(0).end());
  EXPECT_EQ(n0, (std::vector<Vertex>{1, 2, 3}));
}

TEST(GraphConstruction, RowsMustBeSymmetric) {
  std::vector<VertexBits> rows(2);
  rows[0].set(1);
  EXPECT_THROW(Graph::from_rows(2, rows), InvalidArgument);
}

TEST(VertexSet, SortsAndRejectsDuplicates) {
  const VertexSet s{3, 1, 2};
  EXPECT_EQ(s[0], 1);
  EXPECT_EQ(s[2], 3);
  EXPECT_THROW((VertexSet{1, 1}), InvalidArgument);
  EXPECT_THROW((VertexSet{-1}), InvalidArgument);
  EXPECT_LT((VertexSet{0, 5}), (VertexSet{1, 2}));
}

TEST(Complement, CompleteBecomesEmpty) { EXPECT_EQ(complement(complete_graph(4)), empty_graph(4)); }

TEST(Complement, PentagonIsSelfComplementary) {
  EXPECT_TRUE(oracle::isomorphic(complement(cycle_graph(5)), cycle_graph(5)));
}

TEST(Complement, ComplementOfEightCycleIsFiveRegular) {
  const Graph g = complement(cycle_graph(8));
  EXPECT_EQ(g.order(), 8);
  EXPECT_EQ(valency(g), 5);
}

TEST(Complement, IsAnInvolution) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const Graph g = oracle::random_graph(9, 0.4, rng);
    EXPECT_EQ(complement(complement(g)), g);
  }
}

TEST(InducedSubgraph, Examples) {
  EXPECT_EQ(induced_subgraph(complete_graph(5), {0, 1, 2}), complete_graph(3));
  EXPECT_EQ(induced_subgraph(cycle_graph(6), {0, 2, 4}), empty_graph(3));
  const Graph p = petersen_graph();
  EXPECT_EQ(induced_subgraph(p, VertexSet::from_bits(p.neighbor_bits(0))), empty_graph(3));
  EXPECT_THROW(induced_subgraph(cycle_graph(4), {0, 4}), InvalidArgument);
}

TEST(LocalGraph, Examples) {
  EXPECT_EQ(local_graph(complete_graph(6), 0), complete_graph(5));
  const Graph c4k2 = lexicographic_product(cycle_graph(4), complete_graph(2));
  for (Vertex v = 0; v < c4k2.order(); ++v) {
    const Graph local = local_graph(c4k2, v);
    bool universal = false;
    for (Vertex u = 0; u < local.order(); ++u) universal |= local.degree(u) == local.order() - 1;
    EXPECT_TRUE(universal) << "vertex " << v;
  }
  const Graph a4 = build_graph("Cay(Z16;1,4,8,12,15)");
  EXPECT_TRUE(oracle::isomorphic(local_graph(a4, 0), local_pattern(1)));
  EXPECT_THROW(local_graph(empty_graph(3), 1), InvalidArgument);
  EXPECT_THROW(local_graph(complete_graph(3), 3), InvalidArgument);
}

TEST(CartesianProduct, ValencyAddsAndEncodingIsRowMajor) {
  const Graph g = cartesian_product(complete_graph(5), complete_graph(2));
  EXPECT_EQ(g.order(), 10);
  EXPECT_EQ(valency(g), 5);
  EXPECT_TRUE(g.adjacent(0 * 2 + 1, 3 * 2 + 1));
  EXPECT_TRUE(g.adjacent(4 * 2 + 0, 4 * 2 + 1));
  EXPECT_FALSE(g.adjacent(0, 3));
  EXPECT_EQ(valency(cartesian_product(complete_graph(3), complete_graph(4))), 5);
  EXPECT_EQ(cartesian_product(complete_graph(1), petersen_graph()), petersen_graph());
}

TEST(LexicographicProduct, Examples) {
  const Graph g = lexicographic_product(complete_graph(3), empty_graph(2));
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(valency(g), 4);
  const Graph h = lexicographic_product(cycle_graph(4), complete_graph(2));
  EXPECT_EQ(valency(h), 2 * 2 + 1);
  EXPECT_EQ(lexicographic_product(petersen_graph(), complete_graph(1)), petersen_graph());
}

TEST(LineGraph, CompleteFourIsOctahedron) {
  const Graph l = line_graph(complete_graph(4));
  EXPECT_EQ(l.order(), 6);
  EXPECT_EQ(valency(l), 4);
  // K_{2,2,2}, built independently as the complement of a perfect matching.
  const Graph octahedron = complement(Graph::from_edges(6, {{0, 1}, {2, 3}, {4, 5}}));
  EXPECT_TRUE(oracle::isomorphic(l, octahedron));
}

TEST(LineGraph, Examples) {
  const Graph l33 = line_graph(complete_bipartite(3, 3));
  EXPECT_EQ(l33.order(), 9);
  EXPECT_EQ(valency(l33), 4);
  const Graph l6 = line_graph(complete_graph(6));
  EXPECT_EQ(l6.order(), 15);
  EXPECT_EQ(valency(l6), 8);
}

TEST(LineGraph, EdgeCountIsSumOfDegreePairs) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    const Graph g = oracle::random_graph(8, 0.5, rng);
    EXPECT_EQ(static_cast<int>(line_graph(g).edge_count()), edges_of_line_graph_expected(g));
  }
}

TEST(LineGraph, VerticesFollowLexicographicEdgeOrder) {
  const Graph l = line_graph(path_graph(3));
  EXPECT_EQ(l, complete_graph(2));
}

TEST(Twins, Examples) {
  EXPECT_FALSE(twins(lexicographic_product(complete_graph(3), empty_graph(2)), TwinKind::open).empty());
  EXPECT_TRUE(twins(cycle_graph(5), TwinKind::open).empty());
  const Graph c4k2 = lexicographic_product(cycle_graph(4), complete_graph(2));
  const auto closed = twins(c4k2, TwinKind::closed);
  // Brute force: u, v are closed twins iff N[u] = N[v].
  std::vector<Edge> expected;
  for (Vertex u = 0; u < c4k2.order(); ++u)
    for (Vertex v = u + 1; v < c4k2.order(); ++v) {
      bool same = c4k2.adjacent(u, v);
      for (Vertex w = 0; w < c4k2.order() && same; ++w)
        if (w != u && w != v) same = c4k2.adjacent(u, w) == c4k2.adjacent(v, w);
      if (same) expected.push_back({u, v});
    }
  EXPECT_FALSE(closed.empty());
  EXPECT_EQ(closed, expected);
}

TEST(Twins, ReducibleVertexTransitiveGraphsQuotientToLexProducts) {
  // K3[2K1] has open twin classes of size 2; merging them gives K3.
  const Graph g = lexicographic_product(complete_graph(3), empty_graph(2));
  const auto pairs = twins(g, TwinKind::open);
  EXPECT_EQ(pairs.size(), 3u);
  for (auto [u, v] : pairs) EXPECT_EQ(u / 2, v / 2);
  EXPECT_TRUE(is_reducible(g));
  EXPECT_FALSE(is_reducible(petersen_graph()));
}

TEST(Connectivity, Examples) {
  EXPECT_TRUE(is_connected(cycle_graph(6)));
  EXPECT_EQ(valency(cycle_graph(6)), 2);
  EXPECT_FALSE(is_connected(empty_graph(2)));
  EXPECT_TRUE(is_connected(Graph(0)));
  EXPECT_EQ(valency(path_graph(3)), std::nullopt);
  EXPECT_EQ(valency(Graph(0)), 0);
}

TEST(Valency, GeneralizedJohnsonAndH) {
  // Neighbours of a 3-subset sharing exactly one point: 3 * C(4, 2).
  EXPECT_EQ(valency(gen_johnson(7, 3, 1)), 3 * 6);
  for (int n = 2; n <= 8; ++n) EXPECT_EQ(valency(h_graph(n)), 4) << n;
}

TEST(CliquePredicates, Basics) {
  const Graph g = cycle_graph(5);
  EXPECT_TRUE(is_clique(g, {0, 1}));
  EXPECT_FALSE(is_clique(g, {0, 2}));
  EXPECT_TRUE(is_independent(g, {0, 2}));
  EXPECT_TRUE(is_clique(g, {}));
  EXPECT_THROW((void)is_clique(g, {7}), InvalidArgument);
}
