#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "strongclique/cliques.hpp"
#include "strongclique/errors.hpp"
#include "strongclique/generators.hpp"
#include "strongclique/graph_id.hpp"
#include "strongclique/perm_group.hpp"
#include "strongclique/strong.hpp"

using namespace strongclique;

namespace {

Vertex triple(int a, int b, int c) {
  static const auto subsets = k_subsets(7, 3);
  std::vector<int> s{a - 1, b - 1, c - 1};
  std::sort(s.begin(), s.end());
  return static_cast<Vertex>(std::find(subsets.begin(), subsets.end(), s) - subsets.begin());
}

VertexSet johnson_c1() {
  return {triple(1, 2, 3), triple(1, 4, 5), triple(1, 6, 7), triple(2, 4, 6),
          triple(2, 5, 7), triple(3, 4, 7), triple(3, 5, 6)};
}

// The witness must be independent, disjoint from c, and dominate c.
void expect_certifies(const Graph& g, const VertexSet& c, const VertexSet& w) {
  EXPECT_TRUE(is_independent(g, w));
  EXPECT_EQ(w.intersection_size(c), 0u);
  EXPECT_TRUE(dominates(g, w, c));
}

}  // namespace

TEST(Dominates, Examples) {
  EXPECT_TRUE(dominates(cycle_graph(4), {0, 2}, {1, 3}));
  EXPECT_FALSE(dominates(complete_graph(2), {0}, {0}));
  EXPECT_TRUE(dominates(cycle_graph(5), {2, 4}, {0, 1}));
  EXPECT_TRUE(dominates(cycle_graph(5), {}, {}));
}

TEST(StrongClique, PentagonEdge) {
  const Graph c5 = cycle_graph(5);
  const auto v = is_strong_clique(c5, {0, 1});
  EXPECT_FALSE(v.is_strong);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(*v.witness, (VertexSet{2, 4}));
  const auto b = strong_by_domination(c5, {0, 1});
  ASSERT_TRUE(b.witness.has_value());
  expect_certifies(c5, {0, 1}, *b.witness);
}

TEST(StrongClique, CompleteBipartiteEdges) {
  for (int m = 1; m <= 5; ++m) {
    const Graph g = complete_bipartite(m, m);
    for (auto [u, v] : g.edges()) EXPECT_TRUE(is_strong_clique(g, {u, v}).is_strong);
  }
}

TEST(StrongClique, JohnsonTriplesCliqueIsStrong) {
  const Graph j = gen_johnson(7, 3, 1);
  const VertexSet c1 = johnson_c1();
  EXPECT_TRUE(is_strong_clique(j, c1).is_strong);
  EXPECT_TRUE(vt_strong_criterion(j, c1));
  const VertexSet i{triple(1, 2, 3), triple(1, 2, 4), triple(1, 2, 5), triple(1, 2, 6), triple(1, 2, 7)};
  EXPECT_TRUE(is_strong_independent_set(j, i).is_strong);
}

TEST(StrongClique, Errors) {
  EXPECT_THROW((void)is_strong_clique(cycle_graph(5), {0, 2}), InvalidArgument);
  EXPECT_THROW((void)is_strong_clique(cycle_graph(5), {}), InvalidArgument);
  EXPECT_THROW((void)is_strong_independent_set(cycle_graph(5), {0, 1}), InvalidArgument);
  EXPECT_THROW((void)vt_strong_criterion(cycle_graph(5), {0, 2}), InvalidArgument);
}

TEST(StrongClique, DegenerateGraphs) {
  EXPECT_EQ(has_strong_clique(Graph(0)), std::nullopt);
  EXPECT_TRUE(is_strong_clique(complete_graph(5), {0, 1, 2, 3, 4}).is_strong);
  EXPECT_EQ(has_strong_clique(complete_graph(5), Symmetry::vertex_transitive), (VertexSet{0, 1, 2, 3, 4}));
  // An edgeless graph has the single maximal independent set V.
  EXPECT_TRUE(is_strong_clique(empty_graph(3), {1}).is_strong);
  EXPECT_EQ(mis_size_range(Graph(0)), (std::pair<int, int>{0, 0}));
}

TEST(StrongIndependentSet, Examples) {
  EXPECT_TRUE(is_strong_independent_set(complete_bipartite(3, 3), {0, 1, 2}).is_strong);
  EXPECT_FALSE(is_strong_independent_set(cycle_graph(5), {0, 2}).is_strong);
}

TEST(StrongClique, MethodsAgreeWithBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(31337);
  int strong = 0;
  int weak = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 11);
    const Graph g = oracle::random_graph(n, 0.3 + 0.4 * (trial % 3) / 2.0, rng);
    for (const auto& c : oracle::maximal_cliques(g)) {
      const bool expected = oracle::is_strong_clique(g, c);
      const auto a = strong_by_maximal_sets(g, c);
      const auto b = strong_by_domination(g, c);
      EXPECT_EQ(a.is_strong, expected) << trial;
      EXPECT_EQ(b.is_strong, expected) << trial;
      if (expected) {
        ++strong;
        EXPECT_FALSE(a.witness || b.witness);
      } else {
        ++weak;
        ASSERT_TRUE(a.witness && b.witness);
        expect_certifies(g, c, *a.witness);
        expect_certifies(g, c, *b.witness);
        const auto mis = oracle::maximal_independent_sets(g);
        EXPECT_NE(std::find(mis.begin(), mis.end(), *a.witness), mis.end());
        // Method A reports the least such set.
        for (const auto& s : mis)
          if (s.intersection_size(c) == 0) {
            EXPECT_EQ(*a.witness, s);
            break;
          }
      }
    }
  }
  EXPECT_GT(strong, 50);
  EXPECT_GT(weak, 50);
}

TEST(StrongClique, NonMaximalCliques) {
  // {0} misses the independent set {1}; {1} misses {0, 2}.
  const Graph p3 = path_graph(3);
  EXPECT_FALSE(is_strong_clique(p3, {0}).is_strong);
  EXPECT_FALSE(is_strong_clique(p3, {1}).is_strong);
  EXPECT_TRUE(is_strong_clique(p3, {0, 1}).is_strong);
}

TEST(HasStrongClique, Examples) {
  const auto c6bar = has_strong_clique(complement(cycle_graph(6)), Symmetry::vertex_transitive);
  ASSERT_TRUE(c6bar.has_value());
  EXPECT_EQ(c6bar->size(), 3u);
  EXPECT_EQ(has_strong_clique(cycle_graph(5)), std::nullopt);
  for (int n = 3; n <= 6; ++n) {
    const Graph g = cartesian_product(cycle_graph(3), cycle_graph(n));
    const auto c = has_strong_clique(g, Symmetry::vertex_transitive);
    ASSERT_TRUE(c.has_value()) << n;
    EXPECT_EQ(c->size(), 3u);
  }
}

TEST(HasStrongClique, HintAgreesWithFullScanOnVertexTransitiveGraphs) {
  for (const char* id : {"Petersen", "co(C6)", "K3xK4", "C4[K2]", "H3", "L(K3,3)", "Cay(Z12;1,4,6,8,11)", "co(C8)"}) {
    const Graph g = build_graph(id);
    EXPECT_EQ(has_strong_clique(g).has_value(), has_strong_clique(g, Symmetry::vertex_transitive).has_value())
        << id;
  }
}

TEST(WellCovered, Examples) {
  EXPECT_TRUE(is_well_covered(cycle_graph(5)));
  EXPECT_FALSE(is_well_covered(cycle_graph(6)));
  EXPECT_TRUE(is_well_covered(complete_graph(6)));
  const Graph j = gen_johnson(7, 3, 1);
  EXPECT_TRUE(is_well_covered(j));
  EXPECT_TRUE(is_co_well_covered(j));
}

TEST(Cis, Examples) {
  EXPECT_TRUE(is_cis(cycle_graph(4), Symmetry::vertex_transitive));
  EXPECT_FALSE(is_cis(cycle_graph(5), Symmetry::vertex_transitive));
  EXPECT_TRUE(is_cis(gen_johnson(7, 3, 1), Symmetry::vertex_transitive));
}

TEST(Cis, MatchesBruteForce) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 9), 0.5, rng);
    bool expected = true;
    for (const auto& c : oracle::maximal_cliques(g)) expected &= oracle::is_strong_clique(g, c);
    EXPECT_EQ(is_cis(g), expected) << trial;
  }
}

TEST(Localizable, HGraphsSplitIntoQuadruples) {
  for (int n = 2; n <= 6; ++n) {
    const auto p = is_localizable(h_graph(n), Symmetry::vertex_transitive);
    ASSERT_TRUE(p.has_value()) << n;
    ASSERT_EQ(p->size(), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      EXPECT_EQ((*p)[i], (VertexSet{4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3}));
  }
}

TEST(Localizable, NegativeExamples) {
  EXPECT_EQ(is_localizable(gen_johnson(7, 3, 1), Symmetry::vertex_transitive), std::nullopt);
  EXPECT_EQ(is_localizable(line_graph(complete_graph(6)), Symmetry::vertex_transitive), std::nullopt);
  EXPECT_EQ(is_localizable(cycle_graph(5)), std::nullopt);
}

TEST(Localizable, PartitionIsValidAndMatchesBruteForce) {
  std::mt19937_64 rng(99);
  int yes = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 8), 0.5, rng);
    const auto p = is_localizable(g);
    EXPECT_EQ(p.has_value(), oracle::is_localizable(g)) << trial;
    if (!p) continue;
    ++yes;
    VertexBits covered;
    for (const auto& c : *p) {
      EXPECT_FALSE(covered.intersects(c.bits()));
      covered |= c.bits();
      EXPECT_TRUE(oracle::is_strong_clique(g, c));
    }
    EXPECT_EQ(covered, g.all_vertices());
  }
  EXPECT_GT(yes, 5);
}

TEST(VtCriterion, Examples) {
  EXPECT_TRUE(vt_strong_criterion(gen_johnson(7, 3, 1), johnson_c1()));
  EXPECT_FALSE(vt_strong_criterion(cycle_graph(5), {0, 1}));
  EXPECT_TRUE(vt_strong_criterion(complete_graph(4), {0, 1, 2, 3}));
}

TEST(IntersectionCheck, Examples) {
  EXPECT_TRUE(irreducible_intersection_check(gen_johnson(7, 3, 1)));
  EXPECT_TRUE(irreducible_intersection_check(cartesian_product(cycle_graph(3), cycle_graph(4))));
  EXPECT_TRUE(irreducible_intersection_check(complete_graph(4)));
  EXPECT_THROW((void)irreducible_intersection_check(path_graph(3)), PreconditionFailed);
  EXPECT_THROW((void)irreducible_intersection_check(build_graph("K3[2K1]")), PreconditionFailed);
}

TEST(HalfOrderCheck, Examples) {
  EXPECT_TRUE(half_order_clique_check(h_graph(2)));
  EXPECT_TRUE(half_order_clique_check(cartesian_product(complete_graph(4), complete_graph(2))));
  EXPECT_THROW((void)half_order_clique_check(complete_graph(2)), PreconditionFailed);
  EXPECT_THROW((void)half_order_clique_check(path_graph(4)), PreconditionFailed);
}
