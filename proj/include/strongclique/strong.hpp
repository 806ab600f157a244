#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "strongclique/cliques.hpp"
#include "strongclique/graph.hpp"

namespace strongclique {

/// When not strong, `witness` certifies it: an independent set disjoint
/// from the clique that dominates it (a maximal one, from method A).
struct StrongVerdict {
  bool is_strong = false;
  std::optional<VertexSet> witness;

  bool operator==(const StrongVerdict&) const = default;
};

/// Every vertex of b has a neighbour in a.
[[nodiscard]] bool dominates(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Method A: searches for a maximal independent set disjoint from c. The
/// witness is the lexicographically smallest such set.
[[nodiscard]] StrongVerdict strong_by_maximal_sets(const Graph& g, const VertexSet& c);
/// Method B: backtracks over independent sets inside the neighbourhood of c,
/// one vertex per still-undominated member of c, looking for one that
/// dominates c.
[[nodiscard]] StrongVerdict strong_by_domination(const Graph& g, const VertexSet& c);

/// Runs both methods and returns method A's verdict. Throws InvalidArgument
/// unless c is a nonempty clique, MethodMismatch if the methods disagree.
[[nodiscard]] StrongVerdict is_strong_clique(const Graph& g, const VertexSet& c);
/// Same question on the complement: does i meet every maximal clique?
[[nodiscard]] StrongVerdict is_strong_independent_set(const Graph& g, const VertexSet& i);

/// Smallest and largest maximal independent set size; (0, 0) for n = 0.
[[nodiscard]] std::pair<int, int> mis_size_range(const Graph& g);

/// |c| * |I| = |V| for every maximal independent set I. Exact as a
/// strength test only on vertex-transitive graphs, which is not checked.
[[nodiscard]] bool vt_strong_criterion(const Graph& g, const VertexSet& c);

/// First strong clique in canonical order. With Symmetry::vertex_transitive
/// only maximum cliques are tried, since no smaller clique can be strong
/// there.
[[nodiscard]] std::optional<VertexSet> has_strong_clique(const Graph& g,
                                                         Symmetry hint = Symmetry::unknown);
[[nodiscard]] std::optional<VertexSet> has_strong_independent_set(
    const Graph& g, Symmetry hint = Symmetry::unknown);

[[nodiscard]] bool is_well_covered(const Graph& g);
[[nodiscard]] bool is_co_well_covered(const Graph& g);

/// Every maximal clique is strong. On vertex-transitive input also checks
/// that this matches "has a strong clique and a strong independent set",
/// throwing MethodMismatch otherwise.
[[nodiscard]] bool is_cis(const Graph& g, Symmetry hint = Symmetry::unknown);

/// A partition of V into strong cliques, found by exact cover that always
/// branches on the lowest uncovered vertex. On vertex-transitive CIS input
/// the answer is cross-checked against α(clique graph) = α(g).
[[nodiscard]] std::optional<std::vector<VertexSet>> is_localizable(
    const Graph& g, Symmetry hint = Symmetry::unknown);

/// For every strong clique C and every other maximal clique C',
/// |C ∩ C'| < |C| - 1. Throws PreconditionFailed unless g is
/// vertex-transitive with no open twins.
[[nodiscard]] bool irreducible_intersection_check(const Graph& g);

/// Vertex-transitive g with a maximal clique of size |V|/2 splits into two
/// strong cliques. Throws PreconditionFailed if the hypothesis fails.
[[nodiscard]] bool half_order_clique_check(const Graph& g);

}  // namespace strongclique
