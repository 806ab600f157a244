#pragma once

#include <functional>
#include <vector>

#include "strongclique/graph.hpp"

namespace strongclique {

/// Maximal cliques in canonical (lexicographic) order.
using CliqueList = std::vector<VertexSet>;

/// Return false to stop the enumeration.
using CliqueVisitor = std::function<bool(const VertexBits&)>;

/// Bron–Kerbosch with pivoting on the vertex of P ∪ X with most neighbours
/// in P (lowest index on ties). Visits every maximal clique of g that
/// contains `seed`, avoids `excluded` and otherwise draws from
/// `candidates`; seed must be a clique whose common neighbourhood covers
/// candidates and excluded. Returns false if the visitor stopped early.
/// The empty set is never reported.
bool for_each_maximal_clique(const Graph& g, VertexBits candidates, VertexBits excluded,
                             const CliqueVisitor& visit, VertexBits seed = {});
bool for_each_maximal_clique(const Graph& g, const CliqueVisitor& visit);

[[nodiscard]] CliqueList maximal_cliques(const Graph& g);
[[nodiscard]] CliqueList maximal_independent_sets(const Graph& g);

/// A maximum clique, found by branch and bound with a greedy-colouring bound.
[[nodiscard]] VertexSet maximum_clique(const Graph& g);
[[nodiscard]] int clique_number(const Graph& g);
[[nodiscard]] int independence_number(const Graph& g);

/// One vertex per clique, in list order; adjacent iff the cliques intersect.
[[nodiscard]] Graph clique_graph(const CliqueList& cliques);
[[nodiscard]] Graph clique_graph(const Graph& g);

/// Exact colouring is limited to this many vertices.
inline constexpr int kMaxColoringOrder = 64;

/// An optimal proper colouring, colour[v] in 0..χ-1. Throws
/// CapacityExceeded above kMaxColoringOrder vertices.
[[nodiscard]] std::vector<int> optimal_coloring(const Graph& g);
[[nodiscard]] int chromatic_number(const Graph& g);
/// Minimum number of cliques covering V, i.e. χ of the complement.
[[nodiscard]] int clique_cover_number(const Graph& g);

}  // namespace strongclique
