#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "strongclique/bits.hpp"

namespace strongclique {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// What the caller already knows about a graph's symmetry. Operations with a
/// vertex-transitive shortcut only take it when told so.
enum class Symmetry { unknown, vertex_transitive };

/// Strictly increasing sequence of vertex indices. Carrier for cliques,
/// independent sets and dominating sets. Ordered lexicographically.
class VertexSet {
 public:
  VertexSet() = default;
  /// Sorts the input; throws InvalidArgument on duplicates or negatives.
  explicit VertexSet(std::vector<Vertex> members);
  VertexSet(std::initializer_list<Vertex> members)
      : VertexSet(std::vector<Vertex>(members)) {}

  static VertexSet from_bits(const VertexBits& bits);

  [[nodiscard]] std::span<const Vertex> members() const { return members_; }
  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] bool empty() const { return members_.empty(); }
  [[nodiscard]] bool contains(Vertex v) const;
  [[nodiscard]] Vertex operator[](std::size_t i) const { return members_[i]; }
  [[nodiscard]] auto begin() const { return members_.begin(); }
  [[nodiscard]] auto end() const { return members_.end(); }
  [[nodiscard]] VertexBits bits() const;

  [[nodiscard]] std::size_t intersection_size(const VertexSet& other) const;

  auto operator<=>(const VertexSet&) const = default;
  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<Vertex> members_;
};

/// Immutable simple undirected graph on vertices 0..n-1 (n <= kMaxVertices).
/// Neighbour lists are sorted; a bitset row per vertex drives the kernels.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Throws InvalidArgument on loops or out-of-range endpoints, and
  /// CapacityExceeded when n > kMaxVertices. Repeated edges collapse.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  static Graph from_rows(int n, std::vector<VertexBits> rows);

  [[nodiscard]] int order() const { return n_; }
  [[nodiscard]] std::size_t edge_count() const { return m_; }
  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  [[nodiscard]] const VertexBits& neighbor_bits(Vertex v) const { return rows_[v]; }
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  [[nodiscard]] VertexBits all_vertices() const { return VertexBits::prefix(n_); }

  /// Edges (u, v) with u < v in lexicographic order.
  [[nodiscard]] std::vector<Edge> edges() const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<VertexBits> rows_;
};

/// Throws InvalidArgument unless 0 <= v < g.order().
void require_vertex(const Graph& g, Vertex v);
void require_vertices(const Graph& g, const VertexSet& s);

[[nodiscard]] Graph complement(const Graph& g);
/// Reindexes by position in s.
[[nodiscard]] Graph induced_subgraph(const Graph& g, const VertexSet& s);
/// Graph induced by the neighbourhood of v; throws for isolated v.
[[nodiscard]] Graph local_graph(const Graph& g, Vertex v);

// Products encode (u, x) as u * |V(g2)| + x.
[[nodiscard]] Graph cartesian_product(const Graph& g1, const Graph& g2);
[[nodiscard]] Graph lexicographic_product(const Graph& g1, const Graph& g2);
[[nodiscard]] Graph disjoint_union(const Graph& g1, const Graph& g2);

/// Vertices are the edges of g in lexicographic (min, max) order.
[[nodiscard]] Graph line_graph(const Graph& g);

enum class TwinKind { open, closed };

/// Pairs u < v with N(u) = N(v) (open) or N[u] = N[v] (closed).
[[nodiscard]] std::vector<Edge> twins(const Graph& g, TwinKind kind);
[[nodiscard]] bool is_reducible(const Graph& g);

[[nodiscard]] bool is_connected(const Graph& g);
/// Common degree, or nullopt when irregular. The 0-vertex graph is 0-regular.
[[nodiscard]] std::optional<int> valency(const Graph& g);

[[nodiscard]] bool is_clique(const Graph& g, const VertexSet& s);
[[nodiscard]] bool is_independent(const Graph& g, const VertexSet& s);

}  // namespace strongclique
