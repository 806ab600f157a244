#include "strongclique/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "strongclique/errors.hpp"

namespace strongclique {

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw InvalidArgument("vertex set has duplicate members");
  if (!members_.empty() && members_.front() < 0)
    throw InvalidArgument("vertex set has a negative member");
}

VertexSet VertexSet::from_bits(const VertexBits& bits) {
  VertexSet s;
  s.members_.reserve(static_cast<std::size_t>(bits.count()));
  bits.for_each([&](int v) { s.members_.push_back(v); });
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexBits VertexSet::bits() const {
  VertexBits b;
  for (Vertex v : members_) b.set(v);
  return b;
}

std::size_t VertexSet::intersection_size(const VertexSet& other) const {
  std::size_t c = 0;
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++c, ++a, ++b;
    }
  }
  return c;
}

Graph::Graph(int n) {
  if (n < 0) throw InvalidArgument("negative vertex count");
  if (n > kMaxVertices)
    throw CapacityExceeded("graph order " + std::to_string(n) + " exceeds cap " +
                           std::to_string(kMaxVertices));
  n_ = n;
  adj_.resize(static_cast<std::size_t>(n));
  rows_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InvalidArgument("edge endpoint out of range: " + std::to_string(u) + "-" +
                            std::to_string(v));
    if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
    g.rows_[u].set(v);
    g.rows_[v].set(u);
  }
  return from_rows(n, std::move(g.rows_));
}

Graph Graph::from_rows(int n, std::vector<VertexBits> rows) {
  Graph g(n);
  if (rows.size() != static_cast<std::size_t>(n))
    throw InvalidArgument("row count does not match vertex count");
  const VertexBits valid = VertexBits::prefix(n);
  for (int v = 0; v < n; ++v) {
    if (rows[v].test(v)) throw InvalidArgument("loop at vertex " + std::to_string(v));
    if (!rows[v].subset_of(valid)) throw InvalidArgument("neighbour out of range");
  }
  for (int v = 0; v < n; ++v) {
    rows[v].for_each([&](int u) {
      if (!rows[u].test(v)) throw InvalidArgument("adjacency rows are not symmetric");
      g.adj_[v].push_back(u);
    });
    g.m_ += g.adj_[v].size();
  }
  g.m_ /= 2;
  g.rows_ = std::move(rows);
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void require_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order())
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range for graph of order " +
                          std::to_string(g.order()));
}

void require_vertices(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) require_vertex(g, v);
}

Graph complement(const Graph& g) {
  const int n = g.order();
  const VertexBits all = g.all_vertices();
  std::vector<VertexBits> rows(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    rows[v] = all - g.neighbor_bits(v);
    rows[v].reset(v);
  }
  return Graph::from_rows(n, std::move(rows));
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  require_vertices(g, s);
  const int k = static_cast<int>(s.size());
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(s[i], s[j])) edges.emplace_back(i, j);
  return Graph::from_edges(k, edges);
}

Graph local_graph(const Graph& g, Vertex v) {
  require_vertex(g, v);
  if (g.degree(v) == 0)
    throw InvalidArgument("local graph undefined at isolated vertex " + std::to_string(v));
  return induced_subgraph(g, VertexSet::from_bits(g.neighbor_bits(v)));
}

namespace {

int product_order(const Graph& g1, const Graph& g2) {
  const long long n = static_cast<long long>(g1.order()) * g2.order();
  if (n > kMaxVertices)
    throw CapacityExceeded("product order " + std::to_string(n) + " exceeds cap");
  return static_cast<int>(n);
}

}  // namespace

Graph cartesian_product(const Graph& g1, const Graph& g2) {
  const int n = product_order(g1, g2);
  const int n2 = g2.order();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g1.order(); ++u) {
    for (Vertex x = 0; x < n2; ++x) {
      for (Vertex y : g2.neighbors(x))
        if (x < y) edges.emplace_back(u * n2 + x, u * n2 + y);
      for (Vertex w : g1.neighbors(u))
        if (u < w) edges.emplace_back(u * n2 + x, w * n2 + x);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph lexicographic_product(const Graph& g1, const Graph& g2) {
  const int n = product_order(g1, g2);
  const int n2 = g2.order();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g1.order(); ++u) {
    for (Vertex x = 0; x < n2; ++x) {
      for (Vertex y : g2.neighbors(x))
        if (x < y) edges.emplace_back(u * n2 + x, u * n2 + y);
      for (Vertex w : g1.neighbors(u))
        if (u < w)
          for (Vertex y = 0; y < n2; ++y) edges.emplace_back(u * n2 + x, w * n2 + y);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  std::vector<Edge> edges = g1.edges();
  for (auto [u, v] : g2.edges()) edges.emplace_back(u + n1, v + n1);
  return Graph::from_edges(n1 + g2.order(), edges);
}

Graph line_graph(const Graph& g) {
  const std::vector<Edge> es = g.edges();
  if (es.size() > static_cast<std::size_t>(kMaxVertices))
    throw CapacityExceeded("line graph order exceeds cap");
  const int m = static_cast<int>(es.size());
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto [a, b] = es[i];
      auto [c, d] = es[j];
      if (a == c || a == d || b == c || b == d) edges.emplace_back(i, j);
    }
  return Graph::from_edges(m, edges);
}

std::vector<Edge> twins(const Graph& g, TwinKind kind) {
  const int n = g.order();
  std::vector<VertexBits> nb(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    nb[v] = g.neighbor_bits(v);
    if (kind == TwinKind::closed) nb[v].set(v);
  }
  std::vector<Edge> out;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (nb[u] == nb[v]) out.emplace_back(u, v);
  return out;
}

bool is_reducible(const Graph& g) { return !twins(g, TwinKind::open).empty(); }

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n == 0) return true;
  VertexBits seen;
  seen.set(0);
  std::deque<Vertex> queue{0};
  int reached = 1;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : g.neighbors(v)) {
      if (!seen.test(u)) {
        seen.set(u);
        ++reached;
        queue.push_back(u);
      }
    }
  }
  return reached == n;
}

std::optional<int> valency(const Graph& g) {
  if (g.order() == 0) return 0;
  const int d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  require_vertices(g, s);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  require_vertices(g, s);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) return false;
  return true;
}

}  // namespace strongclique
