#include "strongclique/generators.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "strongclique/errors.hpp"
#include "strongclique/groups.hpp"

namespace strongclique {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw InvalidArgument(message);
}

}  // namespace

Graph complete_graph(int n) {
  require(n >= 0, "complete graph needs n >= 0");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
  require(n >= 0, "path needs n >= 0");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_bipartite(int m, int n) {
  require(m >= 0 && n >= 0, "bipartite sides must be nonnegative");
  std::vector<Edge> edges;
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < n; ++v) edges.emplace_back(u, m + v);
  return Graph::from_edges(m + n, edges);
}

Graph petersen_graph() { return generalized_petersen(5, 2); }

Graph generalized_petersen(int n, int k) {
  require(n >= 3 && k >= 1 && 2 * k < n, "generalized Petersen needs n >= 3, 1 <= k < n/2");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(i, n + i);
    edges.emplace_back(n + i, n + (i + k) % n);
  }
  return Graph::from_edges(2 * n, edges);
}

Graph local_pattern(int index) {
  switch (index) {
    case 1:
      return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}});
    case 2:
      return Graph::from_edges(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}});
    case 3:
      return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 4}, {2, 3}});
    case 4:
      return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {3, 4}});
    case 5:
      return Graph::from_edges(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 0}});
    case 6:
      return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}});
    default:
      throw InvalidArgument("local pattern index must be 1..6, got " + std::to_string(index));
  }
}

Graph h_graph(int n) {
  require(n >= 2, "H_n needs n >= 2");
  auto x = [](int i) { return 4 * (i - 1); };
  auto y = [](int i) { return 4 * (i - 1) + 1; };
  auto z = [](int i) { return 4 * (i - 1) + 2; };
  auto w = [](int i) { return 4 * (i - 1) + 3; };
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i)
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) edges.emplace_back(x(i) + a, x(i) + b);
  for (int i = 1; i < n; ++i) {
    edges.emplace_back(z(i), x(i + 1));
    edges.emplace_back(w(i), y(i + 1));
  }
  edges.emplace_back(x(1), z(n));
  edges.emplace_back(y(1), w(n));
  return Graph::from_edges(4 * n, edges);
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
  require(n >= 0 && k >= 0 && k <= n, "k-subsets need 0 <= k <= n");
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    if (out.size() > static_cast<std::size_t>(kMaxVertices))
      throw CapacityExceeded("too many subsets for the vertex cap");
  }
  return out;
}

Graph gen_johnson(int n, int k, int i) {
  require(n > k && k > i && i >= 0, "J(n,k,i) needs n > k > i >= 0");
  if (n > 64) throw CapacityExceeded("J(n,k,i) supports n <= 64");
  const auto subsets = k_subsets(n, k);
  const int m = static_cast<int>(subsets.size());
  if (m > kMaxVertices) throw CapacityExceeded("J(n,k,i) order exceeds vertex cap");
  std::vector<std::uint64_t> masks;
  for (const auto& s : subsets) {
    std::uint64_t mask = 0;
    for (int e : s) mask |= std::uint64_t{1} << e;
    masks.push_back(mask);
  }
  std::vector<Edge> edges;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (std::popcount(masks[a] & masks[b]) == i) edges.emplace_back(a, b);
  return Graph::from_edges(m, edges);
}

Graph family_l1(L1Family family, int n) {
  require(n >= 4, "L1 families need n >= 4");
  switch (family) {
    case L1Family::a: {
      const auto g = FiniteGroup::cyclic(4 * n);
      return cayley(g, ConnectionSet(g, {1, 4 * n - 1, n, 3 * n, 2 * n}));
    }
    case L1Family::b: {
      const auto g = FiniteGroup::abelian({2 * n, 2});
      return cayley(g, ConnectionSet(g, {g.element({1, 0}), g.element({-1, 0}), g.element({n, 0}),
                                         g.element({0, 1}), g.element({n, 1})}));
    }
    case L1Family::c: {
      const auto g = FiniteGroup::abelian({n, 4});
      return cayley(g, ConnectionSet(g, {g.element({1, 0}), g.element({-1, 0}), g.element({0, 1}),
                                         g.element({0, 2}), g.element({0, 3})}));
    }
    case L1Family::d:
      return cartesian_product(h_graph(n), complete_graph(2));
  }
  throw InvalidArgument("unknown L1 family");
}

}  // namespace strongclique
