#pragma once

#include <vector>

#include "strongclique/graph.hpp"

namespace strongclique {

[[nodiscard]] Graph complete_graph(int n);
/// n >= 3.
[[nodiscard]] Graph cycle_graph(int n);
[[nodiscard]] Graph path_graph(int n);
/// nK1.
[[nodiscard]] Graph empty_graph(int n);
/// Sides {0..m-1} and {m..m+n-1}.
[[nodiscard]] Graph complete_bipartite(int m, int n);
/// Outer cycle 0..4, spokes i ~ i+5, inner pentagram.
[[nodiscard]] Graph petersen_graph();
/// GP(n, k): outer cycle 0..n-1, spokes i ~ n+i, inner edges n+i ~ n+(i+k mod n).
[[nodiscard]] Graph generalized_petersen(int n, int k);

/// The six five-vertex graphs with exactly one triangle and no universal
/// vertex, as fixed adjacency lists:
///   1  K3 + 2K1                         (triangle 012, isolated 3, 4)
///   2  paw + K1                         (triangle 123, pendant 4 on 3)
///   3  bull                             (triangle 012, pendants 4 on 0, 3 on 2)
///   4  K3 + K2                          (triangle 012, edge 34)
///   5  triangle with a two-edge tail    (triangle 123, path 3-4-0)
///   6  house, the complement of P5      (square 0123, roof 4 on 0, 1)
[[nodiscard]] Graph local_pattern(int index);

/// Order 4n, n >= 2. Vertex 4(i-1)+{0,1,2,3} is x_i, y_i, z_i, w_i. Each
/// quadruple is a K4, z_i ~ x_{i+1} and w_i ~ y_{i+1} for i = 1..n-1, and
/// x_1 ~ z_n, y_1 ~ w_n close the chain.
[[nodiscard]] Graph h_graph(int n);

/// k-subsets of {0..n-1} in lexicographic order.
[[nodiscard]] std::vector<std::vector<int>> k_subsets(int n, int k);
/// J(n, k, i): k-subsets of {0..n-1} in lexicographic order, adjacent when
/// they share exactly i elements. Requires n > k > i >= 0.
[[nodiscard]] Graph gen_johnson(int n, int k, int i);

/// The four five-valent families whose local graph is K3 + 2K1:
///   a  Cay(Z_{4n}, {±1, ±n, 2n})
///   b  Cay(Z_{2n} x Z_2, {(±1,0), (n,0), (0,1), (n,1)})
///   c  Cay(Z_n x Z_4, {(±1,0), (0,1), (0,2), (0,3)})
///   d  H_n □ K2
/// Requires n >= 4.
enum class L1Family { a, b, c, d };
[[nodiscard]] Graph family_l1(L1Family family, int n);

}  // namespace strongclique
