#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace oracle {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> rows(const Graph& g) {
  std::vector<Mask> r(static_cast<std::size_t>(g.order()), 0);
  for (auto [u, v] : g.edges()) {
    r[u] |= Mask{1} << v;
    r[v] |= Mask{1} << u;
  }
  return r;
}

bool is_clique(const std::vector<Mask>& adj, Mask s) {
  for (Mask t = s; t; t &= t - 1) {
    const int v = std::countr_zero(t);
    if ((s & ~(Mask{1} << v)) & ~adj[v]) return false;
  }
  return true;
}

VertexSet to_set(Mask s) {
  std::vector<int> out;
  for (; s; s &= s - 1) out.push_back(std::countr_zero(s));
  return VertexSet(out);
}

std::vector<Mask> maximal_masks(const std::vector<Mask>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<Mask> cliques;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    if (!is_clique(adj, s)) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v)
      if (!(s >> v & 1) && (adj[v] & s) == s) maximal = false;
    if (maximal) cliques.push_back(s);
  }
  return cliques;
}

std::vector<Mask> complement_rows(const std::vector<Mask>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<Mask> out(adj.size());
  const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  for (int v = 0; v < n; ++v) out[v] = all & ~adj[v] & ~(Mask{1} << v);
  return out;
}

std::vector<VertexSet> sorted_sets(const std::vector<Mask>& masks) {
  std::vector<VertexSet> out;
  for (Mask m : masks) out.push_back(to_set(m));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) { return sorted_sets(maximal_masks(rows(g))); }

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
  return sorted_sets(maximal_masks(complement_rows(rows(g))));
}

int clique_number(const Graph& g) {
  int best = 0;
  for (Mask m : maximal_masks(rows(g))) best = std::max(best, std::popcount(m));
  return best;
}

int independence_number(const Graph& g) {
  int best = 0;
  for (Mask m : maximal_masks(complement_rows(rows(g)))) best = std::max(best, std::popcount(m));
  return best;
}

int chromatic_number(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  const auto adj = rows(g);
  for (int k = 1;; ++k) {
    std::vector<int> colour(static_cast<std::size_t>(n), 0);
    // Odometer over all k^n assignments.
    while (true) {
      bool proper = true;
      for (auto [u, v] : g.edges())
        if (colour[u] == colour[v]) {
          proper = false;
          break;
        }
      if (proper) return k;
      int i = 0;
      while (i < n && ++colour[i] == k) colour[i++] = 0;
      if (i == n) break;
    }
  }
}

bool is_strong_clique(const Graph& g, const VertexSet& c) {
  Mask cm = 0;
  for (int v : c) cm |= Mask{1} << v;
  for (Mask m : maximal_masks(complement_rows(rows(g))))
    if (!(m & cm)) return false;
  return true;
}

bool is_localizable(const Graph& g) {
  const int n = g.order();
  const auto adj = rows(g);
  const auto mis = maximal_masks(complement_rows(adj));
  std::vector<Mask> strong;
  for (Mask c : maximal_masks(adj)) {
    bool ok = true;
    for (Mask m : mis) ok = ok && (m & c);
    if (ok) strong.push_back(c);
  }
  const Mask all = (Mask{1} << n) - 1;
  std::function<bool(Mask)> cover = [&](Mask covered) {
    if (covered == all) return true;
    for (Mask c : strong)
      if (!(c & covered) && cover(covered | c)) return true;
    return false;
  };
  return cover(0);
}

std::uint64_t count_isomorphisms(const Graph& g1, const Graph& g2) {
  const int n = g1.order();
  if (n != g2.order() || g1.edge_count() != g2.edge_count()) return 0;
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::uint64_t count = 0;
  std::function<void(int)> go = [&](int v) {
    if (v == n) {
      ++count;
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = g1.adjacent(u, v) == g2.adjacent(map[u], w);
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      go(v + 1);
      used[w] = 0;
    }
  };
  go(0);
  return count;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<strongclique::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

}  // namespace oracle
