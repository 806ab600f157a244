#include "strongclique/cliques.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>

#include "strongclique/errors.hpp"

namespace strongclique {

namespace {

bool expand(const Graph& g, VertexBits& r, VertexBits p, VertexBits x, const CliqueVisitor& visit) {
  if (p.none()) return x.any() || visit(r);
  int pivot = -1;
  int best = -1;
  (p | x).for_each([&](int u) {
    const int c = p.count_and(g.neighbor_bits(u));
    if (c > best) best = c, pivot = u;
  });
  const VertexBits branch = p - g.neighbor_bits(pivot);
  for (int v = branch.first(); v >= 0; v = branch.next(v)) {
    const VertexBits& nv = g.neighbor_bits(v);
    r.set(v);
    const bool go_on = expand(g, r, p & nv, x & nv, visit);
    r.reset(v);
    if (!go_on) return false;
    p.reset(v);
    x.set(v);
  }
  return true;
}

CliqueList collect(const Graph& g) {
  CliqueList out;
  for_each_maximal_clique(g, [&](const VertexBits& c) {
    out.push_back(VertexSet::from_bits(c));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

// Greedy sequential colouring of p; `order` lists p by colour class and
// bound[i] is the colour number (1-based) of order[i].
void colour_sort(const Graph& g, VertexBits p, std::vector<int>& order, std::vector<int>& bound) {
  order.clear();
  bound.clear();
  int colour = 0;
  while (p.any()) {
    ++colour;
    VertexBits q = p;
    while (q.any()) {
      const int v = q.first();
      q.reset(v);
      q.subtract(g.neighbor_bits(v));
      p.reset(v);
      order.push_back(v);
      bound.push_back(colour);
    }
  }
}

struct MaxCliqueSearch {
  explicit MaxCliqueSearch(const Graph& graph) : g(graph) {}

  const Graph& g;
  VertexBits current;
  int current_size = 0;
  VertexBits best;
  int best_size = 0;

  void run(VertexBits p) {
    std::vector<int> order;
    std::vector<int> bound;
    colour_sort(g, p, order, bound);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (current_size + bound[i] <= best_size) return;
      const int v = order[i];
      current.set(v);
      ++current_size;
      const VertexBits next = p & g.neighbor_bits(v);
      if (next.none()) {
        if (current_size > best_size) best = current, best_size = current_size;
      } else {
        run(next);
      }
      current.reset(v);
      --current_size;
      p.reset(v);
    }
  }
};

// Decides k-colourability by DSATUR backtracking over 64-bit colour masks.
class Colouring {
 public:
  Colouring(const Graph& g, const VertexSet& clique) : n_(g.order()) {
    adj_.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) g.neighbor_bits(v).for_each([&](int u) { adj_[v] |= bit(u); });
    clique_ = std::vector<int>(clique.begin(), clique.end());
  }

  /// Colouring with at most k colours, if one exists.
  std::optional<std::vector<int>> solve(int k) {
    k_ = k;
    colour_.assign(static_cast<std::size_t>(n_), -1);
    if (static_cast<int>(clique_.size()) > k) return std::nullopt;
    // Colours of a clique are interchangeable, so fix them up front.
    for (std::size_t i = 0; i < clique_.size(); ++i) colour_[clique_[i]] = static_cast<int>(i);
    used_ = static_cast<int>(clique_.size());
    if (search(n_ - static_cast<int>(clique_.size()))) return colour_;
    return std::nullopt;
  }

  /// Greedy DSATUR colouring without backtracking.
  std::vector<int> greedy() {
    colour_.assign(static_cast<std::size_t>(n_), -1);
    for (int left = n_; left > 0; --left) {
      const int v = pick();
      const std::uint64_t forbidden = forbidden_for(v);
      colour_[v] = std::countr_one(forbidden);
    }
    return colour_;
  }

 private:
  static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

  std::uint64_t forbidden_for(int v) const {
    std::uint64_t mask = 0;
    for (std::uint64_t a = adj_[v]; a; a &= a - 1) {
      const int u = std::countr_zero(a);
      if (colour_[u] >= 0) mask |= bit(colour_[u]);
    }
    return mask;
  }

  // Uncoloured vertex of maximum saturation, then maximum uncoloured
  // degree, then lowest index.
  int pick() const {
    int best = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (int v = 0; v < n_; ++v) {
      if (colour_[v] >= 0) continue;
      const int sat = std::popcount(forbidden_for(v));
      int deg = 0;
      for (std::uint64_t a = adj_[v]; a; a &= a - 1) deg += colour_[std::countr_zero(a)] < 0;
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  bool search(int left) {
    if (left == 0) return true;
    const int v = pick();
    const std::uint64_t forbidden = forbidden_for(v);
    if (std::popcount(forbidden) >= k_) return false;
    // A colour beyond the ones used so far is interchangeable with any other.
    const int limit = std::min(k_, used_ + 1);
    for (int c = 0; c < limit; ++c) {
      if (forbidden & bit(c)) continue;
      colour_[v] = c;
      const int saved = used_;
      used_ = std::max(used_, c + 1);
      if (search(left - 1)) return true;
      used_ = saved;
    }
    colour_[v] = -1;
    return false;
  }

  int n_;
  int k_ = 0;
  int used_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<int> clique_;
  std::vector<int> colour_;
};

}  // namespace

bool for_each_maximal_clique(const Graph& g, VertexBits candidates, VertexBits excluded,
                             const CliqueVisitor& visit, VertexBits seed) {
  if (seed.none() && candidates.none()) return true;
  return expand(g, seed, candidates, excluded, visit);
}

bool for_each_maximal_clique(const Graph& g, const CliqueVisitor& visit) {
  return for_each_maximal_clique(g, g.all_vertices(), VertexBits{}, visit);
}

CliqueList maximal_cliques(const Graph& g) { return collect(g); }

CliqueList maximal_independent_sets(const Graph& g) { return collect(complement(g)); }

VertexSet maximum_clique(const Graph& g) {
  MaxCliqueSearch search(g);
  search.run(g.all_vertices());
  return VertexSet::from_bits(search.best);
}

int clique_number(const Graph& g) { return static_cast<int>(maximum_clique(g).size()); }

int independence_number(const Graph& g) { return clique_number(complement(g)); }

Graph clique_graph(const CliqueList& cliques) {
  if (cliques.size() > static_cast<std::size_t>(kMaxVertices))
    throw CapacityExceeded("clique graph order " + std::to_string(cliques.size()) +
                           " exceeds vertex cap");
  const int m = static_cast<int>(cliques.size());
  std::vector<VertexBits> bits;
  for (const auto& c : cliques) bits.push_back(c.bits());
  std::vector<Edge> edges;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (bits[a].intersects(bits[b])) edges.emplace_back(a, b);
  return Graph::from_edges(m, edges);
}

Graph clique_graph(const Graph& g) { return clique_graph(maximal_cliques(g)); }

std::vector<int> optimal_coloring(const Graph& g) {
  const int n = g.order();
  if (n > kMaxColoringOrder)
    throw CapacityExceeded("exact colouring supports at most " +
                           std::to_string(kMaxColoringOrder) + " vertices");
  if (n == 0) return {};
  const VertexSet clique = maximum_clique(g);
  Colouring solver(g, clique);
  std::vector<int> best = solver.greedy();
  const int upper = *std::max_element(best.begin(), best.end()) + 1;
  // Every colour class is independent, so n / α bounds χ from below too.
  const int alpha = independence_number(g);
  const int lower = std::max(static_cast<int>(clique.size()), (n + alpha - 1) / alpha);
  for (int k = lower; k < upper; ++k)
    if (auto found = solver.solve(k)) return *found;
  return best;
}

int chromatic_number(const Graph& g) {
  const std::vector<int> colour = optimal_coloring(g);
  return colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
}

int clique_cover_number(const Graph& g) { return chromatic_number(complement(g)); }

}  // namespace strongclique
