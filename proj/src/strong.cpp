#include "strongclique/strong.hpp"

#include <algorithm>
#include <string>

#include "strongclique/errors.hpp"
#include "strongclique/perm_group.hpp"

namespace strongclique {

namespace {

void require_clique(const Graph& g, const VertexSet& c) {
  if (c.empty()) throw InvalidArgument("expected a nonempty clique");
  if (!is_clique(g, c)) throw InvalidArgument("vertex set is not a clique");
}

// Is there a maximal clique of h containing seed, drawn from p, avoiding x?
bool exists_maximal_clique(const Graph& h, const VertexBits& p, const VertexBits& x,
                           const VertexBits& seed = {}) {
  if (seed.none() && p.none()) return false;
  return !for_each_maximal_clique(h, p, x, [](const VertexBits&) { return false; }, seed);
}

// Existence of a maximal independent set of g avoiding c, given h = ḡ.
bool mis_avoids(const Graph& h, const VertexBits& c) {
  const VertexBits all = h.all_vertices();
  return exists_maximal_clique(h, all - c, c);
}

// Lexicographically smallest maximal independent set avoiding c, built one
// vertex at a time, each time taking the smallest vertex that still admits
// a completion using only larger vertices.
VertexSet smallest_mis_avoiding(const Graph& h, const VertexBits& c) {
  VertexBits r;
  VertexBits common = h.all_vertices();
  int last = -1;
  while (common.any()) {
    const VertexBits open = common - c;
    bool extended = false;
    for (int v = open.next(last); v >= 0; v = open.next(v)) {
      VertexBits seed = r;
      seed.set(v);
      const VertexBits nc = common & h.neighbor_bits(v);
      const VertexBits below = VertexBits::prefix(v + 1);
      if (exists_maximal_clique(h, (nc - c) - below, nc & (c | below), seed)) {
        r = seed;
        common = nc;
        last = v;
        extended = true;
        break;
      }
    }
    if (!extended) throw MethodMismatch("lost track of an avoiding maximal independent set");
  }
  return VertexSet::from_bits(r);
}

class DominationSearch {
 public:
  DominationSearch(const Graph& g, const VertexBits& c) : g_(g), c_(c) {}

  bool run() {
    const VertexBits undominated = c_ - dominated_;
    if (undominated.none()) return true;
    // Branch on the member of c with the fewest usable neighbours.
    VertexBits choice;
    int fewest = -1;
    undominated.for_each([&](int v) {
      const VertexBits cand = (g_.neighbor_bits(v) - c_) - blocked_;
      const int k = cand.count();
      if (fewest < 0 || k < fewest) fewest = k, choice = cand;
    });
    if (fewest == 0) return false;
    for (int u = choice.first(); u >= 0; u = choice.next(u)) {
      const VertexBits saved_blocked = blocked_;
      const VertexBits saved_dominated = dominated_;
      chosen_.set(u);
      blocked_ |= g_.neighbor_bits(u);
      blocked_.set(u);
      dominated_ |= g_.neighbor_bits(u) & c_;
      if (run()) return true;
      chosen_.reset(u);
      blocked_ = saved_blocked;
      dominated_ = saved_dominated;
    }
    return false;
  }

  [[nodiscard]] const VertexBits& chosen() const { return chosen_; }

 private:
  const Graph& g_;
  VertexBits c_;
  VertexBits chosen_;
  VertexBits blocked_;
  VertexBits dominated_;
};

std::vector<VertexSet> candidate_cliques(const Graph& g, Symmetry hint) {
  CliqueList cliques = maximal_cliques(g);
  if (hint == Symmetry::vertex_transitive && !cliques.empty()) {
    std::size_t omega = 0;
    for (const auto& c : cliques) omega = std::max(omega, c.size());
    std::erase_if(cliques, [&](const VertexSet& c) { return c.size() != omega; });
  }
  return cliques;
}

std::vector<VertexSet> strong_cliques(const Graph& g, Symmetry hint) {
  const Graph h = complement(g);
  std::vector<VertexSet> out;
  for (auto& c : candidate_cliques(g, hint))
    if (!mis_avoids(h, c.bits())) out.push_back(std::move(c));
  return out;
}

bool exact_cover(const Graph& g, const std::vector<VertexSet>& sets,
                 const std::vector<std::vector<int>>& containing, const std::vector<VertexBits>& bits,
                 VertexBits covered, std::vector<VertexSet>& chosen) {
  const int v = (g.all_vertices() - covered).first();
  if (v < 0) return true;
  for (int idx : containing[v]) {
    if (bits[idx].intersects(covered)) continue;
    chosen.push_back(sets[idx]);
    if (exact_cover(g, sets, containing, bits, covered | bits[idx], chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

void require_vertex_transitive(const Graph& g, const char* what) {
  if (!is_vertex_transitive(g))
    throw PreconditionFailed(std::string(what) + " requires a vertex-transitive graph");
}

}  // namespace

bool dominates(const Graph& g, const VertexSet& a, const VertexSet& b) {
  require_vertices(g, a);
  require_vertices(g, b);
  VertexBits reach;
  for (Vertex v : a) reach |= g.neighbor_bits(v);
  return b.bits().subset_of(reach);
}

StrongVerdict strong_by_maximal_sets(const Graph& g, const VertexSet& c) {
  require_clique(g, c);
  const Graph h = complement(g);
  const VertexBits cb = c.bits();
  if (!mis_avoids(h, cb)) return {true, std::nullopt};
  return {false, smallest_mis_avoiding(h, cb)};
}

StrongVerdict strong_by_domination(const Graph& g, const VertexSet& c) {
  require_clique(g, c);
  DominationSearch search(g, c.bits());
  if (!search.run()) return {true, std::nullopt};
  return {false, VertexSet::from_bits(search.chosen())};
}

StrongVerdict is_strong_clique(const Graph& g, const VertexSet& c) {
  StrongVerdict a = strong_by_maximal_sets(g, c);
  const StrongVerdict b = strong_by_domination(g, c);
  if (a.is_strong != b.is_strong)
    throw MethodMismatch("strong clique methods disagree on a clique of size " +
                         std::to_string(c.size()));
  return a;
}

StrongVerdict is_strong_independent_set(const Graph& g, const VertexSet& i) {
  if (!i.empty() && !is_independent(g, i)) throw InvalidArgument("vertex set is not independent");
  return is_strong_clique(complement(g), i);
}

std::pair<int, int> mis_size_range(const Graph& g) {
  int lo = 0;
  int hi = 0;
  for_each_maximal_clique(complement(g), [&](const VertexBits& s) {
    const int k = s.count();
    if (hi == 0 || k < lo) lo = k;
    hi = std::max(hi, k);
    return true;
  });
  return {lo, hi};
}

bool vt_strong_criterion(const Graph& g, const VertexSet& c) {
  require_clique(g, c);
  const int n = g.order();
  const int k = static_cast<int>(c.size());
  if (n % k != 0) return false;
  const int target = n / k;
  bool uniform = true;
  for_each_maximal_clique(complement(g), [&](const VertexBits& s) {
    uniform = s.count() == target;
    return uniform;
  });
  return uniform;
}

std::optional<VertexSet> has_strong_clique(const Graph& g, Symmetry hint) {
  const Graph h = complement(g);
  for (auto& c : candidate_cliques(g, hint))
    if (!mis_avoids(h, c.bits())) return std::move(c);
  return std::nullopt;
}

std::optional<VertexSet> has_strong_independent_set(const Graph& g, Symmetry hint) {
  return has_strong_clique(complement(g), hint);
}

bool is_well_covered(const Graph& g) {
  const auto [lo, hi] = mis_size_range(g);
  return lo == hi;
}

bool is_co_well_covered(const Graph& g) { return is_well_covered(complement(g)); }

bool is_cis(const Graph& g, Symmetry hint) {
  const Graph h = complement(g);
  bool all_strong = true;
  for_each_maximal_clique(g, [&](const VertexBits& c) {
    all_strong = !mis_avoids(h, c);
    return all_strong;
  });
  if (hint == Symmetry::vertex_transitive) {
    const bool pair = has_strong_clique(g, hint).has_value() &&
                      has_strong_independent_set(g, hint).has_value();
    if (pair != all_strong)
      throw MethodMismatch("CIS check disagrees with the strong clique/independent set pair");
  }
  return all_strong;
}

std::optional<std::vector<VertexSet>> is_localizable(const Graph& g, Symmetry hint) {
  const int n = g.order();
  const std::vector<VertexSet> sets = strong_cliques(g, hint);
  std::vector<std::vector<int>> containing(static_cast<std::size_t>(n));
  std::vector<VertexBits> bits;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bits.push_back(sets[i].bits());
    for (Vertex v : sets[i]) containing[v].push_back(static_cast<int>(i));
  }
  std::vector<VertexSet> chosen;
  std::optional<std::vector<VertexSet>> result;
  if (exact_cover(g, sets, containing, bits, VertexBits{}, chosen)) result = std::move(chosen);

  if (hint == Symmetry::vertex_transitive && n > 0 && is_cis(g, hint)) {
    const CliqueList cliques = maximal_cliques(g);
    if (cliques.size() <= static_cast<std::size_t>(kMaxVertices)) {
      const bool by_clique_graph =
          independence_number(clique_graph(cliques)) == independence_number(g);
      if (by_clique_graph != result.has_value())
        throw MethodMismatch("exact cover and clique graph independence disagree on localizability");
    }
  }
  return result;
}

bool irreducible_intersection_check(const Graph& g) {
  require_vertex_transitive(g, "intersection bound");
  if (is_reducible(g)) throw PreconditionFailed("intersection bound requires an irreducible graph");
  const CliqueList cliques = maximal_cliques(g);
  const Graph h = complement(g);
  for (const auto& c : cliques) {
    if (mis_avoids(h, c.bits())) continue;
    for (const auto& other : cliques) {
      if (other == c) continue;
      if (c.intersection_size(other) + 1 >= c.size()) return false;
    }
  }
  return true;
}

bool half_order_clique_check(const Graph& g) {
  const int n = g.order();
  require_vertex_transitive(g, "half-order clique check");
  const CliqueList cliques = maximal_cliques(g);
  const bool has_half = n % 2 == 0 && n > 0 &&
                        std::any_of(cliques.begin(), cliques.end(), [&](const VertexSet& c) {
                          return 2 * static_cast<int>(c.size()) == n;
                        });
  if (!has_half)
    throw PreconditionFailed("half-order clique check needs a maximal clique of size |V|/2");
  const auto partition = is_localizable(g, Symmetry::vertex_transitive);
  return partition && partition->size() == 2;
}

}  // namespace strongclique
