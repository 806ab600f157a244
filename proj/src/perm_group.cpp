#include "strongclique/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "strongclique/errors.hpp"

namespace strongclique {

Permutation::Permutation(std::vector<Vertex> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (Vertex v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || hit[v])
      throw InvalidArgument("image sequence is not a bijection");
    hit[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<Vertex> images(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) images[v] = v;
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t v = 0; v < images_.size(); ++v)
    if (images_[v] != static_cast<Vertex>(v)) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Vertex> inv(images_.size());
  for (std::size_t v = 0; v < images_.size(); ++v) inv[images_[v]] = static_cast<Vertex>(v);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

VertexSet Permutation::apply(const VertexSet& s) const {
  std::vector<Vertex> out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(images_.at(static_cast<std::size_t>(v)));
  return VertexSet(std::move(out));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InvalidArgument("composing permutations of different degree");
  Permutation p;
  p.images_.resize(a.images_.size());
  for (std::size_t v = 0; v < a.images_.size(); ++v) p.images_[v] = a.images_[b.images_[v]];
  return p;
}

bool is_isomorphism(const Graph& from, const Graph& to, const Permutation& p) {
  if (from.order() != to.order() || p.degree() != from.order()) return false;
  if (from.edge_count() != to.edge_count()) return false;
  for (auto [u, v] : from.edges())
    if (!to.adjacent(p(u), p(v))) return false;
  return true;
}

bool is_automorphism(const Graph& g, const Permutation& p) { return is_isomorphism(g, g, p); }

GeneratorSet::GeneratorSet(int degree, std::vector<Permutation> generators,
                           std::vector<Vertex> base, std::vector<std::size_t> orbit_lengths)
    : degree_(degree),
      gens_(std::move(generators)),
      base_(std::move(base)),
      orbit_lengths_(std::move(orbit_lengths)) {
  for (const auto& g : gens_)
    if (g.degree() != degree_) throw InvalidArgument("generator degree mismatch");
  if (base_.size() != orbit_lengths_.size())
    throw InvalidArgument("base and orbit lengths differ in length");
}

std::optional<std::uint64_t> GeneratorSet::order() const {
  if (orbit_lengths_.empty() && !gens_.empty()) return std::nullopt;
  std::uint64_t order = 1;
  for (std::size_t len : orbit_lengths_) {
    if (len != 0 && order > UINT64_MAX / len) return std::nullopt;
    order *= len;
  }
  return order;
}

namespace {

using Trace = std::vector<std::uint32_t>;

// Ordered partition stored nauty-style: cells are contiguous runs of `lab`
// and are named by their start position, which never changes when a cell
// is split.
struct OrderedPartition {
  std::vector<Vertex> lab;
  std::vector<int> pos;         // vertex -> index in lab
  std::vector<int> cell_start;  // vertex -> start of its cell
  std::vector<int> cell_len;    // start -> length (only meaningful at starts)
  int cells = 0;

  explicit OrderedPartition(int n)
      : lab(static_cast<std::size_t>(n)),
        pos(static_cast<std::size_t>(n)),
        cell_start(static_cast<std::size_t>(n), 0),
        cell_len(static_cast<std::size_t>(n), 0),
        cells(n > 0 ? 1 : 0) {
    for (int v = 0; v < n; ++v) lab[v] = pos[v] = v;
    if (n > 0) cell_len[0] = n;
  }

  [[nodiscard]] int order() const { return static_cast<int>(lab.size()); }
  [[nodiscard]] bool discrete() const { return cells == order(); }

  [[nodiscard]] std::vector<Vertex> sorted_cell(int start) const {
    std::vector<Vertex> out(lab.begin() + start, lab.begin() + start + cell_len[start]);
    std::sort(out.begin(), out.end());
    return out;
  }

  // Moves v to the front of its cell and splits it off as a singleton.
  void individualize(Vertex v) {
    const int start = cell_start[v];
    const int len = cell_len[start];
    if (len == 1) return;
    const int p = pos[v];
    std::swap(lab[p], lab[start]);
    pos[lab[p]] = p;
    pos[v] = start;
    cell_len[start] = 1;
    cell_len[start + 1] = len - 1;
    for (int i = start + 1; i < start + len; ++i) cell_start[lab[i]] = start + 1;
    ++cells;
  }
};

// Refines p to the coarsest equitable partition finer than it, starting
// from the given splitter cell. Every decision depends only on cell
// positions and neighbour counts, so isomorphic inputs produce identical
// traces. With `expected` set, stops as soon as the trace diverges.
bool refine(const Graph& g, OrderedPartition& p, int first_splitter, Trace& trace,
            const Trace* expected) {
  const int n = p.order();
  std::deque<int> queue{first_splitter};
  std::vector<char> queued(static_cast<std::size_t>(n), 0);
  queued[first_splitter] = 1;
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> touched_vertices;
  std::vector<int> touched_cells;
  std::vector<Vertex> splitter;

  auto emit = [&](std::uint32_t x) {
    if (expected && (trace.size() >= expected->size() || (*expected)[trace.size()] != x))
      return false;
    trace.push_back(x);
    return true;
  };

  while (!queue.empty() && !p.discrete()) {
    const int s = queue.front();
    queue.pop_front();
    queued[s] = 0;
    splitter.assign(p.lab.begin() + s, p.lab.begin() + s + p.cell_len[s]);

    for (Vertex w : splitter) {
      for (Vertex u : g.neighbors(w)) {
        if (count[u]++ == 0) {
          touched_vertices.push_back(u);
          const int c = p.cell_start[u];
          if (std::find(touched_cells.begin(), touched_cells.end(), c) == touched_cells.end())
            touched_cells.push_back(c);
        }
      }
    }
    std::sort(touched_cells.begin(), touched_cells.end());

    bool ok = true;
    for (int c : touched_cells) {
      const int len = p.cell_len[c];
      if (len == 1) continue;
      auto first = p.lab.begin() + c;
      auto last = first + len;
      std::stable_sort(first, last, [&](Vertex a, Vertex b) { return count[a] < count[b]; });
      if (count[*first] == count[*(last - 1)]) continue;

      // Split into runs of equal count, in ascending count order.
      std::vector<std::pair<int, int>> frags;  // (start, count)
      for (int i = c; i < c + len; ++i) {
        const Vertex v = p.lab[i];
        p.pos[v] = i;
        if (i == c || count[v] != count[p.lab[i - 1]]) frags.emplace_back(i, count[v]);
      }
      ok = emit(static_cast<std::uint32_t>(c)) && emit(static_cast<std::uint32_t>(s)) &&
           emit(static_cast<std::uint32_t>(frags.size()));
      for (std::size_t f = 0; ok && f < frags.size(); ++f) {
        const int fs = frags[f].first;
        const int fe = f + 1 < frags.size() ? frags[f + 1].first : c + len;
        p.cell_len[fs] = fe - fs;
        for (int i = fs; i < fe; ++i) p.cell_start[p.lab[i]] = fs;
        ok = emit(static_cast<std::uint32_t>(frags[f].second)) &&
             emit(static_cast<std::uint32_t>(fe - fs));
      }
      if (!ok) break;
      p.cells += static_cast<int>(frags.size()) - 1;
      for (auto [fs, cnt] : frags) {
        if (!queued[fs]) {
          queued[fs] = 1;
          queue.push_back(fs);
        }
      }
    }
    for (Vertex u : touched_vertices) count[u] = 0;
    touched_vertices.clear();
    touched_cells.clear();
    if (!ok) return false;
  }
  return !expected || trace.size() == expected->size();
}

// The fixed left-hand path of the search tree: successive individualizations
// of a base, each followed by refinement, down to a discrete partition.
struct SearchPath {
  std::vector<OrderedPartition> partitions;
  std::vector<Trace> traces;
  std::vector<Vertex> base;
  std::vector<int> target;  // start of the individualized cell per level
};

// Largest non-singleton cell; among equally large cells, the one holding the
// lowest-index vertex. Returns -1 when discrete.
int target_cell(const OrderedPartition& p) {
  int best = -1;
  int best_len = 1;
  Vertex best_min = 0;
  for (int s = 0; s < p.order(); s += p.cell_len[s]) {
    const int len = p.cell_len[s];
    if (len < 2 || len < best_len) continue;
    const Vertex mn = *std::min_element(p.lab.begin() + s, p.lab.begin() + s + len);
    if (len > best_len || best < 0 || mn < best_min) {
      best = s;
      best_len = len;
      best_min = mn;
    }
  }
  return best;
}

SearchPath left_path(const Graph& g) {
  SearchPath path;
  OrderedPartition p(g.order());
  Trace t;
  if (g.order() > 0) refine(g, p, 0, t, nullptr);
  path.partitions.push_back(p);
  path.traces.push_back(std::move(t));
  while (true) {
    const int cell = target_cell(path.partitions.back());
    if (cell < 0) break;
    OrderedPartition next = path.partitions.back();
    const Vertex b = next.sorted_cell(cell).front();
    next.individualize(b);
    Trace nt;
    refine(g, next, cell, nt, nullptr);
    path.base.push_back(b);
    path.target.push_back(cell);
    path.partitions.push_back(std::move(next));
    path.traces.push_back(std::move(nt));
  }
  return path;
}

// Individualizes w in the right-hand partition and refines against the left
// trace at the next level.
std::optional<OrderedPartition> branch(const Graph& right, const SearchPath& path,
                                       std::size_t depth, const OrderedPartition& at, Vertex w) {
  OrderedPartition child = at;
  child.individualize(w);
  Trace t;
  if (!refine(right, child, path.target[depth], t, &path.traces[depth + 1])) return std::nullopt;
  return child;
}

// Completes the right-hand path below `depth` in every trace-compatible way
// until a leaf yields an isomorphism left -> right.
std::optional<Permutation> extend(const Graph& left, const Graph& right, const SearchPath& path,
                                  std::size_t depth, const OrderedPartition& at) {
  if (depth == path.base.size()) {
    const auto& leaf = path.partitions[depth];
    std::vector<Vertex> images(static_cast<std::size_t>(left.order()));
    for (int i = 0; i < left.order(); ++i) images[leaf.lab[i]] = at.lab[i];
    Permutation p(std::move(images));
    if (is_isomorphism(left, right, p)) return p;
    return std::nullopt;
  }
  for (Vertex w : at.sorted_cell(path.target[depth])) {
    auto child = branch(right, path, depth, at, w);
    if (!child) continue;
    if (auto found = extend(left, right, path, depth + 1, *child)) return found;
  }
  return std::nullopt;
}

VertexBits orbit_bits(std::span<const Permutation> gens, Vertex v) {
  VertexBits seen;
  seen.set(v);
  std::vector<Vertex> stack{v};
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      const Vertex y = g(x);
      if (!seen.test(y)) {
        seen.set(y);
        stack.push_back(y);
      }
    }
  }
  return seen;
}

}  // namespace

GeneratorSet automorphisms(const Graph& g) {
  const SearchPath path = left_path(g);
  const std::size_t k = path.base.size();
  std::vector<Permutation> gens;
  std::vector<std::size_t> lengths(k, 1);

  // Deepest level first, so that at level i the generators already found
  // generate the stabilizer of base[0..i] and orbits can prune candidates.
  for (std::size_t i = k; i-- > 0;) {
    const Vertex b = path.base[i];
    VertexBits orb = orbit_bits(gens, b);
    for (Vertex w : path.partitions[i].sorted_cell(path.target[i])) {
      if (orb.test(w)) continue;
      auto child = branch(g, path, i, path.partitions[i], w);
      if (!child) continue;
      if (auto found = extend(g, g, path, i + 1, *child)) {
        gens.push_back(std::move(*found));
        orb = orbit_bits(gens, b);
      }
    }
    lengths[i] = static_cast<std::size_t>(orb.count());
  }
  return GeneratorSet(g.order(), std::move(gens), path.base, std::move(lengths));
}

bool is_vertex_transitive(const Graph& g) {
  if (g.order() <= 1) return true;
  if (!valency(g)) return false;
  const GeneratorSet aut = automorphisms(g);
  return orbit(aut, 0).size() == static_cast<std::size_t>(g.order());
}

VertexSet orbit(const GeneratorSet& gens, Vertex v) {
  if (v < 0 || v >= gens.degree()) throw InvalidArgument("orbit seed out of range");
  return VertexSet::from_bits(orbit_bits(gens.generators(), v));
}

std::vector<VertexSet> orbits(const GeneratorSet& gens) {
  std::vector<VertexSet> out;
  VertexBits covered;
  for (Vertex v = 0; v < gens.degree(); ++v) {
    if (covered.test(v)) continue;
    const VertexBits o = orbit_bits(gens.generators(), v);
    covered |= o;
    out.push_back(VertexSet::from_bits(o));
  }
  return out;
}

std::vector<VertexSet> set_orbit(std::span<const Permutation> gens, const VertexSet& s) {
  std::set<VertexSet> seen{s};
  std::vector<VertexSet> stack{s};
  while (!stack.empty()) {
    const VertexSet x = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      VertexSet y = g.apply(x);
      if (seen.insert(y).second) stack.push_back(std::move(y));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Permutation> group_closure(const GeneratorSet& gens, std::size_t limit) {
  std::set<Permutation> seen{Permutation::identity(gens.degree())};
  std::vector<Permutation> frontier{*seen.begin()};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens.generators()) {
        Permutation y = g * x;
        if (seen.insert(y).second) {
          if (seen.size() > limit)
            throw CapacityExceeded("group closure exceeds " + std::to_string(limit) + " elements");
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::optional<Permutation> find_isomorphism(const Graph& g1, const Graph& g2, Symmetry hint) {
  if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) return std::nullopt;
  const int n = g1.order();
  std::vector<int> d1(static_cast<std::size_t>(n));
  std::vector<int> d2(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) d1[v] = g1.degree(v), d2[v] = g2.degree(v);
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  if (d1 != d2) return std::nullopt;
  if (n == 0) return Permutation::identity(0);

  const SearchPath path = left_path(g1);
  OrderedPartition root(n);
  Trace t;
  if (!refine(g2, root, 0, t, &path.traces[0])) return std::nullopt;
  if (path.base.empty()) return extend(g1, g2, path, 0, root);

  if (hint == Symmetry::vertex_transitive) {
    // Any isomorphism can be composed with an automorphism of g2 moving the
    // image of the first base vertex anywhere, so one branch suffices.
    const Vertex w = root.sorted_cell(path.target[0]).front();
    auto child = branch(g2, path, 0, root, w);
    if (!child) return std::nullopt;
    return extend(g1, g2, path, 1, *child);
  }
  return extend(g1, g2, path, 0, root);
}

bool are_isomorphic(const Graph& g1, const Graph& g2, Symmetry hint) {
  return find_isomorphism(g1, g2, hint).has_value();
}

}  // namespace strongclique
