#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "strongclique/graph.hpp"

namespace strongclique {

/// Bijection on [0, n); images[v] is the image of v.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidArgument unless images is a bijection on [0, size).
  explicit Permutation(std::vector<Vertex> images);
  static Permutation identity(int n);

  [[nodiscard]] int degree() const { return static_cast<int>(images_.size()); }
  [[nodiscard]] Vertex operator()(Vertex v) const { return images_[v]; }
  [[nodiscard]] std::span<const Vertex> images() const { return images_; }
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] Permutation inverse() const;
  [[nodiscard]] VertexSet apply(const VertexSet& s) const;

  /// (a * b)(v) = a(b(v)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<Vertex> images_;
};

[[nodiscard]] bool is_automorphism(const Graph& g, const Permutation& p);
[[nodiscard]] bool is_isomorphism(const Graph& from, const Graph& to, const Permutation& p);

/// Generators of a permutation group, with the base and fundamental orbit
/// lengths of the stabilizer chain they were found along (when known).
class GeneratorSet {
 public:
  GeneratorSet() = default;
  GeneratorSet(int degree, std::vector<Permutation> generators, std::vector<Vertex> base = {},
               std::vector<std::size_t> orbit_lengths = {});

  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] const std::vector<Permutation>& generators() const { return gens_; }
  [[nodiscard]] std::span<const Vertex> base() const { return base_; }
  [[nodiscard]] std::span<const std::size_t> fundamental_orbit_lengths() const {
    return orbit_lengths_;
  }
  /// Product of the fundamental orbit lengths. nullopt when no chain is
  /// attached or the order does not fit in 64 bits.
  [[nodiscard]] std::optional<std::uint64_t> order() const;

 private:
  int degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Vertex> base_;
  std::vector<std::size_t> orbit_lengths_;
};

/// Generators of Aut(g) with their stabilizer chain. Search refines to an
/// equitable partition, then individualizes the lowest-index vertex of the
/// largest cell at every level.
[[nodiscard]] GeneratorSet automorphisms(const Graph& g);

[[nodiscard]] bool is_vertex_transitive(const Graph& g);

/// Smallest generator-closed set containing v.
[[nodiscard]] VertexSet orbit(const GeneratorSet& gens, Vertex v);
[[nodiscard]] std::vector<VertexSet> orbits(const GeneratorSet& gens);
/// Orbit of a vertex set under the action induced on subsets.
[[nodiscard]] std::vector<VertexSet> set_orbit(std::span<const Permutation> gens,
                                               const VertexSet& s);

/// Every group element, by breadth-first closure. Throws CapacityExceeded
/// once more than `limit` elements are found.
[[nodiscard]] std::vector<Permutation> group_closure(const GeneratorSet& gens,
                                                     std::size_t limit = 1'000'000);

/// With Symmetry::vertex_transitive the caller vouches that g2 is
/// vertex-transitive, which lets the search pin the first base vertex.
[[nodiscard]] std::optional<Permutation> find_isomorphism(const Graph& g1, const Graph& g2,
                                                          Symmetry hint = Symmetry::unknown);
[[nodiscard]] bool are_isomorphic(const Graph& g1, const Graph& g2,
                                  Symmetry hint = Symmetry::unknown);

}  // namespace strongclique
