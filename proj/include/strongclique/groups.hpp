#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "strongclique/graph.hpp"

namespace strongclique {

enum class GroupKind { cyclic, abelian, dihedral, symmetric };

/// Small finite group with elements encoded as 0..order-1; 0 is always the
/// identity.
///   cyclic n:        residues mod n
///   abelian [n1..nk]: mixed-radix tuples, first factor most significant
///   dihedral n:      order 2n, r^k s^f encoded as f*n + k
///   symmetric n:     permutations of 0..n-1 by Lehmer rank
class FiniteGroup {
 public:
  static constexpr int kMaxOrder = 10'000;

  static FiniteGroup cyclic(int n);
  static FiniteGroup abelian(std::vector<int> moduli);
  static FiniteGroup dihedral(int n);
  static FiniteGroup symmetric(int n);
  /// "Z12", "Z2xZ6", "D6" (order 12), "S4".
  static FiniteGroup parse(std::string_view text);

  [[nodiscard]] GroupKind kind() const { return kind_; }
  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] const std::vector<int>& moduli() const { return moduli_; }
  [[nodiscard]] int multiply(int a, int b) const;
  [[nodiscard]] int inverse(int a) const;
  [[nodiscard]] std::string name() const;

  /// "5" (cyclic), "(1,0)" (abelian), "r2" = r^2 and "s2" = r^2 s
  /// (dihedral), "[1,0,2]" (symmetric, image list).
  [[nodiscard]] std::string element_name(int a) const;
  [[nodiscard]] int parse_element(std::string_view text) const;

  /// Abelian kinds only: element with the given coordinates, reduced.
  [[nodiscard]] int element(std::initializer_list<int> coords) const;

 private:
  FiniteGroup(GroupKind kind, std::vector<int> moduli, int order);
  void check(int a) const;

  GroupKind kind_ = GroupKind::cyclic;
  std::vector<int> moduli_;  // cyclic/abelian factors, or {n} for D_n and S_n
  int order_ = 1;
};

/// Inverse-closed, identity-free subset of a group, stored sorted.
class ConnectionSet {
 public:
  /// Throws InvalidArgument on identity, out-of-range elements, or a
  /// missing inverse. Duplicates collapse.
  ConnectionSet(const FiniteGroup& group, std::vector<int> elements);
  /// Adds inverses before validating.
  static ConnectionSet symmetric_closure(const FiniteGroup& group, std::vector<int> elements);

  [[nodiscard]] const std::vector<int>& elements() const { return elements_; }

 private:
  std::vector<int> elements_;
};

/// x ~ y iff x^{-1} y is in s; vertex i is group element i.
[[nodiscard]] Graph cayley(const FiniteGroup& group, const ConnectionSet& s);

}  // namespace strongclique
