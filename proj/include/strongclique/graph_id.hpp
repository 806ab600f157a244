#pragma once

#include <string>
#include <string_view>

#include "strongclique/graph.hpp"
#include "strongclique/groups.hpp"

namespace strongclique {

/// Builds a graph from a compact name. Grammar:
///
///   expr   := term ('x' term)*            cartesian product
///   term   := atom ('[' expr ']')*        lexicographic product
///   atom   := 'K' n | 'K' m ',' n | 'C' n | 'P' n | t 'K1'
///           | 'Petersen' | 'GP(' n ',' k ')' | 'H' n | 'J(' n ',' k ',' i ')'
///           | 'L' k                       local pattern 1..6
///           | 'L1' f '(' n ')'            f in a..d, the K3+2K1 families
///           | 'L(' expr ')'               line graph
///           | 'co(' expr ')'              complement
///           | 'Cay(' group ';' element (',' element)* ')'
///           | '(' expr ')'
///
/// Examples: "K3[2K1]", "K3xK4", "co(C8)", "L(K3,3)", "Cay(Z12;1,4,6,8,11)",
/// "Cay(Z2xZ4;(0,1),(0,3),(1,0))". Throws ParseError on malformed input.
[[nodiscard]] Graph build_graph(std::string_view id);

/// "Cay(<group>;<elements>)" with elements listed in encoding order.
[[nodiscard]] std::string cayley_id(const FiniteGroup& group, const ConnectionSet& s);

}  // namespace strongclique
