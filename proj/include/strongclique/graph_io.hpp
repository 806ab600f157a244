#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "strongclique/graph.hpp"

namespace strongclique {

/// graph6 text without trailing newline. Bit-exact with the reference
/// format: size prefix, then the upper triangle in column order packed
/// into big-endian 6-bit groups offset by 63.
[[nodiscard]] std::string to_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" header and surrounding whitespace.
[[nodiscard]] Graph from_graph6(std::string_view text);

/// "p edge n m" followed by one "e u v" line per edge, 1-based.
[[nodiscard]] std::string to_dimacs(const Graph& g);
[[nodiscard]] Graph from_dimacs(std::string_view text);

/// DIMACS if the first significant line starts with 'c', 'p' or 'e',
/// otherwise graph6.
[[nodiscard]] Graph parse_graph(std::string_view text);
[[nodiscard]] Graph read_graph(std::istream& in);

}  // namespace strongclique
