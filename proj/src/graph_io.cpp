#include "strongclique/graph_io.hpp"

#include <cctype>
#include <istream>
#include <iterator>
#include <sstream>
#include <vector>

#include "strongclique/errors.hpp"

namespace strongclique {

namespace {

constexpr int kOffset = 63;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int decode_byte(char c) {
  const int v = static_cast<unsigned char>(c) - kOffset;
  if (v < 0 || v > 63) throw ParseError(std::string("invalid graph6 byte '") + c + "'");
  return v;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  }
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kOffset));
  return out;
}

Graph from_graph6(std::string_view text) {
  text = trim(text);
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  if (text.empty()) throw ParseError("empty graph6 string");

  std::size_t pos = 0;
  int n = 0;
  if (static_cast<unsigned char>(text[0]) == 126) {
    if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126)
      throw CapacityExceeded("graph6 order beyond 258047 is not supported");
    if (text.size() < 4) throw ParseError("truncated graph6 size field");
    for (pos = 1; pos < 4; ++pos) n = (n << 6) | decode_byte(text[pos]);
  } else {
    n = decode_byte(text[0]);
    pos = 1;
  }
  if (n > kMaxVertices) throw CapacityExceeded("graph6 order " + std::to_string(n) + " exceeds cap");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    throw ParseError("graph6 body has " + std::to_string(text.size() - pos) +
                     " bytes, expected " + std::to_string(bytes));

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = decode_byte(text[pos + k / 6]);
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) edges.emplace_back(i, j);
    }
  }
  if (k % 6 != 0) {
    const int byte = decode_byte(text[pos + k / 6]);
    if (byte & ((1 << (6 - static_cast<int>(k % 6))) - 1))
      throw ParseError("graph6 padding bits are not zero");
  }
  return Graph::from_edges(n, edges);
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

Graph from_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::vector<Edge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      long long m = 0;
      if (!(ls >> kind >> n >> m) || (kind != "edge" && kind != "col"))
        throw ParseError("malformed DIMACS problem line " + std::to_string(lineno));
    } else if (tag == "e") {
      int u = 0;
      int v = 0;
      if (n < 0) throw ParseError("DIMACS edge before problem line");
      if (!(ls >> u >> v)) throw ParseError("malformed DIMACS edge line " + std::to_string(lineno));
      edges.emplace_back(u - 1, v - 1);
    } else {
      throw ParseError("unknown DIMACS line tag '" + tag + "'");
    }
  }
  if (n < 0) throw ParseError("DIMACS input has no problem line");
  return Graph::from_edges(n, edges);
}

Graph parse_graph(std::string_view text) {
  std::string_view t = trim(text);
  if (t.empty()) throw ParseError("empty graph input");
  if (t.front() == 'c' || t.front() == 'p' || t.front() == 'e') {
    if (t.size() > 1 && std::isspace(static_cast<unsigned char>(t[1]))) return from_dimacs(t);
  }
  return from_graph6(t);
}

Graph read_graph(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_graph(text);
}

}  // namespace strongclique
