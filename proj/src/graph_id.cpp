#include "strongclique/graph_id.hpp"

#include <cctype>

#include "strongclique/errors.hpp"
#include "strongclique/generators.hpp"

namespace strongclique {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Graph parse() {
    Graph g = expr();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) +
                     "'");
  }

  [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
  [[nodiscard]] char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool accept(std::string_view token) {
    if (text_.substr(pos_).starts_with(token)) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  int number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 1'000'000) fail("number too large");
    }
    return static_cast<int>(v);
  }

  Graph expr() {
    Graph g = term();
    while (accept("x")) g = cartesian_product(g, term());
    return g;
  }

  Graph term() {
    Graph g = atom();
    while (accept("[")) {
      Graph inner = expr();
      expect("]");
      g = lexicographic_product(g, inner);
    }
    return g;
  }

  Graph atom() {
    if (accept("(")) {
      Graph g = expr();
      expect(")");
      return g;
    }
    if (accept("co(")) {
      Graph g = expr();
      expect(")");
      return complement(g);
    }
    if (accept("Cay(")) return cayley_atom();
    if (accept("Petersen")) return petersen_graph();
    if (accept("GP(")) {
      const int n = number();
      expect(",");
      const int k = number();
      expect(")");
      return generalized_petersen(n, k);
    }
    if (accept("J(")) {
      const int n = number();
      expect(",");
      const int k = number();
      expect(",");
      const int i = number();
      expect(")");
      return gen_johnson(n, k, i);
    }
    if (accept("L(")) {
      Graph g = expr();
      expect(")");
      return line_graph(g);
    }
    if (peek() == 'L' && peek(1) == '1' && peek(2) >= 'a' && peek(2) <= 'd' && peek(3) == '(') {
      const char f = peek(2);
      pos_ += 4;
      const int n = number();
      expect(")");
      return family_l1(static_cast<L1Family>(f - 'a'), n);
    }
    if (accept("L")) return local_pattern(number());
    if (accept("K")) {
      const int m = number();
      if (peek() == ',' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
        ++pos_;
        return complete_bipartite(m, number());
      }
      return complete_graph(m);
    }
    if (accept("C")) return cycle_graph(number());
    if (accept("P")) return path_graph(number());
    if (accept("H")) return h_graph(number());
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const int t = number();
      expect("K1");
      return empty_graph(t);
    }
    fail("unknown graph name");
  }

  Graph cayley_atom() {
    const std::size_t semi = text_.find(';', pos_);
    if (semi == std::string_view::npos) fail("expected ';' in Cayley graph");
    const FiniteGroup group = FiniteGroup::parse(text_.substr(pos_, semi - pos_));
    pos_ = semi + 1;
    std::vector<int> elements;
    int depth = 0;
    std::size_t start = pos_;
    for (; !at_end(); ++pos_) {
      const char c = peek();
      if (c == '(' || c == '[') {
        ++depth;
      } else if ((c == ')' || c == ']') && depth > 0) {
        --depth;
      } else if (depth == 0 && (c == ',' || c == ')')) {
        elements.push_back(group.parse_element(text_.substr(start, pos_ - start)));
        start = pos_ + 1;
        if (c == ')') break;
      }
    }
    expect(")");
    return cayley(group, ConnectionSet(group, std::move(elements)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph build_graph(std::string_view id) { return Parser(id).parse(); }

std::string cayley_id(const FiniteGroup& group, const ConnectionSet& s) {
  std::string out = "Cay(" + group.name() + ";";
  for (std::size_t i = 0; i < s.elements().size(); ++i)
    out += (i ? "," : "") + group.element_name(s.elements()[i]);
  return out + ")";
}

}  // namespace strongclique
