#include "strongclique/groups.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "strongclique/errors.hpp"

namespace strongclique {

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last)
    throw ParseError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

int mod(int a, int n) { return ((a % n) + n) % n; }

std::vector<int> unrank(int rank, int n) {
  std::vector<int> fact(static_cast<std::size_t>(n) + 1, 1);
  for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> p;
  for (int i = n - 1; i >= 0; --i) {
    const int q = rank / fact[i];
    rank %= fact[i];
    p.push_back(pool[q]);
    pool.erase(pool.begin() + q);
  }
  return p;
}

int rank_of(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  int rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) smaller += p[j] < p[i];
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

}  // namespace

FiniteGroup::FiniteGroup(GroupKind kind, std::vector<int> moduli, int order)
    : kind_(kind), moduli_(std::move(moduli)), order_(order) {}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1 || n > kMaxOrder) throw InvalidArgument("cyclic group order out of range");
  return FiniteGroup(GroupKind::cyclic, {n}, n);
}

FiniteGroup FiniteGroup::abelian(std::vector<int> moduli) {
  if (moduli.empty()) throw InvalidArgument("abelian group needs at least one factor");
  long long order = 1;
  for (int m : moduli) {
    if (m < 1) throw InvalidArgument("cyclic factor order must be positive");
    order *= m;
    if (order > kMaxOrder) throw CapacityExceeded("group order exceeds 10000");
  }
  if (moduli.size() == 1) return cyclic(moduli[0]);
  return FiniteGroup(GroupKind::abelian, std::move(moduli), static_cast<int>(order));
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 1) throw InvalidArgument("dihedral group needs n >= 1");
  if (2 * static_cast<long long>(n) > kMaxOrder) throw CapacityExceeded("group order exceeds 10000");
  return FiniteGroup(GroupKind::dihedral, {n}, 2 * n);
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1) throw InvalidArgument("symmetric group needs n >= 1");
  if (n > 7) throw CapacityExceeded("group order exceeds 10000");
  int order = 1;
  for (int i = 2; i <= n; ++i) order *= i;
  return FiniteGroup(GroupKind::symmetric, {n}, order);
}

FiniteGroup FiniteGroup::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty group name");
  const char tag = text.front();
  if (tag == 'D') return dihedral(parse_int(text.substr(1), "dihedral degree"));
  if (tag == 'S') return symmetric(parse_int(text.substr(1), "symmetric degree"));
  if (tag != 'Z') throw ParseError("unknown group '" + std::string(text) + "'");
  std::vector<int> moduli;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('x', start), text.size());
    const std::string_view factor = text.substr(start, end - start);
    if (factor.size() < 2 || factor.front() != 'Z')
      throw ParseError("malformed group factor in '" + std::string(text) + "'");
    moduli.push_back(parse_int(factor.substr(1), "cyclic order"));
    start = end + 1;
  }
  return abelian(std::move(moduli));
}

void FiniteGroup::check(int a) const {
  if (a < 0 || a >= order_) throw InvalidArgument("group element out of range");
}

int FiniteGroup::multiply(int a, int b) const {
  check(a);
  check(b);
  switch (kind_) {
    case GroupKind::cyclic:
      return (a + b) % order_;
    case GroupKind::abelian: {
      int out = 0;
      int place = order_;
      for (int m : moduli_) {
        place /= m;
        const int da = a / place % m;
        const int db = b / place % m;
        out += (da + db) % m * place;
      }
      return out;
    }
    case GroupKind::dihedral: {
      const int n = moduli_[0];
      const int ka = a % n, fa = a / n;
      const int kb = b % n, fb = b / n;
      return (fa ^ fb) * n + mod(ka + (fa ? -kb : kb), n);
    }
    case GroupKind::symmetric: {
      const int n = moduli_[0];
      const std::vector<int> p = unrank(a, n);
      const std::vector<int> q = unrank(b, n);
      std::vector<int> r(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) r[i] = p[q[i]];
      return rank_of(r);
    }
  }
  return 0;
}

int FiniteGroup::inverse(int a) const {
  check(a);
  switch (kind_) {
    case GroupKind::cyclic:
      return (order_ - a) % order_;
    case GroupKind::abelian: {
      int out = 0;
      int place = order_;
      for (int m : moduli_) {
        place /= m;
        out += (m - a / place % m) % m * place;
      }
      return out;
    }
    case GroupKind::dihedral: {
      const int n = moduli_[0];
      return a >= n ? a : (n - a) % n;
    }
    case GroupKind::symmetric: {
      const std::vector<int> p = unrank(a, moduli_[0]);
      std::vector<int> inv(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
      return rank_of(inv);
    }
  }
  return 0;
}

std::string FiniteGroup::name() const {
  switch (kind_) {
    case GroupKind::cyclic:
      return "Z" + std::to_string(order_);
    case GroupKind::abelian: {
      std::string out;
      for (int m : moduli_) out += (out.empty() ? "Z" : "xZ") + std::to_string(m);
      return out;
    }
    case GroupKind::dihedral:
      return "D" + std::to_string(moduli_[0]);
    case GroupKind::symmetric:
      return "S" + std::to_string(moduli_[0]);
  }
  return {};
}

std::string FiniteGroup::element_name(int a) const {
  check(a);
  switch (kind_) {
    case GroupKind::cyclic:
      return std::to_string(a);
    case GroupKind::abelian: {
      std::string out = "(";
      int place = order_;
      for (std::size_t i = 0; i < moduli_.size(); ++i) {
        place /= moduli_[i];
        if (i) out += ',';
        out += std::to_string(a / place % moduli_[i]);
      }
      return out + ")";
    }
    case GroupKind::dihedral: {
      const int n = moduli_[0];
      return (a >= n ? "s" : "r") + std::to_string(a % n);
    }
    case GroupKind::symmetric: {
      std::string out = "[";
      const std::vector<int> p = unrank(a, moduli_[0]);
      for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
      return out + "]";
    }
  }
  return {};
}

int FiniteGroup::parse_element(std::string_view text) const {
  auto list = [&](char open, char close) {
    if (text.size() < 2 || text.front() != open || text.back() != close)
      throw ParseError("malformed element '" + std::string(text) + "' for " + name());
    std::vector<int> out;
    std::string_view body = text.substr(1, text.size() - 2);
    std::size_t start = 0;
    while (start <= body.size()) {
      const std::size_t end = std::min(body.find(',', start), body.size());
      out.push_back(parse_int(body.substr(start, end - start), "element coordinate"));
      start = end + 1;
    }
    return out;
  };
  switch (kind_) {
    case GroupKind::cyclic:
      return mod(parse_int(text, "element"), order_);
    case GroupKind::abelian: {
      const std::vector<int> coords = list('(', ')');
      if (coords.size() != moduli_.size())
        throw ParseError("element '" + std::string(text) + "' has wrong arity for " + name());
      int out = 0;
      for (std::size_t i = 0; i < coords.size(); ++i) out = out * moduli_[i] + mod(coords[i], moduli_[i]);
      return out;
    }
    case GroupKind::dihedral: {
      const int n = moduli_[0];
      if (text.empty() || (text.front() != 'r' && text.front() != 's'))
        throw ParseError("dihedral element must be r<k> or s<k>");
      const int k = mod(parse_int(text.substr(1), "rotation"), n);
      return (text.front() == 's' ? n : 0) + k;
    }
    case GroupKind::symmetric: {
      std::vector<int> p = list('[', ']');
      std::vector<int> sorted = p;
      std::sort(sorted.begin(), sorted.end());
      for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
        if (sorted[i] != i || sorted.size() != static_cast<std::size_t>(moduli_[0]))
          throw ParseError("'" + std::string(text) + "' is not a permutation in " + name());
      return rank_of(p);
    }
  }
  return 0;
}

int FiniteGroup::element(std::initializer_list<int> coords) const {
  if (kind_ != GroupKind::cyclic && kind_ != GroupKind::abelian)
    throw InvalidArgument("coordinates only address abelian groups");
  if (coords.size() != moduli_.size()) throw InvalidArgument("wrong number of coordinates");
  int out = 0;
  std::size_t i = 0;
  for (int c : coords) {
    out = out * moduli_[i] + mod(c, moduli_[i]);
    ++i;
  }
  return out;
}

ConnectionSet::ConnectionSet(const FiniteGroup& group, std::vector<int> elements)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (int s : elements_) {
    if (s < 0 || s >= group.order()) throw InvalidArgument("connection element out of range");
    if (s == 0) throw InvalidArgument("connection set contains the identity");
    if (!std::binary_search(elements_.begin(), elements_.end(), group.inverse(s)))
      throw InvalidArgument("connection set is not inverse-closed: missing inverse of " +
                            group.element_name(s));
  }
}

ConnectionSet ConnectionSet::symmetric_closure(const FiniteGroup& group, std::vector<int> elements) {
  const std::size_t k = elements.size();
  for (std::size_t i = 0; i < k; ++i) elements.push_back(group.inverse(elements[i]));
  return ConnectionSet(group, std::move(elements));
}

Graph cayley(const FiniteGroup& group, const ConnectionSet& s) {
  const int n = group.order();
  if (n > kMaxVertices) throw CapacityExceeded("Cayley graph order exceeds vertex cap");
  std::vector<Edge> edges;
  for (int x = 0; x < n; ++x)
    for (int e : s.elements()) {
      const int y = group.multiply(x, e);
      if (x < y) edges.emplace_back(x, y);
    }
  return Graph::from_edges(n, edges);
}

}  // namespace strongclique
