#include "strongclique/verify.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "strongclique/cliques.hpp"
#include "strongclique/errors.hpp"
#include "strongclique/generators.hpp"
#include "strongclique/graph_id.hpp"
#include "strongclique/graph_io.hpp"
#include "strongclique/groups.hpp"
#include "strongclique/perm_group.hpp"
#include "strongclique/strong.hpp"

namespace strongclique {

namespace {

using Json = nlohmann::ordered_json;

template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// ---------------------------------------------------------------- corpus

std::string cay(const FiniteGroup& g, std::vector<int> elements) {
  return cayley_id(g, ConnectionSet(g, std::move(elements)));
}

// Z_{3k} with {±1, ±k}.
std::string triangle_circulant(int k) {
  return cay(FiniteGroup::cyclic(3 * k), {1, 3 * k - 1, k, 2 * k});
}

std::vector<std::string> named_ids() {
  std::vector<std::string> ids;
  for (int n = 2; n <= 8; ++n) ids.push_back("K" + std::to_string(n));
  for (int m = 2; m <= 6; ++m) ids.push_back("K" + std::to_string(m) + "," + std::to_string(m));
  for (std::string id : {"co(C6)", "Petersen", "GP(8,3)", "GP(10,2)", "GP(10,3)", "GP(12,5)",
                         "K3[2K1]", "L(K3,3)", "L(K4)", "co(C8)", "C4[K2]", "K5xK2", "K3xK4",
                         "Cay(Z12;1,4,6,8,11)"})
    ids.push_back(id);
  for (int n = 2; n <= 6; ++n) ids.push_back("H" + std::to_string(n));
  for (int k = 2; k <= 5; ++k) ids.push_back(triangle_circulant(k));
  for (int n = 3; n <= 7; ++n) ids.push_back("C3xC" + std::to_string(n));
  return ids;
}

std::vector<FiniteGroup> groups_of_order(int n, const CorpusSpec& spec) {
  std::vector<FiniteGroup> out;
  if (spec.cyclic) out.push_back(FiniteGroup::cyclic(n));
  if (spec.abelian)
    for (int a = 2; a * a <= n; ++a)
      if (n % a == 0 && (n / a) % a == 0) out.push_back(FiniteGroup::abelian({a, n / a}));
  if (spec.dihedral && n % 2 == 0 && n / 2 >= 3) out.push_back(FiniteGroup::dihedral(n / 2));
  return out;
}

// Inverse-closed, identity-free subsets of the given size, as unions of
// inverse classes {s, s^-1} taken in increasing order.
std::vector<std::vector<int>> connection_sets(const FiniteGroup& g, int size) {
  std::vector<std::vector<int>> classes;
  for (int s = 1; s < g.order(); ++s) {
    const int inv = g.inverse(s);
    if (s < inv) classes.push_back({s, inv});
    if (s == inv) classes.push_back({s});
  }
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(std::size_t, int)> pick = [&](std::size_t from, int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < classes.size(); ++i) {
      const int k = static_cast<int>(classes[i].size());
      if (k > left) continue;
      cur.insert(cur.end(), classes[i].begin(), classes[i].end());
      pick(i + 1, left - k);
      cur.resize(cur.size() - static_cast<std::size_t>(k));
    }
  };
  pick(0, size);
  return out;
}

// Isomorphism-invariant fingerprint: order, size and the sorted per-vertex
// (degree, triangles, distance profile) records.
std::vector<int> fingerprint(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> rows;
  for (int v = 0; v < n; ++v) {
    std::vector<int> row{g.degree(v)};
    int triangles = 0;
    for (Vertex u : g.neighbors(v)) triangles += g.neighbor_bits(v).count_and(g.neighbor_bits(u));
    row.push_back(triangles / 2);
    VertexBits seen;
    seen.set(v);
    VertexBits frontier = seen;
    while (frontier.any()) {
      VertexBits next;
      frontier.for_each([&](int x) { next |= g.neighbor_bits(x); });
      next.subtract(seen);
      seen |= next;
      row.push_back(next.count());
      frontier = next;
    }
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());
  std::vector<int> out{n, static_cast<int>(g.edge_count())};
  for (const auto& r : rows) {
    out.push_back(-1);
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

class IsoFilter {
 public:
  /// True if g is new up to isomorphism (and records it).
  bool insert(const Graph& g) {
    auto& bucket = buckets_[fingerprint(g)];
    for (const Graph& h : bucket)
      if (are_isomorphic(h, g, Symmetry::vertex_transitive)) return false;
    bucket.push_back(g);
    return true;
  }

 private:
  std::map<std::vector<int>, std::vector<Graph>> buckets_;
};

bool wanted_valency(const CorpusSpec& spec, const Graph& g) {
  const auto val = valency(g);
  if (!val) return false;
  return spec.valencies.empty() ||
         std::find(spec.valencies.begin(), spec.valencies.end(), *val) != spec.valencies.end();
}

// ---------------------------------------------------------------- reports

Json set_json(const VertexSet& s) { return Json(std::vector<int>(s.begin(), s.end())); }

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

// Analyses are pure functions of (id, graph); suites share them.
class ReportCache {
 public:
  std::optional<PropertyReport> find(const std::string& key) {
    std::lock_guard lock(mutex_);
    auto it = reports_.find(key);
    if (it == reports_.end()) return std::nullopt;
    return it->second;
  }
  void store(const std::string& key, const PropertyReport& r) {
    std::lock_guard lock(mutex_);
    reports_.emplace(key, r);
  }

 private:
  std::mutex mutex_;
  std::map<std::string, PropertyReport> reports_;
};

ReportCache& report_cache() {
  static ReportCache cache;
  return cache;
}

std::vector<PropertyReport> cached_analyses(const std::vector<CorpusGraph>& graphs) {
  std::vector<PropertyReport> out(graphs.size());
  parallel_for(graphs.size(), 0, [&](std::size_t i) {
    const std::string key = graphs[i].id + "\n" + to_graph6(graphs[i].graph);
    if (auto hit = report_cache().find(key)) {
      out[i] = std::move(*hit);
      return;
    }
    out[i] = analyze(graphs[i].id, graphs[i].graph);
    report_cache().store(key, out[i]);
  });
  return out;
}

// ---------------------------------------------------------------- suites

class Suite {
 public:
  explicit Suite(std::string id) { result_.suite = std::move(id); }

  bool check(bool ok, const std::string& what, const Graph* g = nullptr) {
    if (!ok) {
      result_.passed = false;
      std::string line = what;
      if (g) line += " [graph6 " + to_graph6(*g) + "]";
      result_.failures.push_back(std::move(line));
    }
    return ok;
  }
  void note(std::string text) { result_.notes.push_back(std::move(text)); }
  void add_reports(std::vector<PropertyReport> reports) {
    for (auto& r : reports) result_.reports.push_back(std::move(r));
  }

  SuiteResult finish() {
    auto& rs = result_.reports;
    std::sort(rs.begin(), rs.end(), [](const PropertyReport& a, const PropertyReport& b) {
      return std::tie(a.n, a.graph_id) < std::tie(b.n, b.graph_id);
    });
    rs.erase(std::unique(rs.begin(), rs.end(),
                         [](const PropertyReport& a, const PropertyReport& b) {
                           return a.n == b.n && a.graph_id == b.graph_id;
                         }),
             rs.end());
    return std::move(result_);
  }

 private:
  SuiteResult result_;
};

CorpusGraph named(const std::string& id) { return {id, build_graph(id)}; }

std::vector<CorpusGraph> corpus_for(std::vector<int> valencies, int max_order) {
  CorpusSpec spec;
  spec.valencies = std::move(valencies);
  spec.max_order = max_order;
  return build_corpus(spec);
}

const std::vector<int> kUpToFive{1, 2, 3, 4, 5};

std::optional<std::string> match_any(const Graph& g, const std::vector<CorpusGraph>& list) {
  for (const auto& c : list)
    if (are_isomorphic(c.graph, g, Symmetry::vertex_transitive)) return c.id;
  return std::nullopt;
}

std::string str(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

SuiteResult suite_johnson_cis(std::optional<int>) {
  Suite s("johnson-cis");
  const CorpusGraph j = named("J(7,3,1)");
  const Graph& g = j.graph;
  const PropertyReport r = cached_analyses({j}).front();
  s.check(r.n == 35, "J(7,3,1) should have 35 vertices", &g);
  s.check(r.valency == 18, "J(7,3,1) should be 18-regular", &g);
  s.check(r.vertex_transitive, "J(7,3,1) should be vertex-transitive", &g);
  const CliqueList cliques = maximal_cliques(g);
  s.check(cliques.size() == 30, "expected 30 maximal cliques, got " + std::to_string(cliques.size()),
          &g);
  s.check(std::all_of(cliques.begin(), cliques.end(), [](const VertexSet& c) { return c.size() == 7; }),
          "every maximal clique should have size 7", &g);
  s.check(mis_size_range(g) == std::pair{5, 5}, "every maximal independent set should have size 5",
          &g);
  for (auto [u, v] : g.edges()) {
    const auto holding = std::count_if(cliques.begin(), cliques.end(), [&](const VertexSet& c) {
      return c.contains(u) && c.contains(v);
    });
    if (!s.check(holding == 2, "edge " + std::to_string(u) + "-" + std::to_string(v) + " lies in " +
                                   std::to_string(holding) + " maximal cliques",
                 &g))
      break;
  }
  s.check(r.cis, "J(7,3,1) should be CIS", &g);
  s.check(!r.localizable, "J(7,3,1) should not be localizable", &g);
  const Graph q = clique_graph(cliques);
  s.check(q.order() == 30, "clique graph should have 30 vertices", &q);
  s.check(is_vertex_transitive(q), "clique graph should be vertex-transitive", &q);
  s.check(clique_number(q) >= 7, "clique graph should have clique number at least 7", &q);
  s.check(independence_number(q) <= 4, "clique graph should have independence number at most 4", &q);
  s.add_reports({r});
  return s.finish();
}

SuiteResult suite_strong_criterion(std::optional<int> max) {
  Suite s("strong-criterion");
  const auto corpus = corpus_for(kUpToFive, max.value_or(24));
  s.check(corpus.size() >= 40, "corpus has only " + std::to_string(corpus.size()) + " graphs");
  std::vector<std::string> problems(corpus.size());
  std::vector<std::size_t> checked(corpus.size(), 0);
  parallel_for(corpus.size(), 0, [&](std::size_t i) {
    const Graph& g = corpus[i].graph;
    for (const auto& c : maximal_cliques(g)) {
      ++checked[i];
      if (is_strong_clique(g, c).is_strong != vt_strong_criterion(g, c)) {
        problems[i] = corpus[i].id + ": strength and cardinality criterion disagree on " + str(c);
        return;
      }
    }
  });
  std::size_t total = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    total += checked[i];
    s.check(problems[i].empty(), problems[i], &corpus[i].graph);
  }
  s.note(std::to_string(corpus.size()) + " graphs, " + std::to_string(total) + " maximal cliques");
  s.add_reports(cached_analyses(corpus));
  return s.finish();
}

// Graphs with a strong clique must match `recognized`; everything in
// `required` must be in the corpus, admit a strong clique and be localizable.
void classification(Suite& s, const std::vector<CorpusGraph>& corpus,
                    const std::vector<PropertyReport>& reports,
                    const std::vector<CorpusGraph>& recognized,
                    const std::vector<CorpusGraph>& required, bool required_in_corpus) {
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!reports[i].has_strong_clique) continue;
    s.check(match_any(corpus[i].graph, recognized).has_value(),
            corpus[i].id + " admits a strong clique but is not on the list", &corpus[i].graph);
  }
  for (const auto& want : required) {
    const PropertyReport r = cached_analyses({want}).front();
    s.check(r.has_strong_clique, want.id + " should admit a strong clique", &want.graph);
    s.check(r.localizable, want.id + " should be localizable", &want.graph);
    if (required_in_corpus)
      s.check(match_any(want.graph, corpus).has_value(), want.id + " is missing from the corpus",
              &want.graph);
  }
}

SuiteResult suite_cubic(std::optional<int> max) {
  Suite s("cubic");
  const auto corpus = corpus_for({3}, max.value_or(20));
  const auto reports = cached_analyses(corpus);
  const std::vector<CorpusGraph> list{named("K4"), named("K3,3"), named("co(C6)")};
  classification(s, corpus, reports, list, list, true);
  s.note(std::to_string(corpus.size()) + " cubic graphs");
  s.add_reports(reports);
  return s.finish();
}

SuiteResult suite_quartic(std::optional<int> max) {
  Suite s("quartic");
  const int bound = max.value_or(24);
  const auto corpus = corpus_for({4}, bound);
  const auto reports = cached_analyses(corpus);
  std::vector<CorpusGraph> required{named("K4,4"), named("K5"), named("K3[2K1]"), named("L(K3,3)")};
  for (int n = 2; n <= 6; ++n) required.push_back(named("H" + std::to_string(n)));
  for (int k = 2; k <= 5; ++k) required.push_back(named(triangle_circulant(k)));
  for (int n = 3; n <= 7; ++n) required.push_back(named("C3xC" + std::to_string(n)));
  // The infinite families, materialized up to the corpus bound.
  std::vector<CorpusGraph> recognized = required;
  for (int n = 7; 4 * n <= bound; ++n) recognized.push_back(named("H" + std::to_string(n)));
  for (int k = 6; 3 * k <= bound; ++k) recognized.push_back(named(triangle_circulant(k)));
  for (int n = 8; 3 * n <= bound; ++n) recognized.push_back(named("C3xC" + std::to_string(n)));
  classification(s, corpus, reports, recognized, required, false);
  s.note(std::to_string(corpus.size()) + " quartic graphs");
  s.add_reports(reports);
  for (const auto& r : required) s.add_reports(cached_analyses({r}));
  return s.finish();
}

bool local_graph_is(const Graph& g, const Graph& pattern) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (!are_isomorphic(local_graph(g, v), pattern)) return false;
  return true;
}

SuiteResult suite_quintic(std::optional<int> max) {
  Suite s("quintic");
  const int bound = max.value_or(24);
  const std::vector<std::pair<std::string, int>> listed{
      {"K5,5", 2}, {"Cay(Z12;1,4,6,8,11)", 3}, {"K5xK2", 5}, {"K6", 6},
      {"co(C8)", 4}, {"C4[K2]", 4},             {"K3xK4", 4}};
  std::vector<CorpusGraph> list;
  for (const auto& [id, omega] : listed) {
    const CorpusGraph c = named(id);
    const PropertyReport r = cached_analyses({c}).front();
    s.check(r.valency == 5 && r.vertex_transitive, id + " should be 5-valent vertex-transitive",
            &c.graph);
    s.check(r.has_strong_clique, id + " should admit a strong clique", &c.graph);
    s.check(r.omega == omega, id + " should have clique number " + std::to_string(omega), &c.graph);
    s.add_reports({r});
    list.push_back(c);
  }

  const auto corpus = corpus_for({5}, bound);
  const auto reports = cached_analyses(corpus);
  const Graph l1 = local_pattern(1);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!reports[i].has_strong_clique || local_graph_is(corpus[i].graph, l1)) continue;
    s.check(match_any(corpus[i].graph, list).has_value(),
            corpus[i].id + " admits a strong clique, has local graph other than K3+2K1 and is not "
                           "on the list",
            &corpus[i].graph);
  }
  s.add_reports(reports);

  const auto wide = corpus_for(kUpToFive, bound);
  const auto wide_reports = cached_analyses(wide);
  for (std::size_t i = 0; i < wide.size(); ++i)
    s.check(wide_reports[i].has_strong_clique == wide_reports[i].localizable,
            wide[i].id + ": strong clique and localizability disagree", &wide[i].graph);
  s.note(std::to_string(corpus.size()) + " quintic graphs, " + std::to_string(wide.size()) +
         " graphs of valency at most 5");
  s.add_reports(wide_reports);
  return s.finish();
}

SuiteResult suite_l1_families(std::optional<int>) {
  Suite s("l1-families");
  const Graph l1 = local_pattern(1);
  std::vector<CorpusGraph> graphs;
  for (char f : {'a', 'b', 'c', 'd'})
    for (int n = 4; n <= 6; ++n) graphs.push_back(named(std::string("L1") + f + "(" + std::to_string(n) + ")"));
  const auto reports = cached_analyses(graphs);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i].graph;
    const PropertyReport& r = reports[i];
    s.check(r.valency == 5 && r.vertex_transitive, graphs[i].id + " should be 5-valent and vertex-transitive", &g);
    s.check(local_graph_is(g, l1), graphs[i].id + " should have local graph K3+2K1", &g);
    s.check(r.witnesses.strong_clique && r.witnesses.strong_clique->size() == 4,
            graphs[i].id + " should admit a strong clique of size 4", &g);
    s.check(r.localizable, graphs[i].id + " should be localizable", &g);
  }
  s.add_reports(reports);
  return s.finish();
}

// Single triangle C, at least one edge outside C, every edge meeting C.
bool edges_all_meet_triangle(const Graph& x) {
  const CliqueList cliques = maximal_cliques(x);
  std::vector<VertexSet> triangles;
  for (const auto& c : cliques)
    if (c.size() == 3) triangles.push_back(c);
  if (triangles.size() != 1 || clique_number(x) != 3) return false;
  const VertexSet& c = triangles.front();
  bool outside = false;
  for (auto [u, v] : x.edges()) {
    if (c.contains(u) && c.contains(v)) continue;
    outside = true;
    if (!c.contains(u) && !c.contains(v)) return false;
  }
  return outside;
}

SuiteResult suite_local_graphs(std::optional<int> max) {
  Suite s("local-graphs");
  const auto corpus = corpus_for({5}, max.value_or(24));
  const auto reports = cached_analyses(corpus);
  std::vector<int> local_index(corpus.size(), 0);
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (int k = 1; k <= 6; ++k)
      if (are_isomorphic(local_graph(corpus[i].graph, 0), local_pattern(k))) local_index[i] = k;

  std::vector<int> edge_meeting;
  for (int k = 1; k <= 6; ++k)
    if (edges_all_meet_triangle(local_pattern(k))) edge_meeting.push_back(k);
  s.check(edge_meeting == std::vector<int>{2, 3},
          "patterns whose edges all meet the triangle should be L2 and L3");

  const Graph co_c8 = build_graph("co(C8)");
  const Graph k3k4 = build_graph("K3xK4");
  bool saw_co_c8 = false;
  bool saw_k3k4 = false;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Graph& g = corpus[i].graph;
    const int k = local_index[i];
    const bool edge_case = std::find(edge_meeting.begin(), edge_meeting.end(), k) != edge_meeting.end();
    s.check(!edge_case, corpus[i].id + " has a local graph whose edges all meet its triangle", &g);
    s.check(k != 5, corpus[i].id + " has local graph L5", &g);
    if (k == 6) {
      const bool is = are_isomorphic(g, co_c8);
      saw_co_c8 |= is;
      s.check(is, corpus[i].id + " has local graph L6 but is not the complement of C8", &g);
    }
    if (k == 4 && reports[i].has_strong_clique) {
      const bool is = are_isomorphic(g, k3k4);
      saw_k3k4 |= is;
      s.check(is, corpus[i].id + " has local graph L4 and a strong clique but is not K3xK4", &g);
    }
  }
  s.check(saw_co_c8, "complement of C8 missing from the corpus");
  s.check(saw_k3k4, "K3xK4 missing from the corpus");
  s.check(local_graph_is(co_c8, local_pattern(6)), "complement of C8 should have local graph L6", &co_c8);
  s.check(local_graph_is(k3k4, local_pattern(4)), "K3xK4 should have local graph L4", &k3k4);
  s.add_reports(reports);
  return s.finish();
}

SuiteResult suite_localizable(std::optional<int>) {
  Suite s("localizable");
  for (int n = 2; n <= 6; ++n) {
    const CorpusGraph h = named("H" + std::to_string(n));
    const auto partition = is_localizable(h.graph, Symmetry::vertex_transitive);
    std::vector<VertexSet> quads;
    for (int i = 0; i < n; ++i) quads.push_back({4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3});
    s.check(partition && *partition == quads, h.id + " should split into its n quadruples", &h.graph);
    s.add_reports(cached_analyses({h}));
  }
  for (const std::string id : {"J(7,3,1)", "L(K6)"}) {
    const CorpusGraph c = named(id);
    s.check(!is_localizable(c.graph, Symmetry::vertex_transitive), id + " should not be localizable",
            &c.graph);
    s.add_reports(cached_analyses({c}));
  }
  return s.finish();
}

SuiteResult suite_dual_method(std::optional<int> max) {
  Suite s("dual-method");
  const auto corpus = corpus_for(kUpToFive, max.value_or(24));
  std::vector<std::string> problems(corpus.size());
  std::vector<std::size_t> checked(corpus.size(), 0);
  parallel_for(corpus.size(), 0, [&](std::size_t i) {
    const Graph& g = corpus[i].graph;
    for (const auto& c : maximal_cliques(g)) {
      ++checked[i];
      const StrongVerdict a = strong_by_maximal_sets(g, c);
      const StrongVerdict b = strong_by_domination(g, c);
      std::string why;
      if (a.is_strong != b.is_strong) why = "methods disagree";
      if (!a.is_strong && why.empty()) {
        const VertexSet& w = *a.witness;
        const bool maximal_independent = is_independent(g, w) && dominates(g, w, VertexSet::from_bits(g.all_vertices() - w.bits()));
        if (!maximal_independent || w.intersection_size(c) != 0) why = "method A witness invalid";
        const VertexSet& d = *b.witness;
        if (!is_independent(g, d) || d.intersection_size(c) != 0 || !dominates(g, d, c))
          why = "method B witness invalid";
      }
      if (!why.empty()) {
        problems[i] = corpus[i].id + ": " + why + " on " + str(c);
        return;
      }
    }
  });
  std::size_t total = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    total += checked[i];
    s.check(problems[i].empty(), problems[i], &corpus[i].graph);
  }
  s.note(std::to_string(corpus.size()) + " graphs, " + std::to_string(total) + " maximal cliques");
  s.add_reports(cached_analyses(corpus));
  return s.finish();
}

SuiteResult suite_structural(std::optional<int> max) {
  Suite s("structural");
  const auto corpus = corpus_for(kUpToFive, max.value_or(24));
  const auto reports = cached_analyses(corpus);
  std::size_t irreducible = 0, pairs = 0, half = 0, cis = 0, chi_checked = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Graph& g = corpus[i].graph;
    const PropertyReport& r = reports[i];
    const std::string& id = corpus[i].id;
    const CliqueList cliques = maximal_cliques(g);

    if (!is_reducible(g)) {
      ++irreducible;
      s.check(irreducible_intersection_check(g), id + ": a strong clique meets another maximal clique in |C|-1 vertices", &g);
    }

    const int m = r.valency.value_or(-1);
    bool strong_edge = false;
    for (const auto& c : cliques)
      if (c.size() == 2 && strong_by_maximal_sets(g, c).is_strong) strong_edge = true;
    const bool kmm = m > 0 && are_isomorphic(g, complete_bipartite(m, m));
    pairs += kmm;
    s.check(strong_edge == kmm, id + ": strong edge iff K_{m,m} fails", &g);

    if (r.has_strong_clique) {
      s.check(r.well_covered, id + " has a strong clique but is not well-covered", &g);
      for (const auto& c : cliques)
        if (strong_by_maximal_sets(g, c).is_strong)
          s.check(static_cast<int>(c.size()) == r.omega, id + ": strong clique " + str(c) + " is not maximum", &g);
      if (r.theta) {
        ++chi_checked;
        s.check(r.localizable == (*r.theta == r.alpha), id + ": localizable iff clique cover number equals independence number fails", &g);
      }
    }

    if (g.order() % 2 == 0 && std::any_of(cliques.begin(), cliques.end(), [&](const VertexSet& c) {
          return 2 * static_cast<int>(c.size()) == g.order();
        })) {
      ++half;
      s.check(half_order_clique_check(g), id + ": half-order clique does not give a two-clique partition", &g);
    }

    if (r.cis) {
      ++cis;
      const bool by_q = independence_number(clique_graph(cliques)) == r.alpha;
      s.check(by_q == r.localizable, id + ": clique graph criterion disagrees with localizability", &g);
    }
  }
  s.note(std::to_string(irreducible) + " irreducible, " + std::to_string(pairs) + " K_{m,m}, " +
         std::to_string(half) + " half-order, " + std::to_string(cis) + " CIS, " +
         std::to_string(chi_checked) + " colouring checks");

  for (int n : {3, 4}) {
    const CorpusGraph lk = named("L(K" + std::to_string(2 * n) + ")");
    const PropertyReport r = cached_analyses({lk}).front();
    s.check(r.has_strong_clique, lk.id + " should admit a strong clique", &lk.graph);
    s.check(r.omega * n == r.n, lk.id + " should have clique number |V|/" + std::to_string(n), &lk.graph);
    s.check(!r.localizable, lk.id + " should not be localizable", &lk.graph);
    s.add_reports({r});
  }
  const CorpusGraph j = named("J(7,3,1)");
  const PropertyReport jr = cached_analyses({j}).front();
  s.check(jr.cis && (independence_number(clique_graph(j.graph)) == jr.alpha) == jr.localizable,
          "J(7,3,1): clique graph criterion disagrees with localizability", &j.graph);
  s.add_reports({jr});
  s.add_reports(reports);
  return s.finish();
}

using SuiteFn = SuiteResult (*)(std::optional<int>);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"johnson-cis", suite_johnson_cis},   {"strong-criterion", suite_strong_criterion},
      {"cubic", suite_cubic},               {"quartic", suite_quartic},
      {"quintic", suite_quintic},           {"l1-families", suite_l1_families},
      {"local-graphs", suite_local_graphs}, {"localizable", suite_localizable},
      {"dual-method", suite_dual_method},   {"structural", suite_structural},
  };
  return table;
}

}  // namespace

std::vector<CorpusGraph> named_graphs() {
  std::vector<CorpusGraph> out;
  for (const auto& id : named_ids()) out.push_back(named(id));
  return out;
}

std::vector<CorpusGraph> build_corpus(const CorpusSpec& spec) {
  if (spec.max_order < 0 || spec.max_order > kMaxVertices)
    throw CapacityExceeded("corpus order bound outside 0.." + std::to_string(kMaxVertices));
  IsoFilter seen;
  std::vector<CorpusGraph> out;
  auto offer = [&](std::string id, Graph g) {
    if (g.order() > spec.max_order || !wanted_valency(spec, g)) return;
    if (spec.connected_only && !is_connected(g)) return;
    if (seen.insert(g)) out.push_back({std::move(id), std::move(g)});
  };
  if (spec.named)
    for (auto& c : named_graphs())
      if (is_vertex_transitive(c.graph)) offer(std::move(c.id), std::move(c.graph));

  if (spec.valencies.empty()) return out;  // Cayley enumeration needs a valency filter
  for (int n = 2; n <= spec.max_order; ++n) {
    for (const auto& group : groups_of_order(n, spec)) {
      for (int k : spec.valencies) {
        if (k <= 0 || k >= n) continue;
        for (auto& elements : connection_sets(group, k)) {
          const ConnectionSet s(group, std::move(elements));
          offer(cayley_id(group, s), cayley(group, s));
        }
      }
    }
  }
  return out;
}

PropertyReport analyze(const std::string& id, const Graph& g) {
  PropertyReport r;
  r.graph_id = id;
  r.n = g.order();
  r.valency = valency(g);
  r.vertex_transitive = is_vertex_transitive(g);
  const Symmetry sym = r.vertex_transitive ? Symmetry::vertex_transitive : Symmetry::unknown;
  r.omega = clique_number(g);
  r.alpha = independence_number(g);
  if (r.n <= kMaxColoringOrder) {
    r.chi = chromatic_number(g);
    r.theta = clique_cover_number(g);
  }
  const CliqueList cliques = maximal_cliques(g);
  r.n_max_cliques = cliques.size();
  std::size_t mis = 0;
  for_each_maximal_clique(complement(g), [&](const VertexBits&) {
    ++mis;
    return true;
  });
  r.n_mis = mis;
  r.well_covered = is_well_covered(g);
  r.co_well_covered = is_co_well_covered(g);
  r.cis = is_cis(g, sym);
  r.witnesses.strong_clique = has_strong_clique(g, sym);
  r.has_strong_clique = r.witnesses.strong_clique.has_value();
  r.witnesses.partition = is_localizable(g, sym);
  r.localizable = r.witnesses.partition.has_value();
  if (!r.cis) {
    for (const auto& c : cliques) {
      StrongVerdict v = strong_by_maximal_sets(g, c);
      if (!v.is_strong) {
        r.witnesses.non_strong = std::pair{c, std::move(*v.witness)};
        break;
      }
    }
  }
  return r;
}

std::vector<PropertyReport> analyze_all(const std::vector<CorpusGraph>& graphs, unsigned threads) {
  std::vector<PropertyReport> out(graphs.size());
  parallel_for(graphs.size(), threads,
               [&](std::size_t i) { out[i] = analyze(graphs[i].id, graphs[i].graph); });
  return out;
}

std::string to_json_line(const PropertyReport& r) {
  Json j;
  j["graph_id"] = r.graph_id;
  j["n"] = r.n;
  j["valency"] = optional_json(r.valency);
  j["omega"] = r.omega;
  j["alpha"] = r.alpha;
  j["chi"] = optional_json(r.chi);
  j["theta"] = optional_json(r.theta);
  j["n_max_cliques"] = r.n_max_cliques;
  j["n_mis"] = r.n_mis;
  j["vertex_transitive"] = r.vertex_transitive;
  j["well_covered"] = r.well_covered;
  j["co_well_covered"] = r.co_well_covered;
  j["cis"] = r.cis;
  j["has_strong_clique"] = r.has_strong_clique;
  j["localizable"] = r.localizable;
  Json w;
  w["strong_clique"] = r.witnesses.strong_clique ? set_json(*r.witnesses.strong_clique) : Json(nullptr);
  if (r.witnesses.partition) {
    Json parts = Json::array();
    for (const auto& p : *r.witnesses.partition) parts.push_back(set_json(p));
    w["partition"] = std::move(parts);
  } else {
    w["partition"] = nullptr;
  }
  if (r.witnesses.non_strong) {
    w["non_strong"] = Json{{"clique", set_json(r.witnesses.non_strong->first)},
                           {"mis", set_json(r.witnesses.non_strong->second)}};
  } else {
    w["non_strong"] = nullptr;
  }
  j["witnesses"] = std::move(w);
  return j.dump();
}

void report_emit(const std::vector<PropertyReport>& reports, std::ostream& out) {
  for (const auto& r : reports) out << to_json_line(r) << '\n';
  out.flush();
  if (!out) throw Error("failed to write reports");
}

void report_emit(const std::vector<PropertyReport>& reports, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  report_emit(reports, out);
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : suites()) out.push_back(id);
    return out;
  }();
  return ids;
}

SuiteResult verify_theorem(std::string_view suite, std::optional<int> corpus_max) {
  if (suite == "all") {
    SuiteResult all;
    all.suite = "all";
    for (const auto& [id, fn] : suites()) {
      SuiteResult r = fn(corpus_max);
      all.passed &= r.passed;
      for (auto& f : r.failures) all.failures.push_back(id + ": " + f);
      for (auto& n : r.notes) all.notes.push_back(id + ": " + n);
      for (auto& rep : r.reports) all.reports.push_back(std::move(rep));
    }
    std::sort(all.reports.begin(), all.reports.end(), [](const PropertyReport& a, const PropertyReport& b) {
      return std::tie(a.n, a.graph_id) < std::tie(b.n, b.graph_id);
    });
    all.reports.erase(std::unique(all.reports.begin(), all.reports.end(),
                                  [](const PropertyReport& a, const PropertyReport& b) {
                                    return a.n == b.n && a.graph_id == b.graph_id;
                                  }),
                      all.reports.end());
    return all;
  }
  for (const auto& [id, fn] : suites())
    if (id == suite) return fn(corpus_max);
  throw InvalidArgument("unknown suite '" + std::string(suite) + "'");
}

}  // namespace strongclique
