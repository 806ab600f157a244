// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "strongclique/cliques.hpp"
#include "strongclique/generators.hpp"
#include "strongclique/graph_id.hpp"
#include "strongclique/perm_group.hpp"
#include "strongclique/strong.hpp"
#include "strongclique/verify.hpp"

#ifndef STRONGCLIQUE_CLI
#error "STRONGCLIQUE_CLI must name the command-line binary"
#endif

using namespace strongclique;

namespace {

class Criterion {
 public:
  explicit Criterion(std::string* detail) : detail_(detail) {}
  void require(bool ok, const std::string& what) {
    if (!ok && ok_) *detail_ = what;
    ok_ = ok_ && ok;
  }
  [[nodiscard]] bool ok() const { return ok_; }

 private:
  std::string* detail_;
  bool ok_ = true;
};

void require_suite(Criterion& c, const std::string& id) {
  const SuiteResult r = verify_theorem(id);
  c.require(r.passed, id + ": " + (r.failures.empty() ? std::string("failed") : r.failures.front()));
}

bool johnson_replay(Criterion& c) {
  const Graph j = gen_johnson(7, 3, 1);
  c.require(j.order() == 35, "order");
  c.require(valency(j) == 18, "valency");
  c.require(is_vertex_transitive(j), "vertex-transitive");
  const CliqueList cliques = maximal_cliques(j);
  c.require(cliques.size() == 30, "30 maximal cliques");
  for (const auto& q : cliques) c.require(q.size() == 7, "clique size 7");
  for (const auto& s : maximal_independent_sets(j)) c.require(s.size() == 5, "MIS size 5");
  std::map<Edge, int> per_edge;
  for (const auto& q : cliques)
    for (std::size_t a = 0; a < q.size(); ++a)
      for (std::size_t b = a + 1; b < q.size(); ++b) ++per_edge[{q[a], q[b]}];
  c.require(per_edge.size() == j.edge_count(), "every edge in a maximal clique");
  for (const auto& [e, k] : per_edge) c.require(k == 2, "edge in exactly 2 maximal cliques");
  c.require(is_cis(j, Symmetry::vertex_transitive), "CIS");
  c.require(!is_localizable(j, Symmetry::vertex_transitive).has_value(), "not localizable");
  const Graph q = clique_graph(cliques);
  c.require(q.order() == 30, "clique graph order 30");
  c.require(is_vertex_transitive(q), "clique graph vertex-transitive");
  c.require(clique_number(q) >= 7, "clique graph omega >= 7");
  c.require(independence_number(q) <= 4, "clique graph alpha <= 4");
  require_suite(c, "johnson-cis");
  return c.ok();
}

bool cardinality_criterion(Criterion& c) {
  CorpusSpec spec;
  spec.valencies = {1, 2, 3, 4, 5};
  spec.max_order = 24;
  const auto corpus = build_corpus(spec);
  int vt = 0;
  for (const auto& g : corpus) {
    if (!is_vertex_transitive(g.graph)) continue;
    ++vt;
    for (const auto& q : maximal_cliques(g.graph))
      c.require(is_strong_clique(g.graph, q).is_strong == vt_strong_criterion(g.graph, q),
                g.id + ": direct test and cardinality criterion disagree");
  }
  c.require(vt >= 40, "fewer than 40 vertex-transitive graphs");
  require_suite(c, "strong-criterion");
  return c.ok();
}

bool cubic_classification(Criterion& c) {
  const SuiteResult r = verify_theorem("cubic");
  c.require(r.passed, r.failures.empty() ? "cubic suite failed" : r.failures.front());
  const std::vector<Graph> expected{complete_graph(4), complete_bipartite(3, 3),
                                    complement(cycle_graph(6))};
  std::vector<bool> found(expected.size());
  for (const auto& rep : r.reports) {
    if (rep.valency != 3 || !rep.has_strong_clique) continue;
    const Graph g = build_graph(rep.graph_id);
    bool listed = false;
    for (std::size_t i = 0; i < expected.size(); ++i)
      if (are_isomorphic(g, expected[i])) listed = found[i] = true;
    c.require(listed, rep.graph_id + " has a strong clique but is not listed");
    c.require(rep.localizable, rep.graph_id + " is not localizable");
  }
  for (bool f : found) c.require(f, "a listed cubic graph has no strong clique in the corpus");
  return c.ok();
}

bool quartic_classification(Criterion& c) {
  std::vector<std::string> ids{"K4,4", "K5", "K3[2K1]", "L(K3,3)"};
  for (int n = 2; n <= 6; ++n) ids.push_back("H" + std::to_string(n));
  for (int k = 2; k <= 5; ++k)
    ids.push_back("Cay(Z" + std::to_string(3 * k) + ";1," + std::to_string(k) + "," +
                  std::to_string(2 * k) + "," + std::to_string(3 * k - 1) + ")");
  for (int n = 3; n <= 7; ++n) ids.push_back("C3xC" + std::to_string(n));
  for (const auto& id : ids) {
    const Graph g = build_graph(id);
    c.require(valency(g) == 4, id + " is not 4-valent");
    c.require(has_strong_clique(g, Symmetry::vertex_transitive).has_value(), id + " has no strong clique");
    c.require(is_localizable(g, Symmetry::vertex_transitive).has_value(), id + " is not localizable");
  }
  require_suite(c, "quartic");
  return c.ok();
}

bool quintic_suite(Criterion& c) {
  require_suite(c, "quintic");
  require_suite(c, "l1-families");
  require_suite(c, "local-graphs");
  return c.ok();
}

bool oracle_equivalence(Criterion& c) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const double p = static_cast<double>(rng() % 1000) / 1000.0;
    const Graph g = oracle::random_graph(n, p, rng);
    c.require(maximal_cliques(g) == oracle::maximal_cliques(g),
              "maximal cliques differ on random graph " + std::to_string(trial));
  }
  require_suite(c, "dual-method");
  return c.ok();
}

bool structural(Criterion& c) {
  require_suite(c, "structural");
  return c.ok();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool determinism(Criterion& c) {
  const auto dir = std::filesystem::temp_directory_path();
  std::vector<std::string> outputs;
  for (int run = 0; run < 2; ++run) {
    const std::string path = (dir / ("strongclique_acceptance_" + std::to_string(run) + ".jsonl")).string();
    const std::string cmd =
        std::string("\"") + STRONGCLIQUE_CLI + "\" verify all --out \"" + path + "\" 2>/dev/null";
    c.require(std::system(cmd.c_str()) == 0, "verify all exited nonzero");
    outputs.push_back(slurp(path));
    std::filesystem::remove(path);
  }
  c.require(!outputs[0].empty(), "empty report");
  c.require(outputs[0] == outputs[1], "two runs differ");
  return c.ok();
}

}  // namespace

int main() {
  struct Entry {
    int number;
    const char* name;
    double budget_seconds;
    std::function<bool(Criterion&)> run;
  };
  const std::vector<Entry> entries{
      {1, "J(7,3,1) replay", 30, johnson_replay},
      {2, "cardinality criterion on vertex-transitive corpus", 300, cardinality_criterion},
      {3, "cubic classification", 120, cubic_classification},
      {4, "4-valent classification", 300, quartic_classification},
      {5, "5-valent suite", 600, quintic_suite},
      {6, "oracle equivalence", 600, oracle_equivalence},
      {7, "structural lemmas", 600, structural},
      {8, "determinism", 1200, determinism},
  };
  int failed = 0;
  for (const auto& e : entries) {
    std::string detail;
    Criterion c(&detail);
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = e.run(c);
    } catch (const std::exception& ex) {
      detail = std::string("exception: ") + ex.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs > e.budget_seconds) {
      ok = false;
      detail = "over time budget";
    }
    failed += !ok;
    std::printf("%s %d %s (%.2f s, budget %.0f s)%s%s\n", ok ? "PASS" : "FAIL", e.number, e.name, secs,
                e.budget_seconds, detail.empty() ? "" : ": ", detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
