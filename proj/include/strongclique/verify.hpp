#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "strongclique/graph.hpp"

namespace strongclique {

/// What build_corpus enumerates: connected Cayley graphs over Z_n,
/// Z_a x Z_b (a | b, a >= 2) and D_m (order 2m, m >= 3) up to max_order,
/// plus the named graphs, filtered by valency.
struct CorpusSpec {
  std::vector<int> valencies;  // empty: any valency
  int max_order = 24;
  bool cyclic = true;
  bool abelian = true;
  bool dihedral = true;
  bool named = true;
  bool connected_only = true;
};

struct CorpusGraph {
  std::string id;
  Graph graph;
};

/// Named graphs from the classification lists at small parameters.
[[nodiscard]] std::vector<CorpusGraph> named_graphs();

/// Deduplicated up to isomorphism; named graphs keep their names and come
/// first, then Cayley graphs by order, group and connection set.
[[nodiscard]] std::vector<CorpusGraph> build_corpus(const CorpusSpec& spec);

struct Witnesses {
  std::optional<VertexSet> strong_clique;
  std::optional<std::vector<VertexSet>> partition;
  /// A maximal clique and a maximal independent set missing it.
  std::optional<std::pair<VertexSet, VertexSet>> non_strong;
};

struct PropertyReport {
  std::string graph_id;
  int n = 0;
  std::optional<int> valency;
  int omega = 0;
  int alpha = 0;
  std::optional<int> chi;    // null above the exact colouring cap
  std::optional<int> theta;
  std::size_t n_max_cliques = 0;
  std::size_t n_mis = 0;
  bool vertex_transitive = false;
  bool well_covered = false;
  bool co_well_covered = false;
  bool cis = false;
  bool has_strong_clique = false;
  bool localizable = false;
  Witnesses witnesses;
};

[[nodiscard]] PropertyReport analyze(const std::string& id, const Graph& g);
/// Analyzes every graph on a worker pool; output order matches input.
[[nodiscard]] std::vector<PropertyReport> analyze_all(const std::vector<CorpusGraph>& graphs,
                                                      unsigned threads = 0);

/// One JSON object, keys in declaration order, no trailing newline.
[[nodiscard]] std::string to_json_line(const PropertyReport& r);
void report_emit(const std::vector<PropertyReport>& reports, std::ostream& out);
/// Throws Error if the file cannot be written.
void report_emit(const std::vector<PropertyReport>& reports, const std::string& path);

struct SuiteResult {
  std::string suite;
  bool passed = true;
  std::vector<std::string> failures;  // each names the offending graph in graph6
  std::vector<std::string> notes;
  std::vector<PropertyReport> reports;  // sorted by (n, graph_id)
};

/// Suite ids: johnson-cis, strong-criterion, cubic, quartic, quintic,
/// l1-families, local-graphs, localizable, dual-method, structural.
[[nodiscard]] const std::vector<std::string>& suite_ids();

/// Runs one suite; "all" runs every suite and merges the results.
/// corpus_max overrides each suite's default order bound. Classification
/// suites are falsification probes over the corpus, not proofs. Throws
/// InvalidArgument for an unknown id.
[[nodiscard]] SuiteResult verify_theorem(std::string_view suite,
                                         std::optional<int> corpus_max = std::nullopt);

}  // namespace strongclique
