#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "strongclique/cliques.hpp"
#include "strongclique/errors.hpp"
#include "strongclique/generators.hpp"
#include "strongclique/graph_id.hpp"
#include "strongclique/graph_io.hpp"
#include "strongclique/groups.hpp"
#include "strongclique/strong.hpp"
#include "strongclique/verify.hpp"

using namespace strongclique;

namespace {

constexpr int kUsage = 2;

int to_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw InvalidArgument("expected an integer, got '" + s + "'");
  return v;
}

Graph generate(const std::string& family, const std::vector<std::string>& p) {
  auto need = [&](std::size_t k) {
    if (p.size() != k)
      throw InvalidArgument(family + " takes " + std::to_string(k) + " parameter(s)");
  };
  if (family == "complete") return need(1), complete_graph(to_int(p[0]));
  if (family == "cycle") return need(1), cycle_graph(to_int(p[0]));
  if (family == "path") return need(1), path_graph(to_int(p[0]));
  if (family == "empty") return need(1), empty_graph(to_int(p[0]));
  if (family == "bipartite") return need(2), complete_bipartite(to_int(p[0]), to_int(p[1]));
  if (family == "petersen") return need(0), petersen_graph();
  if (family == "gp") return need(2), generalized_petersen(to_int(p[0]), to_int(p[1]));
  if (family == "local") return need(1), local_pattern(to_int(p[0]));
  if (family == "h") return need(1), h_graph(to_int(p[0]));
  if (family == "johnson") return need(3), gen_johnson(to_int(p[0]), to_int(p[1]), to_int(p[2]));
  if (family == "l1") {
    need(2);
    if (p[0].size() != 1 || p[0][0] < 'a' || p[0][0] > 'd')
      throw InvalidArgument("l1 family must be one of a, b, c, d");
    return family_l1(static_cast<L1Family>(p[0][0] - 'a'), to_int(p[1]));
  }
  if (family == "cayley") {
    if (p.empty()) throw InvalidArgument("cayley takes a group and connection set elements");
    const FiniteGroup group = FiniteGroup::parse(p[0]);
    std::vector<int> elements;
    for (std::size_t i = 1; i < p.size(); ++i) elements.push_back(group.parse_element(p[i]));
    return cayley(group, ConnectionSet(group, std::move(elements)));
  }
  if (family == "named") return need(1), build_graph(p[0]);
  throw InvalidArgument("unknown family '" + family + "'");
}

Graph load(const std::string& path) {
  if (path == "-") return read_graph(std::cin);
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_graph(in);
}

nlohmann::ordered_json members(const VertexSet& s) {
  return std::vector<int>(s.begin(), s.end());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strong cliques in vertex-transitive graphs"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Write a graph from a named family");
  std::string family;
  std::vector<std::string> params;
  std::string format = "graph6";
  bool take_complement = false;
  gen->add_option("family", family,
                  "complete|cycle|path|empty|bipartite|petersen|gp|local|h|johnson|l1|cayley|named")
      ->required();
  gen->add_option("params", params, "Family parameters");
  gen->add_option("--format", format)->check(CLI::IsMember({"graph6", "dimacs"}));
  gen->add_flag("--complement", take_complement, "Emit the complement");

  auto* analyze_cmd = app.add_subcommand("analyze", "Print invariants of a graph (graph6 or DIMACS)");
  std::string graph_file;
  bool strong = false;
  analyze_cmd->add_option("graphfile", graph_file, "Input file, or - for stdin")->required();
  analyze_cmd->add_flag("--strong", strong, "One JSON line per maximal clique with its verdict");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  std::optional<int> corpus_max;
  std::string out_path;
  verify->add_option("suite", suite, "Suite id, or all")->required();
  verify->add_option("--corpus-max", corpus_max, "Largest corpus graph order");
  verify->add_option("--out", out_path, "Write JSON-lines reports here instead of stdout");

  auto* corpus_cmd = app.add_subcommand("corpus", "List the deduplicated corpus");
  int corpus_valency = 3;
  int corpus_order = 20;
  corpus_cmd->add_option("--valency", corpus_valency)->required();
  corpus_cmd->add_option("--max-order", corpus_order)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen) {
      Graph g = generate(family, params);
      if (take_complement) g = complement(g);
      std::cout << (format == "dimacs" ? to_dimacs(g) : to_graph6(g) + "\n");
      return 0;
    }
    if (*analyze_cmd) {
      const Graph g = load(graph_file);
      if (!strong) {
        std::cout << to_json_line(strongclique::analyze(graph_file, g)) << '\n';
        return 0;
      }
      for (const auto& c : maximal_cliques(g)) {
        const StrongVerdict v = is_strong_clique(g, c);
        nlohmann::ordered_json j;
        j["clique"] = members(c);
        j["strong"] = v.is_strong;
        j["witness"] = v.witness ? members(*v.witness) : nlohmann::ordered_json(nullptr);
        std::cout << j.dump() << '\n';
      }
      return 0;
    }
    if (*verify) {
      if (suite != "all" && std::find(suite_ids().begin(), suite_ids().end(), suite) == suite_ids().end()) {
        std::cerr << "unknown suite '" << suite << "'; known: all";
        for (const auto& id : suite_ids()) std::cerr << ' ' << id;
        std::cerr << '\n';
        return kUsage;
      }
      const SuiteResult result = verify_theorem(suite, corpus_max);
      if (out_path.empty()) {
        report_emit(result.reports, std::cout);
      } else {
        report_emit(result.reports, out_path);
      }
      for (const auto& n : result.notes) std::cerr << "note: " << n << '\n';
      for (const auto& f : result.failures) std::cerr << "FAIL " << f << '\n';
      std::cerr << result.suite << ": " << (result.passed ? "pass" : "FAIL") << " ("
                << result.reports.size() << " reports)\n";
      return result.passed ? 0 : 1;
    }
    if (*corpus_cmd) {
      CorpusSpec spec;
      spec.valencies = {corpus_valency};
      spec.max_order = corpus_order;
      for (const auto& c : build_corpus(spec)) std::cout << c.id << '\t' << to_graph6(c.graph) << '\n';
      return 0;
    }
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
