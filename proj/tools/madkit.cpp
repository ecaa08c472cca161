// madkit: exact maximum average degree and mad-lowering decompositions.
//
// Exit codes: 0 success, 1 usage or parse error, 2 verification failure,
// 3 size-guard violation.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "madkit/madkit.hpp"

namespace {

using madkit::Graph;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitGuard = 3;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Text rendering of a label list; long sets are cut (the JSON document has them in full).
std::string joinLabels(const json& labels, std::size_t limit = 64) {
  std::string out;
  std::size_t shown = 0;
  for (const auto& l : labels) {
    if (shown == limit) {
      out += " ... (" + std::to_string(labels.size() - limit) + " more)";
      break;
    }
    if (!out.empty()) out += ' ';
    out += l.get<std::string>();
    ++shown;
  }
  return "{" + out + "}";
}

void emitJson(const std::string& target, json doc, const Stopwatch& clock) {
  if (target.empty()) return;
  doc["timing"] = {{"seconds", clock.seconds()}};
  if (target == "-") {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  std::ofstream out(target);
  if (!out) throw madkit::ParseError("cannot write '" + target + "'");
  out << doc.dump(2) << '\n';
}

json baseDocument(const std::string& command, const Graph& g) {
  return {{"schema", madkit::kResultSchema}, {"command", command}, {"graph", madkit::graphStats(g)}};
}

int runMad(const std::string& file, bool withWitness, const std::string& jsonOut) {
  Stopwatch clock;
  Graph g = madkit::readEdgeListFile(file);
  auto res = madkit::madExact(g);
  std::cout << res.value << '\n';
  json doc = baseDocument(withWitness ? "densest" : "mad", g);
  doc["mad"] = res.value.toString();
  if (withWitness) {
    if (g.edgeCount() == 0) throw std::invalid_argument("densest subgraph needs at least one edge");
    auto labels = madkit::labelsOf(g, res.witness);
    std::cout << joinLabels(labels) << '\n';
    doc["witness"] = labels;
  }
  emitJson(jsonOut, doc, clock);
  return kExitOk;
}

void printLevel(const Graph& g, const madkit::Decomposition& d, std::size_t level) {
  const auto& r = d.report;
  std::cout << "level " << level << " (k=" << d.k << "): |V|=" << g.vertexCount() << " |S|=" << d.selected.size()
            << '\n';
  std::cout << "  S         = " << joinLabels(madkit::labelsOf(g, d.selected)) << '\n';
  std::cout << "  remainder = " << joinLabels(madkit::labelsOf(g, d.remainder())) << '\n';
  std::cout << "  degeneracy(G[S]) = " << r.degeneracyOfS << " (need <= " << d.k - 1 << ")\n";
  std::cout << "  mad(G) = " << r.madGraph << ", mad(G-S) = " << r.madRemainder << " (need <= "
            << (r.madGraph - madkit::Rational(d.k)) << ")\n";
  if (r.independent) std::cout << "  independent: " << (*r.independent ? "yes" : "no") << '\n';
  if (r.forest) std::cout << "  forest: " << (*r.forest ? "yes" : "no") << '\n';
  std::cout << "  verification: " << (r.passed ? "PASS" : "FAIL") << '\n';
  for (const auto& f : r.failures) std::cout << "    " << f << '\n';
}

int runDecompose(const std::string& command, const std::string& file, int k, int levels, const std::string& jsonOut) {
  Stopwatch clock;
  if (k < 1) throw CLI::ValidationError("--k", "must be at least 1");
  if (levels < 1) throw CLI::ValidationError("--levels", "must be at least 1");
  Graph g = madkit::readEdgeListFile(file);
  json doc = baseDocument(command, g);
  doc["k"] = k;
  doc["levels"] = json::array();
  json parts = json::array();

  bool passed = true;
  Graph current = g;
  for (int level = 1; level <= levels; ++level) {
    madkit::Decomposition d = madkit::decomposeByK(current, k);
    printLevel(current, d, static_cast<std::size_t>(level));
    passed = passed && d.report.passed;
    doc["levels"].push_back(madkit::toJson(current, d));
    parts.push_back(madkit::labelsOf(current, d.selected));
    current = madkit::inducedSubgraph(current, d.remainder()).graph;
    if (current.vertexCount() == 0 && level < levels) {
      std::cout << "remainder empty after level " << level << '\n';
      break;
    }
  }
  parts.push_back(madkit::labelsOf(current, madkit::VertexSet::all(current.vertexCount())));
  doc["parts"] = parts;
  doc["passed"] = passed;
  emitJson(jsonOut, doc, clock);
  return passed ? kExitOk : kExitVerification;
}

int runOracle(const std::string& file) {
  Graph g = madkit::readEdgeListFile(file);
  std::cout << madkit::bruteForceMad(g) << '\n';
  return kExitOk;
}

int runConjecture(const std::string& file, const std::string& c1, const std::string& c2, const std::string& findings) {
  madkit::ConjectureQuery q{madkit::readEdgeListFile(file), madkit::Rational::parse(c1), madkit::Rational::parse(c2)};
  auto outcome = madkit::conjectureSearch(q);
  std::cout << "mad = " << outcome.mad << ", c1 + c2 = " << (q.c1 + q.c2)
            << (outcome.hypothesisHolds ? "" : " (hypothesis mad < c1 + c2 does not hold)") << '\n';
  std::cout << "outcome: " << madkit::toString(outcome.status) << '\n';
  if (outcome.status == madkit::ConjectureStatus::Witness) {
    std::cout << "A = " << joinLabels(madkit::labelsOf(q.graph, outcome.a)) << '\n';
    std::cout << "B = " << joinLabels(madkit::labelsOf(q.graph, outcome.b)) << '\n';
    return kExitOk;
  }
  std::ofstream out(findings, std::ios::app);
  if (!out) throw madkit::ParseError("cannot write findings file '" + findings + "'");
  out << madkit::findingRecord(q, outcome).dump() << '\n';
  std::cout << "recorded in " << findings << '\n';
  return kExitOk;
}

int runVerify(const std::string& file, int k, const std::string& setFile) {
  if (k < 1) throw CLI::ValidationError("--k", "must be at least 1");
  Graph g = madkit::readEdgeListFile(file);
  std::ifstream in(setFile);
  if (!in) throw madkit::ParseError("cannot open '" + setFile + "'");
  madkit::Decomposition d;
  d.k = k;
  d.selected = madkit::parseVertexSet(g, in);
  d.report = madkit::verifyDecomposition(g, d);
  printLevel(g, d, 1);
  return d.report.passed ? kExitOk : kExitVerification;
}

int runGen(const std::string& kind, const std::vector<std::size_t>& params, std::uint64_t seed) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw CLI::ValidationError("gen " + kind, "expects " + std::to_string(count) + " parameter(s)");
  };
  Graph g;
  if (kind == "gnm") {
    need(2);
    g = madkit::gen::gnm(params[0], params[1], seed);
  } else if (kind == "cycle") {
    need(1);
    g = madkit::gen::cycle(params[0]);
  } else if (kind == "complete") {
    need(1);
    g = madkit::gen::complete(params[0]);
  } else if (kind == "grid") {
    need(2);
    g = madkit::gen::grid(params[0], params[1]);
  } else if (kind == "tree") {
    need(1);
    g = madkit::gen::tree(params[0], seed);
  } else {
    throw CLI::ValidationError("gen", "unknown kind '" + kind + "'");
  }
  madkit::printEdgeList(g, std::cout);
  return kExitOk;
}

int runBatch(const std::string& dir, const std::string& kSpec, const std::string& out) {
  auto spec = madkit::KSpec::parse(kSpec);
  auto result = madkit::runBatch(dir, spec);
  if (out.empty() || out == "-") {
    madkit::writeBatchCsv(result, std::cout);
  } else {
    std::ofstream file(out);
    if (!file) throw madkit::ParseError("cannot write '" + out + "'");
    madkit::writeBatchCsv(result, file);
  }
  if (result.parseErrors) return kExitUsage;
  if (result.verificationFailures) return kExitVerification;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact maximum average degree and mad-lowering vertex decompositions"};
  app.require_subcommand(1);

  std::string file, jsonOut, setFile, c1, c2, findings = "madkit-findings.jsonl", kind, dir, kSpec = "1", csvOut;
  int k = 1, levels = 1;
  std::uint64_t seed = 1;
  std::vector<std::size_t> params;

  auto* mad = app.add_subcommand("mad", "print mad(G) as an exact fraction");
  mad->add_option("file", file, "edge list")->required();
  mad->add_option("--json", jsonOut, "write a JSON result document ('-' for stdout)");

  auto* densest = app.add_subcommand("densest", "print mad(G) and a vertex set attaining it");
  densest->add_option("file", file, "edge list")->required();
  densest->add_option("--json", jsonOut, "write a JSON result document ('-' for stdout)");

  auto* decompose = app.add_subcommand("decompose", "find S with G[S] (k-1)-degenerate and mad(G-S) <= mad(G)-k");
  decompose->add_option("file", file, "edge list")->required();
  decompose->add_option("--k", k, "positive integer k")->required();
  decompose->add_option("--levels", levels, "apply repeatedly to the remainder");
  decompose->add_option("--json", jsonOut, "write a JSON result document ('-' for stdout)");

  auto* indep = app.add_subcommand("independent-set", "independent I with mad(G-I) <= mad(G)-1");
  indep->add_option("file", file, "edge list")->required();
  indep->add_option("--json", jsonOut, "write a JSON result document ('-' for stdout)");

  auto* forest = app.add_subcommand("forest", "induced forest F with mad(G-F) <= mad(G)-2");
  forest->add_option("file", file, "edge list")->required();
  forest->add_option("--json", jsonOut, "write a JSON result document ('-' for stdout)");

  auto* oracle = app.add_subcommand("oracle", "brute-force mad (at most 20 vertices)");
  oracle->add_option("file", file, "edge list")->required();

  auto* conjecture = app.add_subcommand("conjecture", "search A+B with mad(G[A]) < c1, mad(G[B]) < c2 (<= 16 vertices)");
  conjecture->add_option("file", file, "edge list")->required();
  conjecture->add_option("--c1", c1, "p/q")->required();
  conjecture->add_option("--c2", c2, "p/q")->required();
  conjecture->add_option("--findings", findings, "JSON-lines file receiving unsuccessful searches");

  auto* verify = app.add_subcommand("verify", "check an externally supplied set S");
  verify->add_option("file", file, "edge list")->required();
  verify->add_option("--k", k, "positive integer k")->required();
  verify->add_option("--set", setFile, "file with the labels of S")->required();

  auto* gen = app.add_subcommand("gen", "print a generated graph: gnm N M | cycle N | complete N | grid R C | tree N");
  gen->add_option("kind", kind, "gnm, cycle, complete, grid or tree")->required();
  gen->add_option("params", params, "size parameters");
  gen->add_option("--seed", seed, "random seed");

  auto* batch = app.add_subcommand("batch", "decompose and verify every edge list of a directory");
  batch->add_option("dir", dir, "directory of edge lists")->required();
  batch->add_option("--k", kSpec, "k values: 1 | 1,2 | 1-3 | all");
  batch->add_option("--out", csvOut, "CSV report path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (mad->parsed()) return runMad(file, false, jsonOut);
    if (densest->parsed()) return runMad(file, true, jsonOut);
    if (decompose->parsed()) return runDecompose("decompose", file, k, levels, jsonOut);
    if (indep->parsed()) return runDecompose("independent-set", file, 1, 1, jsonOut);
    if (forest->parsed()) return runDecompose("forest", file, 2, 1, jsonOut);
    if (oracle->parsed()) return runOracle(file);
    if (conjecture->parsed()) return runConjecture(file, c1, c2, findings);
    if (verify->parsed()) return runVerify(file, k, setFile);
    if (gen->parsed()) return runGen(kind, params, seed);
    if (batch->parsed()) return runBatch(dir, kSpec, csvOut);
  } catch (const CLI::Error& e) {
    std::cerr << "madkit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const madkit::GuardViolation& e) {
    std::cerr << "madkit: " << e.what() << '\n';
    return kExitGuard;
  } catch (const madkit::ContractViolation& e) {
    std::cerr << "madkit: internal check failed: " << e.what() << '\n';
    return kExitVerification;
  } catch (const std::exception& e) {
    std::cerr << "madkit: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
