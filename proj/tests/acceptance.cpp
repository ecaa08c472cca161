// Acceptance suite: one PASS/FAIL line per criterion.
//
//   madkit-acceptance          run every criterion
//   madkit-acceptance 3 4      run only criteria 3 and 4

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "madkit/madkit.hpp"

namespace fs = std::filesystem;
using namespace madkit;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string firstFailure;

  void fail(const std::string& why) {
    if (pass) firstFailure = why;
    pass = false;
  }
};

Graph randomGraph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph(n, std::move(e));
}

double uniform(std::mt19937_64& rng, double lo, double hi) { return std::uniform_real_distribution<>(lo, hi)(rng); }

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// ---- 1 ----
Outcome oracleEquivalence() {
  Outcome out;
  std::size_t checked = 0;
  const std::size_t pairs = 15;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    Graph g = gen::fromEdgeMask(6, mask);
    if (madExact(g).value != bruteForceMad(g)) out.fail("n=6 edge mask " + std::to_string(mask));
    ++checked;
  }
  std::mt19937_64 rng(1001);
  for (int i = 0; i < 500; ++i) {
    Graph g = randomGraph(rng, pick(rng, 0, 10), uniform(rng, 0.0, 1.0));
    MadValue exact = madExact(g).value, brute = bruteForceMad(g);
    if (exact != brute) out.fail("random graph " + std::to_string(i) + ": " + exact.toString() + " vs " + brute.toString());
    ++checked;
  }
  out.detail = std::to_string(checked) + " graphs compared";
  return out;
}

// ---- 2 ----
Outcome decisionBoundary() {
  Outcome out;
  std::mt19937_64 rng(2002);
  int done = 0;
  while (done < 200) {
    Graph g = randomGraph(rng, pick(rng, 2, 40), uniform(rng, 0.05, 0.9));
    if (g.edgeCount() == 0) continue;
    ++done;
    Rational mad = madExact(g).value.value();
    WideInt n = static_cast<WideInt>(g.vertexCount());
    Rational half = mad / Rational(2);
    if (!madDecision(g, half)) out.fail("graph " + std::to_string(done) + ": rejected at mad/2");
    if (madDecision(g, half - Rational(1, 2 * n * n))) out.fail("graph " + std::to_string(done) + ": accepted below mad/2");
  }
  out.detail = std::to_string(done) + " graphs, both sides of mad/2";
  return out;
}

// ---- 3 ----
Outcome cycleCancellation() {
  Outcome out;
  std::vector<Graph> corpus = {gen::complete(3), gen::complete(7), gen::cycle(9), gen::grid(5, 6),
                               gen::tree(30, 3), gen::gnm(80, 300, 5)};
  std::mt19937_64 rng(3003);
  for (int i = 0; i < 400; ++i) corpus.push_back(randomGraph(rng, pick(rng, 2, 35), uniform(rng, 0.05, 0.9)));

  std::size_t graphs = 0, withCycles = 0, totalIterations = 0;
  for (const Graph& g : corpus) {
    if (g.edgeCount() == 0) continue;
    ++graphs;
    SaturatingFlow sat = saturatingFlow(g);
    Orientation start = buildOrientation(g, sat.network, sat.flow);
    if (!isAcyclic(g, start).acyclic) ++withCycles;
    std::string id = "graph " + std::to_string(graphs);
    auto observer = [&](const Orientation& o, std::size_t) {
      Flow f = orientationFlow(sat.network, g, o);
      if (auto bad = checkFlow(sat.network, f)) out.fail(id + ": " + *bad);
      if (f.value != sat.network.saturatedValue()) out.fail(id + ": flow value changed");
      for (std::size_t v = 0; v < g.vertexCount(); ++v)
        if (f.arcFlow[sat.network.sinkArc(v)] > o.vertexCapacity) out.fail(id + ": vertex over capacity");
    };
    CycleCancellation cc = cancelCycles(g, start, observer);
    totalIterations += cc.iterations;
    if (cc.iterations > g.edgeCount()) out.fail(id + ": more iterations than edges");
    if (!isAcyclic(g, cc.orientation).acyclic) out.fail(id + ": cyclic after cancelling");
  }
  out.detail = std::to_string(graphs) + " graphs (" + std::to_string(withCycles) + " started cyclic), " +
               std::to_string(totalIterations) + " cancellations";
  return out;
}

// ---- 4 and 5 share one corpus ----
struct CorpusRun {
  Outcome degenerateAndDrop;
  Outcome wrappers;
};

const CorpusRun& corpusRun() {
  static const CorpusRun run = [] {
    CorpusRun r;
    std::mt19937_64 rng(4004);
    std::map<int, int> byFloor;
    std::size_t graphs = 0, decompositions = 0, independentRuns = 0, forestRuns = 0;
    while (graphs < 1000) {
      // Aim the average degree at a target in [1, 8]; keep the draw only if mad lands there.
      double target = uniform(rng, 1.0, 8.0);
      std::size_t n = pick(rng, 10, 60);
      std::size_t m = std::min(n * (n - 1) / 2, static_cast<std::size_t>(target * static_cast<double>(n) / 2.0 *
                                                                           uniform(rng, 0.7, 1.0)));
      Graph g = gen::gnm(n, m, rng());
      // Every 25th graph carries a K9 component, pinning mad at exactly 8.
      if (graphs % 25 == 0) {
        std::size_t rest = n - 9;
        g = gen::disjointUnion(gen::complete(9), gen::gnm(rest, std::min(3 * rest, rest * (rest - 1) / 2), rng()));
      }
      MadValue mad = madExact(g).value;
      if (mad < MadValue(1) || mad > MadValue(8)) continue;
      ++graphs;
      ++byFloor[static_cast<int>(mad.value().floor())];
      std::string id = "graph " + std::to_string(graphs);
      for (int k = 1; k <= mad.value().floor(); ++k) {
        ++decompositions;
        Decomposition d = decomposeByK(g, k);
        int degenS = degeneracy(inducedSubgraph(g, d.selected).graph).degeneracy;
        MadValue rest = madExact(inducedSubgraph(g, d.remainder()).graph).value;
        if (degenS > k - 1) r.degenerateAndDrop.fail(id + " k=" + std::to_string(k) + ": degeneracy " + std::to_string(degenS));
        if (rest > mad - Rational(k))
          r.degenerateAndDrop.fail(id + " k=" + std::to_string(k) + ": mad(G-S) " + rest.toString());
        if (!d.report.passed) r.degenerateAndDrop.fail(id + " k=" + std::to_string(k) + ": " + d.report.failures.front());
        if (k == 1) {
          ++independentRuns;
          if (!isIndependentSet(g, d.selected)) r.wrappers.fail(id + ": S not independent");
        }
        if (k == 2) {
          ++forestRuns;
          if (!isForest(inducedSubgraph(g, d.selected).graph)) r.wrappers.fail(id + ": G[S] not a forest");
        }
      }
    }
    std::string spread;
    for (auto [f, c] : byFloor) spread += (spread.empty() ? "" : " ") + std::to_string(f) + ":" + std::to_string(c);
    r.degenerateAndDrop.detail = std::to_string(graphs) + " graphs, " + std::to_string(decompositions) +
                                 " decompositions, floor(mad) spread " + spread;
    r.wrappers.detail = std::to_string(independentRuns) + " independent-set runs, " + std::to_string(forestRuns) +
                        " forest runs";
    return r;
  }();
  return run;
}

Outcome degenerateSetAndDrop() { return corpusRun().degenerateAndDrop; }
Outcome wrapperShapes() { return corpusRun().wrappers; }

// ---- 6 ----
Outcome conjectureBacking() {
  Outcome out;
  std::mt19937_64 rng(6006);
  std::size_t queries = 0, outside = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    for (int i = 0; i < 200; ++i) {
      Graph g = randomGraph(rng, n, uniform(rng, 0.0, 1.0));
      Rational c2(1 + static_cast<WideInt>(rng() % 2));
      MadValue mad = bruteForceMad(g);
      // Any positive rational slack above the hypothesis boundary.
      Rational slack(1 + static_cast<WideInt>(rng() % 12), 1 + static_cast<WideInt>(rng() % 12));
      if (rng() % 4 == 0) slack = Rational(1, 1000);
      Rational base = mad.value() > c2 ? mad.value() - c2 : Rational(0);
      Rational c1 = base + slack;
      auto res = conjectureSearch({g, c1, c2});
      ++queries;
      std::string id = "n=" + std::to_string(n) + " #" + std::to_string(i);
      if (!res.hypothesisHolds) {
        ++outside;
        out.fail(id + ": query outside the hypothesis");
        continue;
      }
      if (res.status == ConjectureStatus::Counterexample) {
        out.fail(id + ": COUNTEREXAMPLE reported");
        continue;
      }
      if (bruteForceMad(inducedSubgraph(g, res.a).graph) >= MadValue(c1) ||
          bruteForceMad(inducedSubgraph(g, res.b).graph) >= MadValue(c2))
        out.fail(id + ": witness does not meet the bounds");
    }
  }
  out.detail = std::to_string(queries) + " queries with c2 in {1, 2}, every one answered by a checked witness";
  if (outside) out.detail += ", " + std::to_string(outside) + " outside hypothesis";
  return out;
}

// ---- 7 ----
Outcome smallForests() {
  Outcome out;
  std::mt19937_64 rng(7007);
  auto holds = [](const Graph& g) {
    if (!isForest(g)) return false;
    for (const VertexSet& c : connectedComponents(g))
      if (c.size() > 9) return false;
    return true;
  };
  std::vector<Graph> corpus = {gen::path(10), gen::path(9), gen::tree(10, 1), gen::star(9), Graph(1, {}), Graph()};
  while (corpus.size() < 506) {
    std::size_t n = pick(rng, 1, 10);
    switch (corpus.size() % 3) {
      case 0: corpus.push_back(gen::tree(n, rng())); break;  // spanning tree
      case 1: {                                                 // forest: tree minus some edges
        Graph t = gen::tree(n, rng());
        std::vector<std::pair<Vertex, Vertex>> kept;
        for (const Edge& e : t.edges())
          if (rng() % 4 != 0) kept.emplace_back(e.u, e.v);
        corpus.push_back(Graph(n, std::move(kept)));
        break;
      }
      default: corpus.push_back(randomGraph(rng, n, uniform(rng, 0.05, 0.5)));
    }
  }
  const MadValue bound(Rational(9, 5));
  std::size_t yes = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Graph& g = corpus[i];
    MadValue mad = madExact(g).value;
    if (mad != bruteForceMad(g)) out.fail("graph " + std::to_string(i) + ": mad disagrees with brute force");
    bool lhs = mad < bound;
    yes += lhs;
    if (lhs != holds(g)) out.fail("graph " + std::to_string(i) + ": mad " + mad.toString());
  }
  MadValue p10 = madExact(gen::path(10)).value;
  if (p10 != bound) out.fail("path on 10 vertices has mad " + p10.toString());
  out.detail = std::to_string(corpus.size()) + " graphs (" + std::to_string(yes) + " below 9/5), P10 mad = " +
               p10.toString();
  return out;
}

// ---- CLI helpers for 8 and 9 ----
struct CliRun {
  int code = -1;
  std::string out;
};

CliRun runCli(const std::string& args) {
  std::string cmd = std::string("\"") + MADKIT_CLI + "\" " + args + " 2>&1";
  CliRun r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  for (std::size_t got; (got = std::fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, got);
  int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class ScratchDir {
 public:
  ScratchDir() : path_(fs::temp_directory_path() / ("madkit-acceptance-" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~ScratchDir() { fs::remove_all(path_); }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

std::string quoted(const fs::path& p) { return "\"" + p.string() + "\""; }

std::string readFile(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void dropTiming(nlohmann::json& j) {
  if (j.is_object()) {
    j.erase("timing");
    for (auto& [key, value] : j.items()) dropTiming(value);
  } else if (j.is_array()) {
    for (auto& value : j) dropTiming(value);
  }
}

// ---- 8 ----
Outcome determinism() {
  Outcome out;
  ScratchDir dir;
  auto graph = dir / "g.txt";
  CliRun gen = runCli("gen gnm 400 2000 --seed 11");
  if (gen.code != 0) {
    out.fail("gen failed: " + gen.out);
    return out;
  }
  std::ofstream(graph) << gen.out;
  std::vector<std::string> docs, texts;
  for (int run = 0; run < 2; ++run) {
    auto json = dir / ("run" + std::to_string(run) + ".json");
    CliRun r = runCli("decompose " + quoted(graph) + " --k 2 --levels 3 --json " + quoted(json));
    if (r.code != 0) out.fail("decompose exited with " + std::to_string(r.code));
    auto doc = nlohmann::json::parse(readFile(json));
    dropTiming(doc);
    docs.push_back(doc.dump(2));
    texts.push_back(r.out);
  }
  if (docs[0] != docs[1]) out.fail("JSON documents differ");
  if (texts[0] != texts[1]) out.fail("text output differs");
  out.detail = "gnm 400/2000, k=2, 3 levels: " + std::to_string(docs[0].size()) + "-byte documents identical";
  return out;
}

// ---- 9 ----
Outcome performance() {
  Outcome out;
  ScratchDir dir;
  auto graph = dir / "big.txt";
  CliRun gen = runCli("gen gnm 10000 50000 --seed 7");
  if (gen.code != 0) {
    out.fail("gen failed: " + gen.out);
    return out;
  }
  std::ofstream(graph) << gen.out;
  auto start = std::chrono::steady_clock::now();
  CliRun r = runCli("decompose " + quoted(graph) + " --k 2 --json " + quoted(dir / "big.json"));
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.code != 0) out.fail("decompose exited with " + std::to_string(r.code));
  if (seconds >= 180.0) out.fail("took " + std::to_string(seconds) + " s");
  std::ostringstream detail;
  detail.precision(1);
  detail << std::fixed << "gnm 10000/50000, k=2: " << seconds << " s (limit 180 s)";
  out.detail = detail.str();
  return out;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "madExact equals brute force", oracleEquivalence},
      {2, "flow decision boundary at mad/2", decisionBoundary},
      {3, "cycle cancelling yields an acyclic orientation", cycleCancellation},
      {4, "S is (k-1)-degenerate and mad drops by k", degenerateSetAndDrop},
      {5, "k=1 gives an independent set, k=2 a forest", wrapperShapes},
      {6, "no counterexample for c2 in {1, 2}", conjectureBacking},
      {7, "mad < 9/5 iff forest with components of size <= 9", smallForests},
      {8, "decompose output is deterministic", determinism},
      {9, "decompose on 10^4 vertices within 3 minutes", performance},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  bool allPass = true;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    allPass = allPass && o.pass;
    std::ostringstream line;
    line.precision(1);
    line << std::fixed << (o.pass ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << ": " << o.detail;
    if (!o.pass) line << "; first failure: " << o.firstFailure;
    line << " (" << seconds << " s)";
    std::cout << line.str() << std::endl;
  }
  return allPass ? 0 : 1;
}
