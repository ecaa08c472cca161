#include <gtest/gtest.h>

#include <random>

#include "madkit/decompose.hpp"
#include "madkit/generators.hpp"
#include "test_support.hpp"

namespace madkit {
namespace {

Orientation balanced(const Graph& g, Capacity half = 1) {
  Orientation o;
  o.half = half;
  o.vertexCapacity = 2 * half * static_cast<Capacity>(g.vertexCount());
  o.splits.assign(g.edgeCount(), EdgeSplit{half, half});
  return o;
}

TEST(SolveTest, SingleEdge) {
  Graph g = gen::path(2);
  Decomposition d = solve(g, balanced(g), 1);
  EXPECT_EQ(d.selected, VertexSet(2, std::vector<Vertex>{0}));
  ASSERT_EQ(d.evicted.size(), 1u);
  EXPECT_EQ(d.evicted.at(1), std::vector<Vertex>{0});
}

TEST(SolveTest, BalancedTriangle) {
  Graph g = gen::complete(3);
  Decomposition d = solve(g, balanced(g), 2);
  EXPECT_EQ(d.peelOrder, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(d.evicted.at(2), (std::vector<Vertex>{0, 1}));
  auto report = verifyDecomposition(g, d);
  EXPECT_TRUE(report.passed);
  EXPECT_EQ(report.madRemainder, MadValue(0));
}

TEST(SolveTest, FollowsOrientationSources) {
  // Path 0 - 1 - 2 oriented 2 -> 1 -> 0: only vertex 2 starts without in-arcs.
  Graph g = gen::path(3);
  Orientation o;
  o.half = 1;
  o.splits = {{2, 0}, {2, 0}};
  Decomposition d = solve(g, o, 1);
  EXPECT_EQ(d.peelOrder, (std::vector<Vertex>{2, 0}));
  EXPECT_EQ(d.evicted.at(1), std::vector<Vertex>{2});
}

TEST(SolveTest, NoEvictionBelowK) {
  for (std::size_t n : {1u, 2u, 5u, 9u}) {
    Graph g = gen::path(n);
    Decomposition d = decomposeByK(g, 2);
    EXPECT_EQ(d.selected, VertexSet::all(n));
    EXPECT_TRUE(d.evicted.empty());
    EXPECT_TRUE(d.report.passed);
  }
}

TEST(SolveTest, RejectsCyclicOrientation) {
  Graph g = gen::complete(3);
  Orientation o;
  o.half = 1;
  o.splits = {{0, 2}, {2, 0}, {0, 2}};
  EXPECT_THROW(solve(g, o, 1), ContractViolation);
  EXPECT_THROW(solve(g, o, 0), std::invalid_argument);
}

TEST(DecomposeByKTest, Examples) {
  Decomposition k4 = decomposeByK(gen::complete(4), 3);
  EXPECT_TRUE(k4.report.passed);
  EXPECT_LE(k4.report.degeneracyOfS, 2);
  EXPECT_EQ(inducedEdgeCount(gen::complete(4), k4.remainder()), 0u);

  Graph c4 = gen::cycle(4);
  Decomposition c = decomposeByK(c4, 1);
  EXPECT_TRUE(c.report.passed);
  EXPECT_TRUE(isIndependentSet(c4, c.selected));
  EXPECT_LE(c.report.madRemainder, MadValue(1));

  Decomposition k2 = decomposeByK(gen::path(2), 2);
  EXPECT_EQ(k2.selected, VertexSet::all(2));
  EXPECT_TRUE(k2.report.madRemainder.isNegativeInfinity());
  EXPECT_TRUE(k2.report.passed);

  Decomposition edgeless = decomposeByK(Graph(3, {}), 4);
  EXPECT_EQ(edgeless.selected, VertexSet::all(3));
  EXPECT_TRUE(edgeless.report.passed);

  Decomposition empty = decomposeByK(Graph(), 1);
  EXPECT_TRUE(empty.report.passed);
  EXPECT_THROW(decomposeByK(c4, 0), std::invalid_argument);
}

TEST(WrapperTest, IndependentSetRemoval) {
  Decomposition c4 = independentSetRemoval(gen::cycle(4));
  EXPECT_TRUE(c4.report.passed);
  EXPECT_EQ(c4.report.independent, true);
  EXPECT_EQ(c4.selected.size(), 2u);

  Decomposition k2 = independentSetRemoval(gen::path(2));
  EXPECT_EQ(k2.selected.size(), 1u);
  EXPECT_TRUE(k2.report.passed);

  Decomposition none = independentSetRemoval(Graph(4, {}));
  EXPECT_EQ(none.selected, VertexSet::all(4));
}

TEST(WrapperTest, ForestRemoval) {
  Decomposition k4 = forestRemoval(gen::complete(4));
  EXPECT_TRUE(k4.report.passed);
  EXPECT_EQ(k4.report.forest, true);
  EXPECT_LE(k4.report.madRemainder, MadValue(1));

  Graph t = gen::tree(40, 9);
  Decomposition tree = forestRemoval(t);
  EXPECT_EQ(tree.selected, VertexSet::all(40));

  Decomposition c5 = forestRemoval(gen::cycle(5));
  EXPECT_TRUE(c5.report.passed);
  EXPECT_EQ(c5.report.forest, true);
  EXPECT_LE(c5.report.madRemainder, MadValue(0));
}

TEST(VerifyTest, CatchesBadSets) {
  Decomposition whole;
  whole.k = 3;
  whole.selected = VertexSet::all(4);
  auto r = verifyDecomposition(gen::complete(4), whole);
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(r.degeneracyOk);
  EXPECT_EQ(r.degeneracyOfS, 3);

  Decomposition none;
  none.k = 1;
  none.selected = VertexSet(3);
  auto r2 = verifyDecomposition(gen::complete(3), none);
  EXPECT_FALSE(r2.passed);
  EXPECT_FALSE(r2.madDropOk);
  EXPECT_TRUE(r2.degeneracyOk);

  Decomposition badOrder;
  badOrder.k = 1;
  badOrder.selected = VertexSet(3, std::vector<Vertex>{0, 1});
  badOrder.peelOrder = {0, 1};
  auto r3 = verifyDecomposition(gen::complete(3), badOrder);
  EXPECT_EQ(r3.peelOrderOk, false);
  EXPECT_EQ(r3.independent, false);
}

TEST(VerifyTest, CatchesUnsoundEviction) {
  Graph g = gen::path(2);
  Decomposition d = solve(g, balanced(g), 1);
  d.report = verifyDecomposition(g, d);
  ASSERT_TRUE(d.report.passed);
  d.orientation->splits[0] = {2, 0};  // vertex 1 now receives nothing from its evictor
  EXPECT_EQ(verifyDecomposition(g, d).evictionOk, false);
  d.evicted.clear();
  EXPECT_EQ(verifyDecomposition(g, d).evictionOk, false);
}

TEST(DecomposePropertyTest, RandomGraphsEveryK) {
  std::mt19937_64 rng(4242);
  for (int iter = 0; iter < 120; ++iter) {
    std::size_t n = 2 + rng() % 30;
    Graph g = testing::randomGraph(rng, n, 0.05 + static_cast<double>(rng() % 50) / 100.0);
    MadValue mad = madExact(g).value;
    WideInt top = mad.isNegativeInfinity() ? 0 : mad.value().floor();
    for (int k = 1; k <= static_cast<int>(top) + 1; ++k) {
      Decomposition d = decomposeByK(g, k);
      ASSERT_TRUE(d.report.passed) << d.report.failures.front();
      // Peel-order witness.
      std::vector<char> earlier(n, 0);
      for (Vertex v : d.peelOrder) {
        int before = 0;
        for (const auto& inc : g.incident(v)) before += earlier[inc.neighbor];
        EXPECT_LE(before, k - 1);
        earlier[v] = 1;
      }
      // Every vertex outside S was evicted by k of its S-neighbours.
      for (Vertex v : d.remainder().members()) {
        ASSERT_TRUE(d.evicted.count(v));
        int inS = 0;
        for (const auto& inc : g.incident(v)) inS += d.selected.contains(inc.neighbor);
        EXPECT_GE(inS, k);
      }
      if (MadValue(Rational(k)) > mad) {
        EXPECT_EQ(d.selected, VertexSet::all(n));
      }
    }
  }
}

}  // namespace
}  // namespace madkit
