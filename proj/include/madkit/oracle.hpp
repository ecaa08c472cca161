#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "madkit/decompose.hpp"
#include "madkit/errors.hpp"
#include "madkit/graph.hpp"
#include "madkit/mad.hpp"
#include "madkit/rational.hpp"

namespace madkit {

inline constexpr std::size_t kBruteForceMadLimit = 20;
inline constexpr std::size_t kConjectureSearchLimit = 16;

namespace detail {

inline std::vector<std::uint32_t> adjacencyMasks(const Graph& g) {
  std::vector<std::uint32_t> adj(g.vertexCount(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  return adj;
}

// edges[mask] = |E(G[mask])| for every vertex subset.
inline std::vector<std::uint32_t> inducedEdgeCounts(const Graph& g) {
  const std::size_t n = g.vertexCount();
  auto adj = adjacencyMasks(g);
  std::vector<std::uint32_t> edges(std::size_t{1} << n, 0);
  for (std::uint32_t mask = 1; mask < edges.size(); ++mask) {
    int low = std::countr_zero(mask);
    std::uint32_t rest = mask & (mask - 1);
    edges[mask] = edges[rest] + static_cast<std::uint32_t>(std::popcount(adj[low] & rest));
  }
  return edges;
}

}  // namespace detail

// Exact mad by enumerating every nonempty vertex subset. Induced subgraphs
// suffice: on a fixed vertex set the induced subgraph has the most edges.
inline MadValue bruteForceMad(const Graph& g) {
  const std::size_t n = g.vertexCount();
  if (n > kBruteForceMadLimit)
    throw GuardViolation("brute-force mad is limited to " + std::to_string(kBruteForceMadLimit) + " vertices");
  if (n == 0) return MadValue::negativeInfinity();
  auto edges = detail::inducedEdgeCounts(g);
  std::int64_t bestNum = 0, bestDen = 1;
  for (std::uint32_t mask = 1; mask < edges.size(); ++mask) {
    std::int64_t num = 2 * static_cast<std::int64_t>(edges[mask]);
    std::int64_t den = std::popcount(mask);
    if (num * bestDen > bestNum * den) {
      bestNum = num;
      bestDen = den;
    }
  }
  return MadValue(Rational(bestNum, bestDen));
}

enum class ConjectureStatus { Witness, Counterexample, NoWitnessOutsideHypothesis };

inline std::string toString(ConjectureStatus s) {
  switch (s) {
    case ConjectureStatus::Witness: return "witness";
    case ConjectureStatus::Counterexample: return "COUNTEREXAMPLE";
    case ConjectureStatus::NoWitnessOutsideHypothesis: return "no-witness-outside-hypothesis";
  }
  return "?";
}

struct ConjectureQuery {
  Graph graph;
  Rational c1;
  Rational c2;
};

struct ConjectureOutcome {
  ConjectureStatus status = ConjectureStatus::Witness;
  bool hypothesisHolds = true;  // mad(g) < c1 + c2
  MadValue mad = MadValue::negativeInfinity();
  VertexSet a;
  VertexSet b;
};

// Searches bipartitions (A, B) with mad(G[A]) < c1 and mad(G[B]) < c2.
// Partitions with vertex 0 in A come first; bit i of the counter puts vertex
// i+1 in B and the first witness in counter order is returned.
inline ConjectureOutcome conjectureSearch(const ConjectureQuery& q) {
  const Graph& g = q.graph;
  const std::size_t n = g.vertexCount();
  if (n > kConjectureSearchLimit)
    throw GuardViolation("conjecture search is limited to " + std::to_string(kConjectureSearchLimit) + " vertices");
  if (!(q.c1 > Rational(0)) || !(q.c2 > Rational(0))) throw std::invalid_argument("c1 and c2 must be positive");

  ConjectureOutcome out;
  out.mad = madExact(g).value;
  out.hypothesisHolds = out.mad < MadValue(q.c1 + q.c2);
  out.a = VertexSet(n);
  out.b = VertexSet(n);
  if (n == 0) return out;

  auto edges = detail::inducedEdgeCounts(g);
  const std::uint32_t full = static_cast<std::uint32_t>((std::size_t{1} << n) - 1);
  // dense[mask]: some nonempty subset of mask has average degree >= c.
  auto denseClosure = [&](const Rational& c) {
    std::vector<char> dense(edges.size(), 0);
    for (std::uint32_t mask = 1; mask < edges.size(); ++mask) {
      WideInt lhs = 2 * static_cast<WideInt>(edges[mask]) * c.den();
      WideInt rhs = c.num() * std::popcount(mask);
      dense[mask] = lhs >= rhs;
    }
    for (std::size_t bit = 0; bit < n; ++bit)
      for (std::uint32_t mask = 0; mask < edges.size(); ++mask)
        if (mask >> bit & 1u) dense[mask] |= dense[mask ^ (1u << bit)];
    return dense;
  };
  auto denseA = denseClosure(q.c1);
  auto denseB = denseClosure(q.c2);

  // Swapping A and B is a symmetry only when c1 == c2; otherwise the
  // partitions with vertex 0 in B are searched afterwards.
  const int phases = q.c1 == q.c2 ? 1 : 2;
  for (std::uint32_t step = 0; step < (std::uint32_t{1} << (n - 1)) * phases; ++step) {
    std::uint32_t counter = step & ((std::uint32_t{1} << (n - 1)) - 1);
    std::uint32_t bMask = counter << 1 | (step >> (n - 1));
    std::uint32_t aMask = full & ~bMask;
    if (denseA[aMask] || denseB[bMask]) continue;
    for (std::size_t v = 0; v < n; ++v) {
      if (aMask >> v & 1u)
        out.a.insert(static_cast<Vertex>(v));
      else
        out.b.insert(static_cast<Vertex>(v));
    }
    out.status = ConjectureStatus::Witness;
    return out;
  }
  out.status = out.hypothesisHolds ? ConjectureStatus::Counterexample : ConjectureStatus::NoWitnessOutsideHypothesis;
  return out;
}

struct SplitBound {
  bool hypothesisHolds = false;  // mad(g) < c1 + k
  bool boundsHold = false;       // mad(G[A]) < c1 and mad(G[B]) < 2k - 2
  MadValue mad = MadValue::negativeInfinity();
  VertexSet a;
  VertexSet b;
  MadValue madA = MadValue::negativeInfinity();
  MadValue madB = MadValue::negativeInfinity();
};

// For mad(g) < c1 + k: B = the (k-1)-degenerate set S of the decomposition,
// A = G - S. Then mad(G[A]) <= mad(g) - k < c1 and, since (k-1)-degenerate
// graphs have mad < 2(k-1), mad(G[B]) < 2k - 2. Both bounds are recomputed.
inline SplitBound degenerateSplitBound(const Graph& g, const Rational& c1, int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  SplitBound out;
  out.mad = madExact(g).value;
  out.hypothesisHolds = out.mad < MadValue(c1 + Rational(k));
  out.a = VertexSet(g.vertexCount());
  out.b = VertexSet(g.vertexCount());
  if (!out.hypothesisHolds) return out;
  Decomposition d = decomposeByK(g, k);
  out.b = d.selected;
  out.a = d.remainder();
  out.madA = madExact(inducedSubgraph(g, out.a).graph).value;
  out.madB = madExact(inducedSubgraph(g, out.b).graph).value;
  out.boundsHold = out.madA < MadValue(c1) && out.madB < MadValue(Rational(2 * k - 2));
  return out;
}

}  // namespace madkit
