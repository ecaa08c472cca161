#pragma once

#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "madkit/errors.hpp"
#include "madkit/graph.hpp"
#include "madkit/mad.hpp"
#include "madkit/orientation.hpp"

namespace madkit {

struct VerificationReport {
  bool passed = false;
  int degeneracyOfS = -1;
  bool degeneracyOk = false;
  std::optional<bool> peelOrderOk;   // only when a peel order is present
  bool madDropOk = false;
  MadValue madGraph = MadValue::negativeInfinity();
  MadValue madRemainder = MadValue::negativeInfinity();
  std::optional<bool> independent;   // k == 1
  std::optional<bool> forest;        // k == 2
  std::optional<bool> evictionOk;    // only when an orientation is present
  std::vector<std::string> failures;
};

struct Decomposition {
  int k = 1;
  VertexSet selected;                             // S
  std::vector<Vertex> peelOrder;                  // insertion order into S
  std::map<Vertex, std::vector<Vertex>> evicted;  // vertex -> the k S-neighbours that evicted it
  std::optional<Orientation> orientation;         // acyclic G_f the peeling ran on
  std::size_t cancellations = 0;
  VerificationReport report;

  VertexSet remainder() const { return selected.complement(); }
};

// Peels the acyclic orientation: repeatedly moves the smallest vertex without
// incoming arcs (among those still present) into S, then drops from the
// orientation every outside vertex that has gained k neighbours in S.
// Neighbourhoods are measured in g itself.
inline Decomposition solve(const Graph& g, const Orientation& o, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (o.splits.size() != g.edgeCount()) throw std::invalid_argument("orientation does not match graph");
  const std::size_t n = g.vertexCount();
  Decomposition d;
  d.k = k;
  d.selected = VertexSet(n);
  d.orientation = o;

  std::vector<char> present(n, 1);
  std::vector<std::size_t> indeg(n, 0);
  std::vector<int> selectedNeighbours(n, 0);
  for (std::size_t e = 0; e < g.edgeCount(); ++e) {
    switch (o.direction(static_cast<EdgeId>(e))) {
      case EdgeDirection::LowToHigh: ++indeg[g.edges()[e].v]; break;
      case EdgeDirection::HighToLow: ++indeg[g.edges()[e].u]; break;
      case EdgeDirection::Discarded: break;
    }
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> sources;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) sources.push(static_cast<Vertex>(v));
  std::size_t remaining = n;

  auto drop = [&](Vertex v) {
    present[v] = 0;
    --remaining;
    for (const auto& [w, e] : g.incident(v))
      if (present[w] && o.pointsAway(g.edges()[e], e, v) && --indeg[w] == 0) sources.push(w);
  };

  while (remaining > 0) {
    while (!sources.empty() && !present[sources.top()]) sources.pop();
    if (sources.empty()) throw ContractViolation("orientation has a cycle: no vertex without incoming arcs");
    Vertex x = sources.top();
    sources.pop();
    drop(x);
    d.selected.insert(x);
    d.peelOrder.push_back(x);
    for (const auto& inc : g.incident(x)) {
      Vertex y = inc.neighbor;
      if (d.selected.contains(y)) continue;
      if (++selectedNeighbours[y] >= k && present[y]) {
        drop(y);
        auto& evictors = d.evicted[y];
        for (const auto& yi : g.incident(y))
          if (d.selected.contains(yi.neighbor)) evictors.push_back(yi.neighbor);
      }
    }
  }
  return d;
}

// Independently re-derives every guarantee of a decomposition: S induces a
// (k-1)-degenerate graph, mad(G - S) <= mad(G) - k, the k = 1 / k = 2
// special shapes, and (when the orientation is attached) that each evicted
// vertex receives at least half a unit from every edge to its evictors.
inline VerificationReport verifyDecomposition(const Graph& g, const Decomposition& d) {
  VerificationReport r;
  const int k = d.k;
  if (d.selected.universe() != g.vertexCount()) {
    r.failures.push_back("selected set does not match the graph");
    return r;
  }

  Subgraph inS = inducedSubgraph(g, d.selected);
  auto degen = degeneracy(inS.graph);
  r.degeneracyOfS = degen.degeneracy;
  r.degeneracyOk = degen.degeneracy <= k - 1;
  if (!r.degeneracyOk)
    r.failures.push_back("G[S] has degeneracy " + std::to_string(degen.degeneracy) + " > " + std::to_string(k - 1));

  if (!d.peelOrder.empty()) {
    bool ok = d.peelOrder.size() == d.selected.size();
    std::vector<char> earlier(g.vertexCount(), 0);
    for (Vertex v : d.peelOrder) {
      if (!ok) break;
      if (!d.selected.contains(v) || earlier[v]) {
        ok = false;
        r.failures.push_back("peel order is not a permutation of S");
        break;
      }
      int before = 0;
      for (const auto& inc : g.incident(v))
        if (earlier[inc.neighbor]) ++before;
      if (before > k - 1) {
        ok = false;
        r.failures.push_back("vertex " + g.label(v) + " has " + std::to_string(before) +
                             " earlier S-neighbours in the peel order");
      }
      earlier[v] = 1;
    }
    r.peelOrderOk = ok;
  }

  r.madGraph = madExact(g).value;
  r.madRemainder = madExact(inducedSubgraph(g, d.remainder()).graph).value;
  r.madDropOk = r.madRemainder <= r.madGraph - Rational(k);
  if (!r.madDropOk)
    r.failures.push_back("mad(G - S) = " + r.madRemainder.toString() + " exceeds mad(G) - k = " +
                         (r.madGraph - Rational(k)).toString());

  if (k == 1) {
    r.independent = isIndependentSet(g, d.selected);
    if (!*r.independent) r.failures.push_back("S is not an independent set");
  }
  if (k == 2) {
    r.forest = isForest(inS.graph);
    if (!*r.forest) r.failures.push_back("G[S] is not a forest");
  }

  if (d.orientation) {
    const Orientation& o = *d.orientation;
    bool ok = true;
    for (std::size_t u = 0; u < g.vertexCount() && ok; ++u) {
      Vertex v = static_cast<Vertex>(u);
      if (d.selected.contains(v)) continue;
      auto it = d.evicted.find(v);
      if (it == d.evicted.end()) {
        ok = false;
        r.failures.push_back("vertex " + g.label(v) + " is neither in S nor evicted");
        break;
      }
      if (it->second.size() < static_cast<std::size_t>(k)) {
        ok = false;
        r.failures.push_back("vertex " + g.label(v) + " evicted by fewer than k vertices");
      }
      for (Vertex x : it->second) {
        if (!d.selected.contains(x) || !g.adjacent(v, x)) {
          ok = false;
          r.failures.push_back("evictor " + g.label(x) + " of " + g.label(v) + " is not an S-neighbour");
          break;
        }
        for (const auto& [w, e] : g.incident(v)) {
          if (w != x) continue;
          Capacity towardV = v == g.edges()[e].u ? o.splits[e].toLow : o.splits[e].toHigh;
          if (towardV < o.half) {
            ok = false;
            r.failures.push_back("edge " + g.label(v) + "-" + g.label(x) + " sends less than half a unit to " +
                                 g.label(v));
          }
        }
      }
    }
    r.evictionOk = ok;
  }

  r.passed = r.failures.empty();
  return r;
}

// Full pipeline: exact mad, saturating flow at scale 2b, cycle cancelling,
// peeling, verification.
inline Decomposition decomposeByK(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  Decomposition d;
  if (g.edgeCount() == 0) {
    d.k = k;
    d.selected = VertexSet::all(g.vertexCount());
    for (std::size_t v = 0; v < g.vertexCount(); ++v) d.peelOrder.push_back(static_cast<Vertex>(v));
  } else {
    SaturatingFlow sat = saturatingFlow(g);
    CycleCancellation cc = cancelCycles(g, buildOrientation(g, sat.network, sat.flow));
    d = solve(g, cc.orientation, k);
    d.cancellations = cc.iterations;
  }
  d.report = verifyDecomposition(g, d);
  return d;
}

inline Decomposition independentSetRemoval(const Graph& g) { return decomposeByK(g, 1); }

inline Decomposition forestRemoval(const Graph& g) { return decomposeByK(g, 2); }

}  // namespace madkit
