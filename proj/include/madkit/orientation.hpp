#pragma once

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "madkit/errors.hpp"
#include "madkit/flow.hpp"
#include "madkit/graph.hpp"
#include "madkit/mad.hpp"
#include "madkit/rational.hpp"

namespace madkit {

// How one unit (scaled to 2b) entering an edge node is split between the
// edge's endpoints. `toLow` goes to edge.u, `toHigh` to edge.v.
struct EdgeSplit {
  Capacity toLow = 0;
  Capacity toHigh = 0;
  friend bool operator==(const EdgeSplit&, const EdgeSplit&) = default;
};

enum class EdgeDirection { LowToHigh, HighToLow, Discarded };

// The directed graph G_f: an edge points at the endpoint receiving strictly
// more than half of its unit, and is discarded when the split is even.
struct Orientation {
  Capacity half = 1;            // b
  Capacity vertexCapacity = 0;  // a, where mad = a/b
  std::vector<EdgeSplit> splits;

  Capacity scale() const noexcept { return 2 * half; }

  EdgeDirection direction(EdgeId e) const {
    const EdgeSplit& s = splits[e];
    if (s.toHigh > half) return EdgeDirection::LowToHigh;
    if (s.toLow > half) return EdgeDirection::HighToLow;
    return EdgeDirection::Discarded;
  }

  // Is there an arc from `from` along edge e (whose endpoints are given)?
  bool pointsAway(const Edge& edge, EdgeId e, Vertex from) const {
    return from == edge.u ? splits[e].toHigh > half : splits[e].toLow > half;
  }

  std::size_t directedCount() const {
    std::size_t c = 0;
    for (std::size_t e = 0; e < splits.size(); ++e)
      if (direction(static_cast<EdgeId>(e)) != EdgeDirection::Discarded) ++c;
    return c;
  }
};

struct SaturatingFlow {
  Rational mad;
  FlowNetwork network;
  Flow flow;
};

// Maximum flow in the network for c = mad/2 with every capacity multiplied
// by 2b (mad = a/b in lowest terms). Its value is 2b|E|, every source arc is
// full and each vertex receives at most a.
inline SaturatingFlow saturatingFlow(const Graph& g) {
  if (g.edgeCount() == 0) throw std::invalid_argument("saturating flow needs at least one edge");
  Rational mad = madExact(g).value.value();
  FlowNetwork net(g, mad / Rational(2), wide::mul(2, mad.den()));
  Flow f = maxFlow(net);
  if (f.value != net.saturatedValue())
    throw ContractViolation("flow at c = mad/2 does not saturate the source arcs");
  return {mad, std::move(net), std::move(f)};
}

inline Orientation buildOrientation(const Graph& g, const FlowNetwork& net, const Flow& f) {
  if (net.scale() % 2 != 0) throw std::invalid_argument("orientation needs an even scale");
  Orientation o;
  o.half = net.scale() / 2;
  o.vertexCapacity = net.sinkCapacity();
  o.splits.resize(g.edgeCount());
  for (std::size_t e = 0; e < g.edgeCount(); ++e) {
    o.splits[e] = {f.arcFlow[net.splitArc(e, 0)], f.arcFlow[net.splitArc(e, 1)]};
    if (o.splits[e].toLow + o.splits[e].toHigh != net.scale())
      throw ContractViolation("edge " + std::to_string(e) + " is not saturated");
  }
  return o;
}

// Rebuilds the full arc flow on `net` that an orientation's splits describe.
inline Flow orientationFlow(const FlowNetwork& net, const Graph& g, const Orientation& o) {
  Flow f;
  f.arcFlow.assign(net.arcs().size(), 0);
  std::vector<Capacity> inflow(g.vertexCount(), 0);
  for (std::size_t e = 0; e < g.edgeCount(); ++e) {
    f.arcFlow[net.sourceArc(e)] = o.splits[e].toLow + o.splits[e].toHigh;
    f.arcFlow[net.splitArc(e, 0)] = o.splits[e].toLow;
    f.arcFlow[net.splitArc(e, 1)] = o.splits[e].toHigh;
    inflow[g.edges()[e].u] += o.splits[e].toLow;
    inflow[g.edges()[e].v] += o.splits[e].toHigh;
    f.value += f.arcFlow[net.sourceArc(e)];
  }
  for (std::size_t v = 0; v < g.vertexCount(); ++v) f.arcFlow[net.sinkArc(v)] = inflow[v];
  return f;
}

struct CycleCancellation {
  Orientation orientation;
  std::size_t iterations = 0;
};

// Observer invoked after every cancellation with the current orientation and
// the number of cancellations so far.
using CancelObserver = std::function<void(const Orientation&, std::size_t)>;

// Cancels directed cycles of G_f until none is left.
//
// For a cycle, x is the smallest majority share on its edges; moving x - b
// from the majority to the minority side of every cycle edge keeps each
// vertex's inflow unchanged and balances at least one edge. Cancelling
// never reverses an edge, it only discards edges, so a single depth-first
// sweep from the lowest vertex can resume right below the first discarded
// cycle edge: it visits the same cycles, in the same order, as a sweep that
// restarts from scratch after every cancellation.
inline CycleCancellation cancelCycles(const Graph& g, Orientation o, const CancelObserver& observer = {}) {
  const std::size_t n = g.vertexCount();
  CycleCancellation out;
  enum : char { kWhite, kGray, kBlack };
  std::vector<char> color(n, kWhite);
  std::vector<std::size_t> stackPos(n, 0);

  struct Frame {
    Vertex v;
    std::size_t next;  // index into g.incident(v)
    EdgeId via;        // edge from the previous frame, -1 at the root
  };
  std::vector<Frame> stack;
  std::vector<EdgeId> cycle;

  auto heavy = [&](EdgeId e, Vertex head) -> Capacity& {
    return head == g.edges()[e].u ? o.splits[e].toLow : o.splits[e].toHigh;
  };
  auto light = [&](EdgeId e, Vertex head) -> Capacity& {
    return head == g.edges()[e].u ? o.splits[e].toHigh : o.splits[e].toLow;
  };

  for (std::size_t root = 0; root < n; ++root) {
    if (color[root] != kWhite) continue;
    stack.push_back({static_cast<Vertex>(root), 0, -1});
    color[root] = kGray;
    stackPos[root] = 0;
    while (!stack.empty()) {
      Frame& top = stack.back();
      auto inc = g.incident(top.v);
      if (top.next == inc.size()) {
        color[top.v] = kBlack;
        stack.pop_back();
        continue;
      }
      const auto [w, e] = inc[top.next++];
      if (!o.pointsAway(g.edges()[e], e, top.v) || color[w] == kBlack) continue;
      if (color[w] == kWhite) {
        color[w] = kGray;
        stackPos[w] = stack.size();
        stack.push_back({w, 0, e});
        continue;
      }

      // Back edge top.v -> w closes the cycle stack[pos(w)] ... top.v -> w.
      const std::size_t start = stackPos[w];
      cycle.clear();
      for (std::size_t i = start + 1; i < stack.size(); ++i) cycle.push_back(stack[i].via);
      cycle.push_back(e);
      auto headOf = [&](std::size_t i) { return i + 1 < cycle.size() ? stack[start + i + 1].v : w; };

      Capacity x = heavy(cycle[0], headOf(0));
      for (std::size_t i = 1; i < cycle.size(); ++i) x = std::min(x, heavy(cycle[i], headOf(i)));
      const Capacity shift = x - o.half;
      if (shift <= 0) throw ContractViolation("cycle edge without a majority share");
      std::size_t firstBalanced = cycle.size();
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        heavy(cycle[i], headOf(i)) -= shift;
        light(cycle[i], headOf(i)) += shift;
        if (heavy(cycle[i], headOf(i)) == o.half && firstBalanced == cycle.size()) firstBalanced = i;
      }
      if (firstBalanced == cycle.size()) throw ContractViolation("cancellation discarded no edge");
      ++out.iterations;
      if (out.iterations > g.edgeCount()) throw ContractViolation("more cancellations than edges");
      if (observer) observer(o, out.iterations);

      // Edge i leaves frame start + i; unwind everything above that frame.
      const std::size_t keep = start + firstBalanced + 1;
      while (stack.size() > keep) {
        color[stack.back().v] = kWhite;
        stack.pop_back();
      }
    }
  }
  out.orientation = std::move(o);
  return out;
}

struct AcyclicCheck {
  bool acyclic = true;
  std::vector<Vertex> topologicalOrder;  // smallest available vertex first
  std::vector<Vertex> cycle;             // c1 -> c2 -> ... -> c1 when not acyclic
};

inline AcyclicCheck isAcyclic(const Graph& g, const Orientation& o) {
  const std::size_t n = g.vertexCount();
  AcyclicCheck res;
  std::vector<std::size_t> indeg(n, 0);
  for (std::size_t e = 0; e < g.edgeCount(); ++e) {
    switch (o.direction(static_cast<EdgeId>(e))) {
      case EdgeDirection::LowToHigh: ++indeg[g.edges()[e].v]; break;
      case EdgeDirection::HighToLow: ++indeg[g.edges()[e].u]; break;
      case EdgeDirection::Discarded: break;
    }
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push(static_cast<Vertex>(v));
  std::vector<char> done(n, 0);
  while (!ready.empty()) {
    Vertex v = ready.top();
    ready.pop();
    done[v] = 1;
    res.topologicalOrder.push_back(v);
    for (const auto& [w, e] : g.incident(v))
      if (o.pointsAway(g.edges()[e], e, v) && --indeg[w] == 0) ready.push(w);
  }
  if (res.topologicalOrder.size() == n) return res;

  // Every leftover vertex has a leftover predecessor; walk backwards until a
  // vertex repeats.
  res.acyclic = false;
  Vertex v = 0;
  while (done[v]) ++v;
  std::vector<std::size_t> seenAt(n, SIZE_MAX);
  std::vector<Vertex> walk;
  while (seenAt[v] == SIZE_MAX) {
    seenAt[v] = walk.size();
    walk.push_back(v);
    for (const auto& [w, e] : g.incident(v))
      if (!done[w] && o.pointsAway(g.edges()[e], e, w)) {
        v = w;
        break;
      }
  }
  res.cycle.assign(walk.begin() + static_cast<std::ptrdiff_t>(seenAt[v]), walk.end());
  std::reverse(res.cycle.begin(), res.cycle.end());
  return res;
}

}  // namespace madkit
