#pragma once

#include <algorithm>
#include <stdexcept>

#include "madkit/errors.hpp"
#include "madkit/flow.hpp"
#include "madkit/graph.hpp"
#include "madkit/rational.hpp"

namespace madkit {

// True iff the maximum flow of the network for threshold c saturates every
// source arc, which happens exactly when 2c >= mad(g).
inline bool madDecision(const Graph& g, const Rational& c) {
  FlowNetwork net(g, c);
  return maxFlow(net).value == net.saturatedValue();
}

struct MadResult {
  MadValue value = MadValue::negativeInfinity();
  VertexSet witness;            // induces a subgraph of average degree `value`
  std::size_t decisionCalls = 0;
};

// Exact maximum average degree.
//
// mad is 2|E(H)|/|V(H)| for some induced H, so its denominator is at most n
// and two distinct candidates differ by at least 1/n^2. Bisection keeps
// lo < mad <= hi using the flow decision, stops once hi - lo < 1/(2n^2), and
// snaps to the single fraction with denominator <= n in (lo, hi]. Midpoints
// are the simplest fractions of the interval's middle third, which keeps the
// scaled capacities small.
inline MadResult madExact(const Graph& g) {
  MadResult res;
  const std::size_t n = g.vertexCount();
  res.witness = VertexSet(n);
  if (n == 0) return res;
  if (g.edgeCount() == 0) {
    res.value = MadValue(0);
    return res;
  }
  const WideInt nn = static_cast<WideInt>(n);
  const Rational eps(1, wide::mul(4, wide::mul(nn, nn)));
  const Rational width(1, wide::mul(2, wide::mul(nn, nn)));

  // degeneracy <= mad <= 2 * degeneracy and 2m/n <= mad.
  const int d = degeneracy(g).degeneracy;
  Rational lower = std::max(Rational(d), Rational(2 * static_cast<WideInt>(g.edgeCount()), nn));
  Rational lo = lower - eps;
  Rational hi = Rational(2 * d);
  auto decide = [&](const Rational& madCandidate) {
    ++res.decisionCalls;
    return madDecision(g, madCandidate / Rational(2));
  };
  while (hi - lo >= width) {
    Rational third = (hi - lo) / Rational(3);
    Rational mid = simplestInClosed(lo + third, hi - third);
    if (decide(mid))
      hi = mid;
    else
      lo = mid;
  }
  Rational mad = snapToBoundedDenominator(lo, hi, nn);
  if (!decide(mad)) throw ContractViolation("flow decision rejects snapped mad " + mad.toString());

  // Any subgraph denser than mad/2 - eps has density exactly mad/2.
  FlowNetwork net(g, mad / Rational(2) - eps);
  Flow f = maxFlow(net);
  ++res.decisionCalls;
  if (f.value == net.saturatedValue())
    throw ContractViolation("flow decision accepts a threshold below mad " + mad.toString());
  res.witness = minCutVertexSide(net, f);
  if (res.witness.empty())
    throw ContractViolation("empty densest-subgraph witness");
  Rational density(2 * static_cast<WideInt>(inducedEdgeCount(g, res.witness)),
                   static_cast<WideInt>(res.witness.size()));
  if (density != mad)
    throw ContractViolation("witness density " + density.toString() + " differs from mad " + mad.toString());
  res.value = MadValue(mad);
  return res;
}

inline VertexSet densestSubgraph(const Graph& g) {
  if (g.edgeCount() == 0) throw std::invalid_argument("densest subgraph needs at least one edge");
  return madExact(g).witness;
}

}  // namespace madkit
