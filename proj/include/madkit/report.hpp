#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "json.hpp"
#include "madkit/decompose.hpp"
#include "madkit/graph.hpp"
#include "madkit/oracle.hpp"
#include "madkit/rational.hpp"

namespace madkit {

inline constexpr int kResultSchema = 1;

namespace detail {

inline bool allDigits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// Numeric labels compare by value, everything else lexicographically.
inline bool labelLess(const std::string& a, const std::string& b) {
  bool na = allDigits(a), nb = allDigits(b);
  if (na && nb) return a.size() != b.size() ? a.size() < b.size() : a < b;
  if (na != nb) return na;
  return a < b;
}

}  // namespace detail

inline nlohmann::json labelsOf(const Graph& g, const std::vector<Vertex>& vertices, bool sorted = true) {
  std::vector<std::string> out;
  out.reserve(vertices.size());
  for (Vertex v : vertices) out.push_back(g.label(v));
  if (sorted) std::sort(out.begin(), out.end(), detail::labelLess);
  return out;
}

inline nlohmann::json labelsOf(const Graph& g, const VertexSet& s) { return labelsOf(g, s.members()); }

inline nlohmann::json graphStats(const Graph& g) {
  auto gi = girth(g);
  return {
      {"n", g.vertexCount()},
      {"m", g.edgeCount()},
      {"mad", madExact(g).value.toString()},
      {"girth", gi ? nlohmann::json(*gi) : nlohmann::json("inf")},
      {"degeneracy", degeneracy(g).degeneracy},
      {"maxDegree", maxDegree(g)},
  };
}

inline nlohmann::json toJson(const VerificationReport& r) {
  nlohmann::json j = {
      {"passed", r.passed},
      {"degeneracyOfS", r.degeneracyOfS},
      {"degeneracyOk", r.degeneracyOk},
      {"madDropOk", r.madDropOk},
      {"madGraph", r.madGraph.toString()},
      {"madRemainder", r.madRemainder.toString()},
      {"failures", r.failures},
  };
  if (r.peelOrderOk) j["peelOrderOk"] = *r.peelOrderOk;
  if (r.independent) j["independent"] = *r.independent;
  if (r.forest) j["forest"] = *r.forest;
  if (r.evictionOk) j["evictionOk"] = *r.evictionOk;
  return j;
}

inline nlohmann::json toJson(const Graph& g, const Decomposition& d) {
  nlohmann::json evicted = nlohmann::json::object();
  for (const auto& [v, by] : d.evicted) evicted[g.label(v)] = labelsOf(g, by);
  return {
      {"k", d.k},
      {"S", labelsOf(g, d.selected)},
      {"remainder", labelsOf(g, d.remainder())},
      {"peelOrder", labelsOf(g, d.peelOrder, false)},
      {"evicted", evicted},
      {"cancellations", d.cancellations},
      {"report", toJson(d.report)},
  };
}

// One line of the findings file for a conjecture query.
inline nlohmann::json findingRecord(const ConjectureQuery& q, const ConjectureOutcome& o) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : q.graph.edges()) edges.push_back({q.graph.label(e.u), q.graph.label(e.v)});
  nlohmann::json vertices = nlohmann::json::array();
  for (std::size_t v = 0; v < q.graph.vertexCount(); ++v) vertices.push_back(q.graph.label(static_cast<Vertex>(v)));
  return {
      {"schema", kResultSchema},
      {"vertices", vertices},
      {"edges", edges},
      {"mad", o.mad.toString()},
      {"c1", q.c1.toString()},
      {"c2", q.c2.toString()},
      {"outcome", toString(o.status)},
  };
}

}  // namespace madkit
