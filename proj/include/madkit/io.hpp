#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "madkit/errors.hpp"
#include "madkit/graph.hpp"

namespace madkit {

// Edge-list text: one "a b" pair of labels per line, '#' starts a comment
// line, blank lines are ignored. A line holding a single label declares an
// isolated vertex. Labels get dense ids in order of first appearance.
// Self-loops and repeated edges are rejected with the offending line number.
inline Graph parseEdgeList(std::istream& in) {
  std::unordered_map<std::string, Vertex> ids;
  std::vector<std::string> labels;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  auto idOf = [&](const std::string& label) {
    auto [it, inserted] = ids.emplace(label, static_cast<Vertex>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    std::istringstream tokens(line);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(std::move(w));
    if (words.empty() || words[0][0] == '#') continue;
    if (words.size() == 1) {
      idOf(words[0]);
      continue;
    }
    if (words.size() != 2) throw ParseError("expected two labels, found " + std::to_string(words.size()), lineNo);
    if (words[0] == words[1]) throw ParseError("self-loop at '" + words[0] + "'", lineNo);
    Vertex a = idOf(words[0]);
    Vertex b = idOf(words[1]);
    if (!seen.emplace(std::min(a, b), std::max(a, b)).second)
      throw ParseError("duplicate edge '" + words[0] + " " + words[1] + "'", lineNo);
    edges.emplace_back(a, b);
  }
  std::size_t n = labels.size();
  return Graph(n, std::move(edges), std::move(labels));
}

inline Graph parseEdgeList(const std::string& text) {
  std::istringstream in(text);
  return parseEdgeList(in);
}

inline Graph readEdgeListFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parseEdgeList(in);
}

// Edges in id order, then one line for every isolated vertex.
inline void printEdgeList(const Graph& g, std::ostream& out) {
  for (const Edge& e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
  for (std::size_t v = 0; v < g.vertexCount(); ++v)
    if (g.degree(static_cast<Vertex>(v)) == 0) out << g.label(static_cast<Vertex>(v)) << '\n';
}

inline std::string edgeListText(const Graph& g) {
  std::ostringstream out;
  printEdgeList(g, out);
  return out.str();
}

// Whitespace-separated labels of g; unknown labels are a parse error.
inline VertexSet parseVertexSet(const Graph& g, std::istream& in) {
  std::unordered_map<std::string, Vertex> ids;
  for (std::size_t v = 0; v < g.vertexCount(); ++v) ids.emplace(g.label(static_cast<Vertex>(v)), static_cast<Vertex>(v));
  VertexSet s(g.vertexCount());
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    std::istringstream tokens(line);
    for (std::string w; tokens >> w;) {
      if (w[0] == '#') break;
      auto it = ids.find(w);
      if (it == ids.end()) throw ParseError("unknown vertex '" + w + "'", lineNo);
      s.insert(it->second);
    }
  }
  return s;
}

}  // namespace madkit
