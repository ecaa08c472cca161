#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace madkit {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

struct Edge {
  Vertex u;  // u < v
  Vertex v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Subset of the vertices 0..n-1 of some host graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : member_(universe, 0) {}
  VertexSet(std::size_t universe, std::span<const Vertex> members) : member_(universe, 0) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet all(std::size_t universe) {
    VertexSet s(universe);
    std::fill(s.member_.begin(), s.member_.end(), 1);
    s.size_ = universe;
    return s;
  }

  std::size_t universe() const noexcept { return member_.size(); }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool contains(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < member_.size() && member_[v]; }

  void insert(Vertex v) {
    check(v);
    if (!member_[v]) {
      member_[v] = 1;
      ++size_;
    }
  }
  void erase(Vertex v) {
    check(v);
    if (member_[v]) {
      member_[v] = 0;
      --size_;
    }
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(size_);
    for (std::size_t v = 0; v < member_.size(); ++v)
      if (member_[v]) out.push_back(static_cast<Vertex>(v));
    return out;
  }

  VertexSet complement() const {
    VertexSet c(member_.size());
    for (std::size_t v = 0; v < member_.size(); ++v)
      if (!member_[v]) c.insert(static_cast<Vertex>(v));
    return c;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void check(Vertex v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= member_.size())
      throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " +
                              std::to_string(member_.size()));
  }

  std::vector<char> member_;
  std::size_t size_ = 0;
};

// Simple undirected graph on dense vertex ids, immutable after construction.
// Edges are kept sorted lexicographically with u < v; adjacency lists are sorted
// and carry the id of the connecting edge.
class Graph {
 public:
  struct Incidence {
    Vertex neighbor;
    EdgeId edge;
  };

  Graph() = default;

  // Throws std::invalid_argument on self-loops, duplicates or out-of-range ids.
  Graph(std::size_t vertexCount, std::vector<std::pair<Vertex, Vertex>> edgeList,
        std::vector<std::string> labels = {})
      : n_(vertexCount), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != n_)
      throw std::invalid_argument("label count does not match vertex count");
    if (n_ > static_cast<std::size_t>(std::numeric_limits<Vertex>::max()))
      throw std::invalid_argument("too many vertices");
    edges_.reserve(edgeList.size());
    for (auto [a, b] : edgeList) {
      if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n_ || static_cast<std::size_t>(b) >= n_)
        throw std::invalid_argument("edge endpoint out of range: " + std::to_string(a) + " " + std::to_string(b));
      if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
      edges_.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
      throw std::invalid_argument("duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));

    offsets_.assign(n_ + 1, 0);
    for (const Edge& e : edges_) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
    incidence_.resize(2 * edges_.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      incidence_[fill[edges_[e].u]++] = {edges_[e].v, static_cast<EdgeId>(e)};
      incidence_[fill[edges_[e].v]++] = {edges_[e].u, static_cast<EdgeId>(e)};
    }
    for (std::size_t v = 0; v < n_; ++v) {
      std::sort(incidence_.begin() + offsets_[v], incidence_.begin() + offsets_[v + 1],
                [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
    }
  }

  std::size_t vertexCount() const noexcept { return n_; }
  std::size_t edgeCount() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  std::span<const Incidence> incident(Vertex v) const {
    return {incidence_.data() + offsets_[v], incidence_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool adjacent(Vertex a, Vertex b) const {
    auto inc = incident(a);
    auto it = std::lower_bound(inc.begin(), inc.end(), b,
                               [](const Incidence& i, Vertex x) { return i.neighbor < x; });
    return it != inc.end() && it->neighbor == b;
  }

  bool hasLabels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Vertex v) const { return labels_.empty() ? std::to_string(v) : labels_.at(v); }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> incidence_;
  std::vector<std::string> labels_;
};

struct Subgraph {
  Graph graph;
  std::vector<Vertex> toOriginal;  // subgraph vertex -> host vertex
};

inline Subgraph inducedSubgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.vertexCount())
    throw std::out_of_range("vertex set universe does not match graph");
  Subgraph out;
  out.toOriginal = s.members();
  std::vector<Vertex> toLocal(g.vertexCount(), -1);
  for (std::size_t i = 0; i < out.toOriginal.size(); ++i) toLocal[out.toOriginal[i]] = static_cast<Vertex>(i);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const Edge& e : g.edges())
    if (toLocal[e.u] >= 0 && toLocal[e.v] >= 0) edges.emplace_back(toLocal[e.u], toLocal[e.v]);
  std::vector<std::string> labels;
  if (g.hasLabels())
    for (Vertex v : out.toOriginal) labels.push_back(g.labels()[v]);
  out.graph = Graph(out.toOriginal.size(), std::move(edges), std::move(labels));
  return out;
}

// Number of edges of g with both endpoints in s.
inline std::size_t inducedEdgeCount(const Graph& g, const VertexSet& s) {
  std::size_t count = 0;
  for (const Edge& e : g.edges())
    if (s.contains(e.u) && s.contains(e.v)) ++count;
  return count;
}

struct DegeneracyResult {
  int degeneracy = -1;  // -1 for the graph without vertices
  std::vector<Vertex> order;
};

// Repeatedly removes a minimum-degree vertex (smallest id on ties).
// The result's order is the elimination sequence; at its removal, each
// vertex has at most `degeneracy` neighbours that are still present.
inline DegeneracyResult degeneracy(const Graph& g) {
  DegeneracyResult res;
  const std::size_t n = g.vertexCount();
  std::vector<std::size_t> deg(n);
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = g.degree(static_cast<Vertex>(v));
    queue.emplace(deg[v], static_cast<Vertex>(v));
  }
  std::vector<char> removed(n, 0);
  res.order.reserve(n);
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    res.degeneracy = std::max(res.degeneracy, static_cast<int>(d));
    removed[v] = 1;
    res.order.push_back(v);
    for (const auto& inc : g.incident(v)) {
      Vertex w = inc.neighbor;
      if (removed[w]) continue;
      queue.erase({deg[w], w});
      queue.emplace(--deg[w], w);
    }
  }
  return res;
}

struct DegenerateCheck {
  bool ok = true;
  std::vector<Vertex> order;
};

inline DegenerateCheck isKDegenerate(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  auto d = degeneracy(g);
  return {d.degeneracy <= k, std::move(d.order)};
}

// True iff removing vertices in `order` never removes a vertex with more
// than k neighbours still present. `order` must be a permutation of V(g).
inline bool replayEliminationOrder(const Graph& g, std::span<const Vertex> order, int k) {
  if (order.size() != g.vertexCount()) return false;
  std::vector<char> gone(g.vertexCount(), 0);
  for (Vertex v : order) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.vertexCount() || gone[v]) return false;
    int present = 0;
    for (const auto& inc : g.incident(v))
      if (!gone[inc.neighbor]) ++present;
    if (present > k) return false;
    gone[v] = 1;
  }
  return true;
}

// Length of a shortest cycle, or nullopt (infinity) for forests.
inline std::optional<std::size_t> girth(const Graph& g) {
  const std::size_t n = g.vertexCount();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::int64_t> dist(n, -1);
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> touched;
  std::vector<Vertex> queue;
  for (std::size_t src = 0; src < n; ++src) {
    queue.assign(1, static_cast<Vertex>(src));
    dist[src] = 0;
    touched.assign(1, static_cast<Vertex>(src));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      // No shorter cycle through src can be found past this depth.
      if (2 * static_cast<std::size_t>(dist[v]) + 1 >= best) break;
      for (const auto& inc : g.incident(v)) {
        Vertex w = inc.neighbor;
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          touched.push_back(w);
          queue.push_back(w);
        } else if (parent[v] != w) {
          best = std::min(best, static_cast<std::size_t>(dist[v] + dist[w] + 1));
        }
      }
    }
    for (Vertex v : touched) {
      dist[v] = -1;
      parent[v] = -1;
    }
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best;
}

inline std::size_t maxDegree(const Graph& g) {
  std::size_t best = 0;
  for (std::size_t v = 0; v < g.vertexCount(); ++v) best = std::max(best, g.degree(static_cast<Vertex>(v)));
  return best;
}

// Components ordered by their smallest vertex.
inline std::vector<VertexSet> connectedComponents(const Graph& g) {
  const std::size_t n = g.vertexCount();
  std::vector<char> seen(n, 0);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp(n);
    seen[s] = 1;
    stack.assign(1, static_cast<Vertex>(s));
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.insert(v);
      for (const auto& inc : g.incident(v))
        if (!seen[inc.neighbor]) {
          seen[inc.neighbor] = 1;
          stack.push_back(inc.neighbor);
        }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool isIndependentSet(const Graph& g, const VertexSet& s) {
  for (const Edge& e : g.edges())
    if (s.contains(e.u) && s.contains(e.v)) return false;
  return true;
}

inline bool isForest(const Graph& g) {
  return g.edgeCount() + connectedComponents(g).size() == g.vertexCount();
}

}  // namespace madkit
