#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "madkit/graph.hpp"

namespace madkit::gen {

inline Graph path(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 1; i < n; ++i) e.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
  return Graph(n, std::move(e));
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Graph(n, std::move(e));
}

inline Graph complete(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph(n, std::move(e));
}

inline Graph star(std::size_t leaves) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, static_cast<Vertex>(i));
  return Graph(leaves + 1, std::move(e));
}

inline Graph grid(std::size_t rows, std::size_t cols) {
  std::vector<std::pair<Vertex, Vertex>> e;
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
    }
  return Graph(rows * cols, std::move(e));
}

// Random recursive tree: vertex i attaches to a uniform earlier vertex.
inline Graph tree(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    e.emplace_back(static_cast<Vertex>(pick(rng)), static_cast<Vertex>(i));
  }
  return Graph(n, std::move(e));
}

// Uniform graph with exactly m distinct edges on n vertices.
inline Graph gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::uint64_t maxEdges = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (m > maxEdges) throw std::invalid_argument("too many edges requested for gnm");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> e;
  e.reserve(m);
  if (2 * m > maxEdges) {
    // Dense: shuffle the full pair list and keep a prefix.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    std::shuffle(e.begin(), e.end(), rng);
    e.resize(m);
  } else {
    std::unordered_set<std::uint64_t> used;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    while (e.size() < m) {
      std::size_t a = pick(rng), b = pick(rng);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      if (!used.insert(static_cast<std::uint64_t>(a) * n + b).second) continue;
      e.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
  }
  return Graph(n, std::move(e));
}

// Disjoint union, second graph's vertices shifted past the first's.
inline Graph disjointUnion(const Graph& a, const Graph& b) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (const Edge& x : a.edges()) e.emplace_back(x.u, x.v);
  const auto shift = static_cast<Vertex>(a.vertexCount());
  for (const Edge& x : b.edges()) e.emplace_back(x.u + shift, x.v + shift);
  return Graph(a.vertexCount() + b.vertexCount(), std::move(e));
}

// Graph on n vertices whose edges are the set bits of `mask` over the
// lexicographic pair list (0,1), (0,2), ..., (n-2,n-1).
inline Graph fromEdgeMask(std::size_t n, std::uint64_t mask) {
  std::vector<std::pair<Vertex, Vertex>> e;
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++bit)
      if (mask >> bit & 1u) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph(n, std::move(e));
}

}  // namespace madkit::gen
