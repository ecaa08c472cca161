#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "madkit/errors.hpp"
#include "madkit/graph.hpp"
#include "madkit/rational.hpp"

namespace madkit {

using Capacity = std::int64_t;

// Three-layer network for a density threshold c, every capacity multiplied
// by `scale` so that it is an integer:
//   source -> edgeNode(e)          capacity scale          (one per edge)
//   edgeNode(uw) -> vertexNode(u), vertexNode(w)   "infinite" (2*scale*|E|+1)
//   vertexNode(v) -> sink          capacity c*scale        (one per vertex)
// Arcs are numbered in exactly that construction order, edges lexicographic.
class FlowNetwork {
 public:
  struct Arc {
    std::int32_t tail;
    std::int32_t head;
    Capacity capacity;
  };

  static constexpr std::int32_t kSource = 0;
  static constexpr std::int32_t kSink = 1;

  FlowNetwork(const Graph& g, const Rational& c, std::optional<WideInt> scale = std::nullopt)
      : m_(g.edgeCount()), n_(g.vertexCount()), threshold_(c) {
    if (c < Rational(0)) throw std::invalid_argument("density threshold must be non-negative");
    WideInt q = scale.value_or(c.den());
    if (q <= 0 || q % c.den() != 0)
      throw std::invalid_argument("scale must be a positive multiple of the threshold's denominator");
    scale_ = wide::narrow(q);
    sinkCapacity_ = wide::narrow(wide::mul(c.num(), q / c.den()));
    infinite_ = wide::narrow(wide::add(wide::mul(wide::mul(2, q), static_cast<WideInt>(m_)), 1));

    arcs_.reserve(3 * m_ + n_);
    for (std::size_t e = 0; e < m_; ++e) arcs_.push_back({kSource, edgeNode(e), scale_});
    for (std::size_t e = 0; e < m_; ++e) {
      const Edge& ed = g.edges()[e];
      arcs_.push_back({edgeNode(e), vertexNode(ed.u), infinite_});
      arcs_.push_back({edgeNode(e), vertexNode(ed.v), infinite_});
    }
    for (std::size_t v = 0; v < n_; ++v) arcs_.push_back({vertexNode(v), kSink, sinkCapacity_});
  }

  std::size_t nodeCount() const noexcept { return 2 + m_ + n_; }
  std::int32_t edgeNode(std::size_t e) const { return static_cast<std::int32_t>(2 + e); }
  std::int32_t vertexNode(std::size_t v) const { return static_cast<std::int32_t>(2 + m_ + v); }

  std::size_t sourceArc(std::size_t e) const { return e; }
  // side 0: towards the smaller endpoint of the edge, side 1: the larger one.
  std::size_t splitArc(std::size_t e, int side) const { return m_ + 2 * e + side; }
  std::size_t sinkArc(std::size_t v) const { return 3 * m_ + v; }

  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  std::size_t graphEdgeCount() const noexcept { return m_; }
  std::size_t graphVertexCount() const noexcept { return n_; }

  const Rational& threshold() const noexcept { return threshold_; }
  Capacity scale() const noexcept { return scale_; }
  Capacity sinkCapacity() const noexcept { return sinkCapacity_; }
  Capacity infiniteCapacity() const noexcept { return infinite_; }
  // Value of a flow saturating every source arc.
  WideInt saturatedValue() const { return wide::mul(scale_, static_cast<WideInt>(m_)); }

 private:
  std::size_t m_;
  std::size_t n_;
  Rational threshold_;
  Capacity scale_ = 1;
  Capacity sinkCapacity_ = 0;
  Capacity infinite_ = 1;
  std::vector<Arc> arcs_;
};

inline FlowNetwork buildNetwork(const Graph& g, const Rational& c, std::optional<WideInt> scale = std::nullopt) {
  return FlowNetwork(g, c, scale);
}

struct Flow {
  std::vector<Capacity> arcFlow;  // indexed like FlowNetwork::arcs()
  WideInt value = 0;
};

namespace detail {

// Residual graph in CSR form. Arc i of the network becomes residual arcs
// 2i (forward) and 2i+1 (backward); per-node lists follow construction order.
class Residual {
 public:
  explicit Residual(const FlowNetwork& net) : nodes_(net.nodeCount()) {
    const auto& arcs = net.arcs();
    head_.resize(2 * arcs.size());
    cap_.resize(2 * arcs.size());
    offset_.assign(nodes_ + 1, 0);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      head_[2 * i] = arcs[i].head;
      head_[2 * i + 1] = arcs[i].tail;
      cap_[2 * i] = arcs[i].capacity;
      cap_[2 * i + 1] = 0;
      ++offset_[arcs[i].tail + 1];
      ++offset_[arcs[i].head + 1];
    }
    for (std::size_t v = 0; v < nodes_; ++v) offset_[v + 1] += offset_[v];
    adj_.resize(2 * arcs.size());
    std::vector<std::size_t> fill(offset_.begin(), offset_.end() - 1);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      adj_[fill[arcs[i].tail]++] = static_cast<std::int32_t>(2 * i);
      adj_[fill[arcs[i].head]++] = static_cast<std::int32_t>(2 * i + 1);
    }
  }

  WideInt maxFlow(std::int32_t s, std::int32_t t) {
    WideInt total = 0;
    std::vector<std::int32_t> level(nodes_);
    std::vector<std::size_t> it(nodes_);
    std::vector<std::int32_t> queue;
    std::vector<std::int32_t> path;
    queue.reserve(nodes_);
    while (true) {
      std::fill(level.begin(), level.end(), -1);
      level[s] = 0;
      queue.assign(1, s);
      for (std::size_t h = 0; h < queue.size() && level[t] < 0; ++h) {
        std::int32_t v = queue[h];
        for (std::size_t k = offset_[v]; k < offset_[v + 1]; ++k) {
          std::int32_t a = adj_[k];
          if (cap_[a] > 0 && level[head_[a]] < 0) {
            level[head_[a]] = level[v] + 1;
            queue.push_back(head_[a]);
          }
        }
      }
      if (level[t] < 0) break;
      for (std::size_t v = 0; v < nodes_; ++v) it[v] = offset_[v];

      // Blocking flow with an explicit path stack.
      path.clear();
      std::int32_t v = s;
      while (true) {
        if (v == t) {
          Capacity push = cap_[path[0]];
          for (std::int32_t a : path) push = std::min(push, cap_[a]);
          std::size_t firstSaturated = path.size();
          for (std::size_t i = 0; i < path.size(); ++i) {
            cap_[path[i]] -= push;
            cap_[path[i] ^ 1] += push;
            if (cap_[path[i]] == 0 && firstSaturated == path.size()) firstSaturated = i;
          }
          total += push;
          path.resize(firstSaturated);
          v = path.empty() ? s : head_[path.back()];
          continue;
        }
        bool advanced = false;
        for (; it[v] < offset_[v + 1]; ++it[v]) {
          std::int32_t a = adj_[it[v]];
          if (cap_[a] > 0 && level[head_[a]] == level[v] + 1) {
            path.push_back(a);
            v = head_[a];
            advanced = true;
            break;
          }
        }
        if (advanced) continue;
        level[v] = -1;  // dead end for this phase
        if (path.empty()) break;
        std::int32_t a = path.back();
        path.pop_back();
        v = head_[a ^ 1];
        ++it[v];
      }
    }
    return total;
  }

  Capacity residual(std::size_t residualArc) const { return cap_[residualArc]; }

 private:
  std::size_t nodes_;
  std::vector<std::int32_t> head_;
  std::vector<Capacity> cap_;
  std::vector<std::size_t> offset_;
  std::vector<std::int32_t> adj_;
};

}  // namespace detail

// Integral maximum source-sink flow (level-graph augmentation). Deterministic
// for a given network because residual lists follow arc construction order.
inline Flow maxFlow(const FlowNetwork& net) {
  detail::Residual res(net);
  Flow f;
  f.value = res.maxFlow(FlowNetwork::kSource, FlowNetwork::kSink);
  const auto& arcs = net.arcs();
  f.arcFlow.resize(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) f.arcFlow[i] = arcs[i].capacity - res.residual(2 * i);
  return f;
}

// Empty optional when `f` respects every capacity and is conserved at every
// inner node; otherwise a description of the first violation.
inline std::optional<std::string> checkFlow(const FlowNetwork& net, const Flow& f) {
  const auto& arcs = net.arcs();
  if (f.arcFlow.size() != arcs.size()) return "flow has wrong arc count";
  std::vector<WideInt> balance(net.nodeCount(), 0);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (f.arcFlow[i] < 0 || f.arcFlow[i] > arcs[i].capacity)
      return "arc " + std::to_string(i) + " violates its capacity";
    balance[arcs[i].tail] -= f.arcFlow[i];
    balance[arcs[i].head] += f.arcFlow[i];
  }
  for (std::size_t v = 2; v < net.nodeCount(); ++v)
    if (balance[v] != 0) return "conservation violated at node " + std::to_string(v);
  if (balance[FlowNetwork::kSink] != f.value || balance[FlowNetwork::kSource] != -f.value)
    return "flow value does not match terminal balance";
  return std::nullopt;
}

// Graph vertices whose nodes are reachable from the source in the residual
// network of a maximum flow. Their sink arcs are saturated and form, with
// the source arcs of the unreachable edge nodes, a minimum cut.
inline VertexSet minCutVertexSide(const FlowNetwork& net, const Flow& f) {
  const auto& arcs = net.arcs();
  std::vector<std::vector<std::int32_t>> out(net.nodeCount());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (f.arcFlow[i] < arcs[i].capacity) out[arcs[i].tail].push_back(arcs[i].head);
    if (f.arcFlow[i] > 0) out[arcs[i].head].push_back(arcs[i].tail);
  }
  std::vector<char> seen(net.nodeCount(), 0);
  std::vector<std::int32_t> stack{FlowNetwork::kSource};
  seen[FlowNetwork::kSource] = 1;
  while (!stack.empty()) {
    std::int32_t v = stack.back();
    stack.pop_back();
    for (std::int32_t w : out[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  VertexSet w(net.graphVertexCount());
  for (std::size_t v = 0; v < net.graphVertexCount(); ++v)
    if (seen[net.vertexNode(v)]) w.insert(static_cast<Vertex>(v));
  return w;
}

}  // namespace madkit
