#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <queue>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "oneshot/error.hpp"

namespace oneshot {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;
/// Edge indices; most operations normalize to edge order.
using EdgeSet = std::vector<EdgeIndex>;

struct EdgeDescription {
  std::string id;
  std::string tail;
  std::string head;
};

/// Unvalidated network as read from a file or built by hand.
struct NetworkDescription {
  std::vector<std::string> vertices;
  std::vector<EdgeDescription> edges;
  std::string source;
  std::vector<std::string> terminals;
};

struct Edge {
  std::string id;
  VertexIndex tail;
  VertexIndex head;
};

class Network;
Network validate_network(const NetworkDescription& desc);

namespace detail {

/// Kahn's algorithm over edges: an edge becomes ready once every in-edge of
/// its tail has been emitted. `pick` chooses among the ready edges and
/// returns the position to take.
template <class Pick>
std::vector<EdgeIndex> kahn_edge_order(const std::vector<Edge>& edges, std::size_t vertex_count, Pick&& pick) {
  std::vector<std::size_t> pending_in(vertex_count, 0);
  std::vector<std::vector<EdgeIndex>> out(vertex_count);
  for (EdgeIndex e = 0; e < edges.size(); ++e) {
    ++pending_in[edges[e].head];
    out[edges[e].tail].push_back(e);
  }
  std::vector<EdgeIndex> ready;
  for (VertexIndex v = 0; v < vertex_count; ++v)
    if (pending_in[v] == 0) ready.insert(ready.end(), out[v].begin(), out[v].end());

  std::vector<EdgeIndex> order;
  order.reserve(edges.size());
  while (!ready.empty()) {
    const std::size_t pos = pick(std::as_const(ready));
    const EdgeIndex e = ready[pos];
    ready.erase(ready.begin() + static_cast<std::ptrdiff_t>(pos));
    order.push_back(e);
    const VertexIndex h = edges[e].head;
    if (--pending_in[h] == 0) ready.insert(ready.end(), out[h].begin(), out[h].end());
  }
  return order;
}

}  // namespace detail

/// A validated single-source network: a finite acyclic multigraph with a
/// source, a non-empty terminal set and a fixed total order on the edges
/// that extends path precedence. Immutable once built.
class Network {
 public:
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  VertexIndex source() const noexcept { return source_; }
  const std::vector<VertexIndex>& terminals() const noexcept { return terminals_; }
  const std::vector<VertexIndex>& intermediates() const noexcept { return intermediates_; }
  bool is_terminal(VertexIndex v) const { return role_[v] == Role::Terminal; }
  bool is_intermediate(VertexIndex v) const { return role_[v] == Role::Intermediate; }

  /// In/out edges of a vertex, listed in edge order.
  std::span<const EdgeIndex> in_edges(VertexIndex v) const { return in_[v]; }
  std::span<const EdgeIndex> out_edges(VertexIndex v) const { return out_[v]; }
  std::size_t in_degree(VertexIndex v) const { return in_[v].size(); }
  std::size_t out_degree(VertexIndex v) const { return out_[v].size(); }

  const std::vector<EdgeIndex>& edge_order() const noexcept { return order_; }
  std::size_t rank(EdgeIndex e) const { return rank_[e]; }

  const std::string& vertex_name(VertexIndex v) const { return vertices_.at(v); }
  const std::string& edge_id(EdgeIndex e) const { return edges_.at(e).id; }

  VertexIndex vertex(std::string_view name) const {
    auto it = vertex_lookup_.find(std::string(name));
    if (it == vertex_lookup_.end()) throw Error(ErrorKind::UnknownVertex, "no vertex named '" + std::string(name) + "'");
    return it->second;
  }

  EdgeIndex edge(std::string_view id) const {
    auto it = edge_lookup_.find(std::string(id));
    if (it == edge_lookup_.end()) throw Error(ErrorKind::UnknownEdge, "no edge with id '" + std::string(id) + "'");
    return it->second;
  }

  EdgeSet edges_by_id(std::span<const std::string> ids) const {
    EdgeSet s;
    s.reserve(ids.size());
    for (const auto& id : ids) s.push_back(edge(id));
    return ordered(std::move(s));
  }

  /// Sorts by edge order and removes duplicates.
  EdgeSet ordered(EdgeSet s) const {
    for (EdgeIndex e : s)
      if (e >= edges_.size()) throw Error(ErrorKind::UnknownEdge, "edge index " + std::to_string(e) + " out of range");
    std::sort(s.begin(), s.end(), [&](EdgeIndex a, EdgeIndex b) { return rank_[a] < rank_[b]; });
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }

  std::vector<std::string> edge_ids(std::span<const EdgeIndex> s) const {
    std::vector<std::string> ids;
    ids.reserve(s.size());
    for (EdgeIndex e : s) ids.push_back(edge_id(e));
    return ids;
  }

  /// Copy of this network using another total order. Throws InvalidEdgeOrder
  /// unless `order` is a permutation of the edges that extends precedence.
  Network with_edge_order(std::vector<EdgeIndex> order) const {
    if (order.size() != edges_.size()) throw Error(ErrorKind::InvalidEdgeOrder, "order must list every edge once");
    std::vector<std::size_t> rank(edges_.size(), edges_.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (order[i] >= edges_.size() || rank[order[i]] != edges_.size())
        throw Error(ErrorKind::InvalidEdgeOrder, "order must list every edge once");
      rank[order[i]] = i;
    }
    for (EdgeIndex e = 0; e < edges_.size(); ++e)
      for (EdgeIndex f : in_[edges_[e].tail])
        if (rank[f] >= rank[e])
          throw Error(ErrorKind::InvalidEdgeOrder, "edge " + edges_[f].id + " precedes " + edges_[e].id);
    Network copy = *this;
    copy.order_ = std::move(order);
    copy.rank_ = std::move(rank);
    copy.index_adjacency();
    return copy;
  }

  NetworkDescription description() const {
    NetworkDescription d;
    d.vertices = vertices_;
    for (const auto& e : edges_) d.edges.push_back({e.id, vertices_[e.tail], vertices_[e.head]});
    d.source = vertices_[source_];
    for (VertexIndex t : terminals_) d.terminals.push_back(vertices_[t]);
    return d;
  }

 private:
  enum class Role { Source, Terminal, Intermediate };

  Network() = default;
  friend Network validate_network(const NetworkDescription& desc);

  void index_adjacency() {
    in_.assign(vertices_.size(), {});
    out_.assign(vertices_.size(), {});
    for (EdgeIndex e : order_) {
      out_[edges_[e].tail].push_back(e);
      in_[edges_[e].head].push_back(e);
    }
  }

  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  VertexIndex source_ = 0;
  std::vector<VertexIndex> terminals_;
  std::vector<VertexIndex> intermediates_;
  std::vector<Role> role_;
  std::vector<EdgeIndex> order_;
  std::vector<std::size_t> rank_;
  std::vector<std::vector<EdgeIndex>> in_;
  std::vector<std::vector<EdgeIndex>> out_;
  std::unordered_map<std::string, VertexIndex> vertex_lookup_;
  std::unordered_map<std::string, EdgeIndex> edge_lookup_;
};

/// Deterministic total order: topological over edges, ties broken by the
/// lexicographically smallest edge id.
inline std::vector<EdgeIndex> total_edge_order(const Network& net) {
  const auto& edges = net.edges();
  return detail::kahn_edge_order(edges, net.vertex_count(), [&](const std::vector<EdgeIndex>& ready) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < ready.size(); ++i)
      if (edges[ready[i]].id < edges[ready[best]].id) best = i;
    return best;
  });
}

/// A uniformly chosen ready edge at every Kahn step; always a valid extension.
template <class URBG>
std::vector<EdgeIndex> sample_edge_order(const Network& net, URBG& rng) {
  return detail::kahn_edge_order(net.edges(), net.vertex_count(), [&](const std::vector<EdgeIndex>& ready) {
    return std::uniform_int_distribution<std::size_t>(0, ready.size() - 1)(rng);
  });
}

inline Network validate_network(const NetworkDescription& desc) {
  Network net;
  const std::size_t nv = desc.vertices.size();
  for (VertexIndex v = 0; v < nv; ++v) {
    if (!net.vertex_lookup_.emplace(desc.vertices[v], v).second)
      throw Error(ErrorKind::DuplicateVertex, "vertex '" + desc.vertices[v] + "' listed twice");
  }
  net.vertices_ = desc.vertices;
  auto lookup = [&](const std::string& name) { return net.vertex(name); };

  for (EdgeIndex e = 0; e < desc.edges.size(); ++e) {
    const auto& ed = desc.edges[e];
    if (!net.edge_lookup_.emplace(ed.id, e).second)
      throw Error(ErrorKind::DuplicateEdge, "edge id '" + ed.id + "' used twice");
    net.edges_.push_back({ed.id, lookup(ed.tail), lookup(ed.head)});
  }
  net.source_ = lookup(desc.source);

  if (desc.terminals.empty()) throw Error(ErrorKind::EmptyTerminals, "at least one terminal is required");
  net.role_.assign(nv, Network::Role::Intermediate);
  net.role_[net.source_] = Network::Role::Source;
  for (const auto& name : desc.terminals) {
    const VertexIndex t = lookup(name);
    if (t == net.source_) throw Error(ErrorKind::SourceIsTerminal, "source '" + name + "' is also a terminal");
    if (net.role_[t] == Network::Role::Terminal) throw Error(ErrorKind::DuplicateVertex, "terminal '" + name + "' listed twice");
    net.role_[t] = Network::Role::Terminal;
    net.terminals_.push_back(t);
  }

  // Acyclic iff every edge gets scheduled.
  auto order = detail::kahn_edge_order(net.edges_, nv, [](const std::vector<EdgeIndex>&) { return std::size_t{0}; });
  if (order.size() != net.edges_.size()) throw Error(ErrorKind::CyclicGraph, "the graph contains a directed cycle");

  for (const auto& e : net.edges_)
    if (net.role_[e.tail] == Network::Role::Terminal)
      throw Error(ErrorKind::TerminalHasOutEdges, "terminal '" + net.vertices_[e.tail] + "' has outgoing edge " + e.id);

  std::vector<std::vector<VertexIndex>> succ(nv), pred(nv);
  for (const auto& e : net.edges_) {
    succ[e.tail].push_back(e.head);
    pred[e.head].push_back(e.tail);
  }
  auto flood = [&](std::vector<VertexIndex> seeds, const std::vector<std::vector<VertexIndex>>& adj) {
    std::vector<char> seen(nv, 0);
    for (VertexIndex s : seeds) seen[s] = 1;
    while (!seeds.empty()) {
      const VertexIndex v = seeds.back();
      seeds.pop_back();
      for (VertexIndex w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          seeds.push_back(w);
        }
    }
    return seen;
  };
  const auto from_source = flood({net.source_}, succ);
  for (VertexIndex t : net.terminals_)
    if (!from_source[t])
      throw Error(ErrorKind::NoSourceTerminalPath, "no directed path from source to terminal '" + net.vertices_[t] + "'");
  const auto to_terminal = flood(net.terminals_, pred);
  for (VertexIndex v = 0; v < nv; ++v) {
    if (net.role_[v] != Network::Role::Intermediate) continue;
    if (!from_source[v] || !to_terminal[v])
      throw Error(ErrorKind::OrphanIntermediate, "vertex '" + net.vertices_[v] + "' is not on any source-terminal path");
    net.intermediates_.push_back(v);
  }

  net.order_.assign(net.edges_.size(), 0);
  std::iota(net.order_.begin(), net.order_.end(), EdgeIndex{0});
  net.rank_ = net.order_;
  net.index_adjacency();
  return net.with_edge_order(total_edge_order(net));
}

}  // namespace oneshot
