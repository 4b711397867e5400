#pragma once

#include <cstdint>
#include <vector>

#include "oneshot/core/network.hpp"

namespace oneshot {

struct Cut {
  EdgeSet edges;  // in edge order
  VertexIndex terminal = 0;
};

/// Vertices reachable from `from` without using any edge in `removed`.
inline std::vector<char> reachable_without(const Network& net, VertexIndex from, const EdgeSet& removed) {
  std::vector<char> blocked(net.edge_count(), 0);
  for (EdgeIndex e : removed) blocked[e] = 1;
  std::vector<char> seen(net.vertex_count(), 0);
  std::vector<VertexIndex> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    const VertexIndex v = stack.back();
    stack.pop_back();
    for (EdgeIndex e : net.out_edges(v)) {
      const VertexIndex h = net.edges()[e].head;
      if (!blocked[e] && !seen[h]) {
        seen[h] = 1;
        stack.push_back(h);
      }
    }
  }
  return seen;
}

/// True iff every directed path that starts at the source and ends with an
/// edge of `targets` contains an edge of `through`.
inline bool precedes(const Network& net, const EdgeSet& through, const EdgeSet& targets) {
  std::vector<char> in_through(net.edge_count(), 0);
  for (EdgeIndex e : through) in_through[e] = 1;
  const auto reach = reachable_without(net, net.source(), through);
  for (EdgeIndex e : targets)
    if (!in_through[e] && reach[net.edges()[e].tail]) return false;
  return true;
}

/// Edges whose values determine the exit values of `targets` once the
/// entering values of `through` are fixed: the targets, plus, for every cone
/// edge outside `through`, all in-edges of its tail. The closure stops at
/// `through`. Reaching an edge leaving the source outside `through` means
/// `through` does not precede `targets`. Result is in edge order.
inline EdgeSet influence_cone(const Network& net, const EdgeSet& through, const EdgeSet& targets) {
  std::vector<char> in_through(net.edge_count(), 0), in_cone(net.edge_count(), 0);
  for (EdgeIndex e : through) in_through[e] = 1;
  std::vector<EdgeIndex> stack;
  for (EdgeIndex e : targets)
    if (!in_cone[e]) {
      in_cone[e] = 1;
      stack.push_back(e);
    }
  while (!stack.empty()) {
    const EdgeIndex e = stack.back();
    stack.pop_back();
    if (in_through[e]) continue;
    const VertexIndex tail = net.edges()[e].tail;
    if (tail == net.source())
      throw Error(ErrorKind::ConeClosureViolation,
                  "edge " + net.edge_id(e) + " is reachable from the source without crossing the input set");
    for (EdgeIndex f : net.in_edges(tail))
      if (!in_cone[f]) {
        in_cone[f] = 1;
        stack.push_back(f);
      }
  }
  EdgeSet cone;
  for (EdgeIndex e : net.edge_order())
    if (in_cone[e]) cone.push_back(e);
  return cone;
}

/// Upper limit on intermediate vertices for exhaustive bipartition sweeps.
inline constexpr std::size_t kMaxBipartitionVertices = 20;

/// One cut per bipartition (L, R) of the intermediate vertices with the
/// source in L and `terminal` in R; other terminals stay in L since they have
/// no out-edges. Bit i of the enumeration index places intermediates()[i] in L.
inline std::vector<Cut> enumerate_cuts(const Network& net, VertexIndex terminal) {
  if (!net.is_terminal(terminal)) throw Error(ErrorKind::UnknownVertex, net.vertex_name(terminal) + " is not a terminal");
  const auto& mids = net.intermediates();
  if (mids.size() > kMaxBipartitionVertices)
    throw Error(ErrorKind::TooManyIntermediates, std::to_string(mids.size()) + " intermediate vertices exceed the limit of " +
                                                     std::to_string(kMaxBipartitionVertices));
  std::vector<Cut> cuts;
  cuts.reserve(std::size_t{1} << mids.size());
  std::vector<char> left(net.vertex_count(), 1);
  left[terminal] = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << mids.size()); ++mask) {
    for (std::size_t i = 0; i < mids.size(); ++i) left[mids[i]] = (mask >> i) & 1;
    Cut c{{}, terminal};
    for (EdgeIndex e : net.edge_order()) {
      const auto& edge = net.edges()[e];
      if (left[edge.tail] && !left[edge.head]) c.edges.push_back(e);
    }
    cuts.push_back(std::move(c));
  }
  return cuts;
}

}  // namespace oneshot
