#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oneshot/core/adversary.hpp"
#include "oneshot/core/cuts.hpp"
#include "oneshot/core/network.hpp"

namespace oneshot {

/// Cut-set bound in symbols. A code meeting it has at most q^value words.
struct BoundReport {
  std::size_t value = 0;
  Cut witness;
};

/// |E' \ U| + max{0, |E' ∩ U| - 2t}
inline std::size_t singleton_cut_value(const Adversary& adv, const EdgeSet& cut) {
  std::size_t exposed = 0;
  for (EdgeIndex e : cut) exposed += adv.is_vulnerable(e);
  const std::size_t safe = cut.size() - exposed;
  const std::size_t twice_t = 2 * adv.budget();
  return safe + (exposed > twice_t ? exposed - twice_t : 0);
}

namespace detail {

inline bool rank_less(const Network& net, const EdgeSet& a, const EdgeSet& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [&](EdgeIndex x, EdgeIndex y) { return net.rank(x) < net.rank(y); });
}

}  // namespace detail

/// Minimum of the Singleton cut functional over all terminals and all
/// bipartition cuts. Ties go to the cut whose edge list is lexicographically
/// least in edge order, then to the earlier terminal.
inline BoundReport singleton_cutset_bound(const Network& net, const Adversary& adv) {
  std::optional<BoundReport> best;
  for (VertexIndex t : net.terminals()) {
    for (auto& cut : enumerate_cuts(net, t)) {
      const std::size_t v = singleton_cut_value(adv, cut.edges);
      if (!best || v < best->value || (v == best->value && detail::rank_less(net, cut.edges, best->witness.edges)))
        best = BoundReport{v, std::move(cut)};
    }
  }
  return *best;
}

/// Single-terminal network in which every source-terminal path has two edges.
inline bool is_two_level(const Network& net) {
  if (net.terminals().size() != 1)
    throw Error(ErrorKind::MultipleTerminals, "two-level networks have exactly one terminal");
  const VertexIndex s = net.source();
  const VertexIndex t = net.terminals().front();
  for (const auto& e : net.edges()) {
    const bool first_level = e.tail == s && net.is_intermediate(e.head);
    const bool second_level = net.is_intermediate(e.tail) && e.head == t;
    if (!first_level && !second_level) return false;
  }
  return true;
}

struct PartitionReport {
  std::size_t value = 0;
  std::vector<VertexIndex> forwarding;  // V1: contributes its out-degree
  std::vector<VertexIndex> coded;       // V2: contributes its in-degree, less 2t
};

namespace detail {

inline void require_two_level(const Network& net, const Adversary& adv) {
  if (!is_two_level(net)) throw Error(ErrorKind::NotTwoLevel, "some source-terminal path does not have length 2");
  for (EdgeIndex e : adv.vulnerable())
    if (net.edges()[e].tail != net.source())
      throw Error(ErrorKind::AdversaryNotFirstLevel, "vulnerable edge " + net.edge_id(e) + " is not on the first level");
  if (net.intermediates().size() > kMaxBipartitionVertices)
    throw Error(ErrorKind::TooManyIntermediates, std::to_string(net.intermediates().size()) +
                                                     " intermediate vertices exceed the limit of " +
                                                     std::to_string(kMaxBipartitionVertices));
}

}  // namespace detail

/// Value of one 2-partition: sum of out-degrees over `forwarding` plus the
/// Singleton term for the first-level edges into `coded`. With every
/// first-level edge vulnerable this is
///   sum_{V1} outdeg + max{0, sum_{V2} indeg - 2t}.
inline std::size_t two_level_partition_value(const Network& net, const Adversary& adv,
                                             const std::vector<VertexIndex>& forwarding,
                                             const std::vector<VertexIndex>& coded) {
  std::size_t value = 0, exposed = 0;
  for (VertexIndex v : forwarding) value += net.out_degree(v);
  for (VertexIndex v : coded)
    for (EdgeIndex e : net.in_edges(v)) {
      if (adv.is_vulnerable(e))
        ++exposed;
      else
        ++value;
    }
  const std::size_t twice_t = 2 * adv.budget();
  return value + (exposed > twice_t ? exposed - twice_t : 0);
}

/// Exact minimum over all 2^n partitions of the intermediate vertices. Ties
/// go to the lexicographically least forwarding set.
inline PartitionReport two_level_bound(const Network& net, const Adversary& adv) {
  detail::require_two_level(net, adv);
  const auto& mids = net.intermediates();
  std::optional<PartitionReport> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << mids.size()); ++mask) {
    PartitionReport r;
    for (std::size_t i = 0; i < mids.size(); ++i) ((mask >> i) & 1 ? r.forwarding : r.coded).push_back(mids[i]);
    r.value = two_level_partition_value(net, adv, r.forwarding, r.coded);
    if (!best || r.value < best->value || (r.value == best->value && r.forwarding < best->forwarding))
      best = std::move(r);
  }
  return *best;
}

/// Intermediate vertices with outdeg + 1 <= indeg <= outdeg + 2t - 1.
inline std::vector<VertexIndex> damming_vertices(const Network& net, std::size_t t) {
  std::vector<VertexIndex> out;
  for (VertexIndex v : net.intermediates()) {
    const std::size_t in = net.in_degree(v), o = net.out_degree(v);
    if (t >= 1 && in >= o + 1 && in + 1 <= o + 2 * t) out.push_back(v);
  }
  return out;
}

}  // namespace oneshot
