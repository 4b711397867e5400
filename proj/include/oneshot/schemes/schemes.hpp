#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oneshot/analysis/unambiguity.hpp"
#include "oneshot/bounds/bounds.hpp"
#include "oneshot/catalog.hpp"
#include "oneshot/core/network_code.hpp"
#include "oneshot/core/outer_code.hpp"
#include "oneshot/schemes/reed_solomon.hpp"

namespace oneshot {

/// A network code together with the outer code it is meant to carry.
struct Scheme {
  std::string name;
  NetworkCode code;
  OuterCode outer;
  std::optional<Symbol> reserved;

  std::uint64_t size() const { return outer.size(); }
  std::string rate_string() const { return format_rate(outer.size(), code.alphabet().size()); }
};

namespace detail {

/// Intermediate vertices fed only by the source and feeding only the single
/// terminal, keyed by in-degree. Throws UnsupportedTopology otherwise.
inline std::vector<VertexIndex> parallel_relays(const Network& net, std::size_t expected, const char* what) {
  auto fail = [&] { throw Error(ErrorKind::UnsupportedTopology, std::string("network is not a ") + what); };
  if (net.terminals().size() != 1 || net.intermediates().size() != expected) fail();
  try {
    if (!is_two_level(net)) fail();
  } catch (const Error&) {
    fail();
  }
  for (VertexIndex v : net.intermediates())
    if (net.out_degree(v) != 1) fail();
  return net.intermediates();
}

inline Word repeat(Symbol a, std::size_t n) { return Word(n, a); }

/// a if both inputs equal a and a may be forwarded, the reserved symbol otherwise.
inline Word agree_or_alarm(std::span<const Symbol> in, Symbol reserved, bool forward_reserved) {
  const bool agree = in[0] == in[1] && (forward_reserved || in[0] != reserved);
  return {agree ? in[0] : reserved};
}

}  // namespace detail

/// Repetition over the symbols other than the reserved q-1. V1 forwards; V2
/// forwards when its two inputs agree on a non-reserved symbol and sends the
/// reserved symbol otherwise, including on input (q-1, q-1).
inline Scheme diamond_scheme(const Network& net, Alphabet a) {
  const auto mids = detail::parallel_relays(net, 2, "diamond network");
  VertexIndex single = mids[0], pair = mids[1];
  if (net.in_degree(single) != 1) std::swap(single, pair);
  if (net.in_degree(single) != 1 || net.in_degree(pair) != 2)
    throw Error(ErrorKind::UnsupportedTopology, "network is not a diamond network");

  const Symbol reserved = a.size() - 1;
  NetworkCode code(net, a);
  code.assign(single, [](std::span<const Symbol> in) { return Word{in[0]}; });
  code.assign(pair, [&](std::span<const Symbol> in) { return detail::agree_or_alarm(in, reserved, false); });

  std::vector<Word> words;
  for (Symbol s = 0; s < reserved; ++s) words.push_back(detail::repeat(s, 3));
  return {"diamond", std::move(code), OuterCode(std::move(words)), reserved};
}

inline Scheme diamond_scheme(std::uint32_t q) { return diamond_scheme(diamond_network().network, Alphabet(q)); }

/// Four-fold repetition of every symbol; both relays forward on agreement and
/// send the reserved symbol q-1 on disagreement.
inline Scheme mirrored_diamond_scheme(const Network& net, Alphabet a) {
  const auto mids = detail::parallel_relays(net, 2, "mirrored diamond network");
  for (VertexIndex v : mids)
    if (net.in_degree(v) != 2) throw Error(ErrorKind::UnsupportedTopology, "network is not a mirrored diamond network");

  const Symbol reserved = a.size() - 1;
  NetworkCode code(net, a);
  for (VertexIndex v : mids)
    code.assign(v, [&](std::span<const Symbol> in) { return detail::agree_or_alarm(in, reserved, true); });

  std::vector<Word> words;
  for (Symbol s = 0; s < a.size(); ++s) words.push_back(detail::repeat(s, 4));
  return {"mirrored", std::move(code), OuterCode(std::move(words)), reserved};
}

inline Scheme mirrored_diamond_scheme(std::uint32_t q) {
  return mirrored_diamond_scheme(mirrored_diamond_network().network, Alphabet(q));
}

/// Terminal rule for the mirrored diamond: agreeing symbols decode to
/// themselves, otherwise the symbol that is not the reserved one wins.
inline Symbol mirrored_diamond_decode(Symbol first, Symbol second, Symbol reserved) {
  if (first == second) return first;
  return first == reserved ? second : first;
}

/// Bound-achieving scheme for two-level networks without damming vertices.
///
/// Forwarding vertices (indeg >= outdeg + 2t) receive an [outdeg + 2t, outdeg]
/// Reed-Solomon codeword on their first outdeg + 2t in-edges, decode it and
/// forward the message. Coded vertices (indeg <= outdeg) relay their inputs;
/// together their N in-edges carry one [N, N - 2t] codeword decoded at the
/// terminal, or nothing when N <= 2t. Unused edges carry 0. The alphabet is
/// GF(p).
inline Scheme two_level_scheme(const Network& net, const Adversary& adv, std::uint32_t p) {
  detail::require_two_level(net, adv);
  const PrimeField field(p);
  const Alphabet a = field.alphabet();
  const std::size_t t = adv.budget();

  if (const auto dam = damming_vertices(net, t); !dam.empty())
    throw Error(ErrorKind::DammingVertexPresent, "vertex '" + net.vertex_name(dam.front()) + "' is damming");

  std::vector<VertexIndex> forwarding, coded;
  for (VertexIndex v : net.intermediates())
    (net.in_degree(v) >= net.out_degree(v) + 2 * t ? forwarding : coded).push_back(v);

  // Each block: source edges carrying it, codeword length, message length.
  struct Block {
    EdgeSet edges;
    std::size_t k;
    std::optional<MdsCode> mds;  // absent when k == n (no redundancy)
  };
  auto make_block = [&](EdgeSet edges, std::size_t k) {
    Block b{std::move(edges), k, std::nullopt};
    if (b.k < b.edges.size()) b.mds.emplace(b.edges.size(), b.k, field);
    return b;
  };

  std::vector<Block> blocks;
  for (VertexIndex v : forwarding) {
    const std::size_t out = net.out_degree(v);
    auto in = net.in_edges(v);
    blocks.push_back(make_block(EdgeSet(in.begin(), in.begin() + static_cast<std::ptrdiff_t>(out + 2 * t)), out));
  }
  EdgeSet coded_edges;
  for (VertexIndex v : coded) coded_edges.insert(coded_edges.end(), net.in_edges(v).begin(), net.in_edges(v).end());
  coded_edges = net.ordered(std::move(coded_edges));
  if (coded_edges.size() > 2 * t) blocks.push_back(make_block(coded_edges, coded_edges.size() - 2 * t));

  NetworkCode code(net, a);
  for (std::size_t b = 0; b < forwarding.size(); ++b) {
    const Block& blk = blocks[b];
    const std::size_t used = blk.edges.size();
    std::optional<ExhaustiveDecoder> dec;
    if (blk.mds) dec.emplace(*blk.mds);
    code.assign(forwarding[b], [&](std::span<const Symbol> in) {
      const auto received = in.first(used);
      if (!dec) return Word(received.begin(), received.end());
      auto m = dec->try_decode(received);
      return m ? *m : Word(blk.k, 0);
    });
  }
  for (VertexIndex v : coded) {
    const std::size_t out = net.out_degree(v);
    code.assign(v, [&](std::span<const Symbol> in) {
      Word w(out, 0);
      std::copy(in.begin(), in.end(), w.begin());
      return w;
    });
  }

  std::size_t dimension = 0;
  for (const auto& b : blocks) dimension += b.k;
  const auto count = checked_pow(p, dimension);
  if (!count || *count > (std::uint64_t{1} << 20))
    throw Error(ErrorKind::SearchSpaceTooLarge, "outer code with p^" + std::to_string(dimension) + " words is too large");

  const auto src = net.out_edges(net.source());
  std::vector<std::size_t> coord(net.edge_count(), 0);
  for (std::size_t i = 0; i < src.size(); ++i) coord[src[i]] = i;

  std::vector<Word> words;
  words.reserve(*count);
  for (std::uint64_t r = 0; r < *count; ++r) {
    const Word message = word_unrank(r, p, dimension);
    Word x(src.size(), 0);
    std::size_t at = 0;
    for (const auto& b : blocks) {
      std::span<const Symbol> part(message.data() + at, b.k);
      at += b.k;
      const Word cw = b.mds ? rs_encode(*b.mds, part) : Word(part.begin(), part.end());
      for (std::size_t i = 0; i < b.edges.size(); ++i) x[coord[b.edges[i]]] = cw[i];
    }
    words.push_back(std::move(x));
  }
  return {"two-level", std::move(code), OuterCode(std::move(words)), std::nullopt};
}

}  // namespace oneshot
