#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "oneshot/analysis/confusability.hpp"
#include "oneshot/analysis/independent_set.hpp"
#include "oneshot/core/outer_code.hpp"
#include "oneshot/engine/transfer.hpp"

namespace oneshot {

struct AmbiguityWitness {
  Word first;
  Word second;
  VertexIndex terminal = 0;
  Word common;  // exit vector on in(terminal) reachable from both
};

struct UnambiguityVerdict {
  bool unambiguous = true;
  std::optional<AmbiguityWitness> witness;

  explicit operator bool() const noexcept { return unambiguous; }
};

/// log_q(M) rendered exactly when M is a power of q, otherwise as
/// "log_q(M)≈r" with four decimals.
inline std::string format_rate(std::uint64_t m, std::uint32_t q) {
  std::uint64_t p = 1;
  for (unsigned k = 0; p <= m; ++k, p *= q)
    if (p == m) return std::to_string(k);
  char buf[64];
  std::snprintf(buf, sizeof buf, "log_%u(%llu)≈%.4f", q, static_cast<unsigned long long>(m),
                std::log(static_cast<double>(m)) / std::log(static_cast<double>(q)));
  return buf;
}

struct CapacityReport {
  std::uint64_t max_code_size = 1;
  std::uint32_t q = 2;
  OuterCode witness{{Word{}}};

  double rate() const { return std::log(static_cast<double>(max_code_size)) / std::log(static_cast<double>(q)); }
  std::string rate_string() const { return format_rate(max_code_size, q); }
};

namespace detail {

inline EdgeSet source_edges(const Network& net) {
  return EdgeSet(net.out_edges(net.source()).begin(), net.out_edges(net.source()).end());
}

inline EdgeSet terminal_edges(const Network& net, VertexIndex t) {
  return EdgeSet(net.in_edges(t).begin(), net.in_edges(t).end());
}

/// Dense array for small exit spaces, hash map otherwise.
class OwnerTable {
 public:
  explicit OwnerTable(std::uint64_t space) {
    if (space <= ConflictBuilder::kDenseLimit) dense_.assign(space, -1);
  }
  std::int64_t get(std::uint64_t r) const {
    if (!dense_.empty()) return dense_[r];
    auto it = sparse_.find(r);
    return it == sparse_.end() ? -1 : it->second;
  }
  void put(std::uint64_t r, std::int64_t owner) {
    if (!dense_.empty())
      dense_[r] = owner;
    else
      sparse_[r] = owner;
  }

 private:
  std::vector<std::int64_t> dense_;
  std::unordered_map<std::uint64_t, std::int64_t> sparse_;
};

}  // namespace detail

/// Checks pairwise disjointness of terminal transfer sets. The witness is the
/// first clash met scanning terminals, then codewords, then exit vectors, all
/// in order.
inline UnambiguityVerdict is_unambiguous(const Network& net, const Adversary& adv, const NetworkCode& code,
                                         const OuterCode& outer) {
  check_outer_code(net, code.alphabet(), outer);
  const auto from = detail::source_edges(net);
  const std::uint32_t q = code.alphabet().size();
  for (VertexIndex t : net.terminals()) {
    TransferPlan plan(net, adv, from, detail::terminal_edges(net, t), code);
    detail::OwnerTable owner(plan.exit_space());
    const auto& words = outer.words();
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::uint64_t r : plan.exit_ranks(code, words[i])) {
        const std::int64_t o = owner.get(r);
        if (o >= 0 && static_cast<std::size_t>(o) != i) {
          return {false, AmbiguityWitness{words[static_cast<std::size_t>(o)], words[i], t,
                                          word_unrank(r, q, plan.to().size())}};
        }
        owner.put(r, static_cast<std::int64_t>(i));
      }
    }
  }
  return {true, std::nullopt};
}

/// Upper limit on |A|^outdeg(S) for the exact independent-set search.
inline constexpr std::uint64_t kMaxCandidates = std::uint64_t{1} << 14;

/// Largest unambiguous outer code for a fixed network code, over all source
/// words. The witness is the lexicographically least maximum code.
inline CapacityReport max_unambiguous_code(const Network& net, const Adversary& adv, const NetworkCode& code) {
  const std::size_t n = net.out_degree(net.source());
  const auto count = checked_pow(code.alphabet().size(), n);
  if (!count || *count > kMaxCandidates)
    throw Error(ErrorKind::SearchSpaceTooLarge, "too many source words for exact search");
  auto graph = confusability_graph(net, adv, code, all_words(code.alphabet(), n));
  MaxIndependentSet solver(graph.conflicts());
  const auto best = solver.solve();
  std::vector<Word> words;
  for (std::size_t i : *best) words.push_back(graph.candidates()[i]);
  return CapacityReport{words.size(), code.alphabet().size(), OuterCode(std::move(words))};
}

/// Terminal-side lookup from received vectors to codewords. Vectors that no
/// codeword can produce decode to std::nullopt.
class Decoder {
 public:
  Decoder(VertexIndex terminal, std::uint32_t q, std::size_t length, std::vector<std::int64_t> table, OuterCode code)
      : terminal_(terminal), q_(q), length_(length), table_(std::move(table)), code_(std::move(code)) {}

  VertexIndex terminal() const noexcept { return terminal_; }
  std::uint64_t domain_size() const noexcept { return table_.size(); }
  const OuterCode& code() const noexcept { return code_; }

  std::optional<Word> decode(std::span<const Symbol> received) const {
    if (received.size() != length_)
      throw Error(ErrorKind::LengthMismatch, "terminal expects " + std::to_string(length_) + " symbols");
    for (Symbol s : received)
      if (s >= q_) throw Error(ErrorKind::SymbolOutOfRange, "received symbol " + std::to_string(s) + " outside the alphabet");
    const std::int64_t i = table_[word_rank(received, q_)];
    if (i < 0) return std::nullopt;
    return code_.words()[static_cast<std::size_t>(i)];
  }

  /// Number of vectors that decode to some codeword.
  std::size_t reachable_count() const {
    std::size_t c = 0;
    for (auto i : table_) c += i >= 0;
    return c;
  }

 private:
  VertexIndex terminal_;
  std::uint32_t q_;
  std::size_t length_;
  std::vector<std::int64_t> table_;
  OuterCode code_;
};

inline constexpr std::uint64_t kMaxDecoderDomain = std::uint64_t{1} << 24;

inline Decoder extract_decoder(const Network& net, const Adversary& adv, const NetworkCode& code, const OuterCode& outer,
                               VertexIndex terminal) {
  check_outer_code(net, code.alphabet(), outer);
  if (!net.is_terminal(terminal)) throw Error(ErrorKind::UnknownVertex, net.vertex_name(terminal) + " is not a terminal");
  TransferPlan plan(net, adv, detail::source_edges(net), detail::terminal_edges(net, terminal), code);
  if (plan.exit_space() > kMaxDecoderDomain)
    throw Error(ErrorKind::SearchSpaceTooLarge, "decoder domain too large to tabulate");
  std::vector<std::int64_t> table(plan.exit_space(), -1);
  const auto& words = outer.words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::uint64_t r : plan.exit_ranks(code, words[i])) {
      if (table[r] >= 0 && static_cast<std::size_t>(table[r]) != i)
        throw Error(ErrorKind::AmbiguousCode, "codewords " + format_word(words[static_cast<std::size_t>(table[r])]) + " and " +
                                                  format_word(words[i]) + " collide at terminal " + net.vertex_name(terminal));
      table[r] = static_cast<std::int64_t>(i);
    }
  }
  return Decoder(terminal, code.alphabet().size(), plan.to().size(), std::move(table), outer);
}

}  // namespace oneshot
