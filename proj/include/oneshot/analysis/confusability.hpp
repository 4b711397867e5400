#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "oneshot/analysis/independent_set.hpp"
#include "oneshot/engine/transfer.hpp"

namespace oneshot {

/// Accumulates conflict edges between candidates: i and j conflict when some
/// terminal can receive the same vector from both. Buffers are reused across
/// calls so a search can rebuild graphs without reallocating.
class ConflictBuilder {
 public:
  static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 22;

  void reset(std::size_t candidates) {
    n_ = candidates;
    graph_.reset(candidates);
  }

  /// Adds the conflicts seen at one terminal. `plan` maps source words to the
  /// terminal's in-edges.
  void add_terminal(const TransferPlan& plan, std::span<const Symbol> tables, const std::vector<Word>& candidates,
                    TransferPlan::Scratch& scratch) {
    const std::uint64_t space = plan.exit_space();
    if (space <= 64) {
      masks_.assign(n_, 0);
      for (std::size_t i = 0; i < n_; ++i)
        plan.for_each_exit(tables, candidates[i], scratch, [&](std::uint64_t r) { masks_[i] |= std::uint64_t{1} << r; });
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
          if (masks_[i] & masks_[j]) graph_.set(i, j);
      return;
    }
    if (space <= kDenseLimit) {
      if (owners_.size() < space) owners_.resize(space);
      if (stamp_.size() < space) stamp_.assign(space, 0);
      touched_.clear();
      for (std::size_t i = 0; i < n_; ++i) {
        ++epoch_;
        plan.for_each_exit(tables, candidates[i], scratch, [&](std::uint64_t r) {
          if (stamp_[r] == epoch_) return;
          stamp_[r] = epoch_;
          auto& list = owners_[r];
          if (list.empty()) touched_.push_back(r);
          for (std::uint32_t j : list) graph_.set(j, i);
          list.push_back(static_cast<std::uint32_t>(i));
        });
      }
      for (std::uint64_t r : touched_) owners_[r].clear();
      return;
    }
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> owners;
    for (std::size_t i = 0; i < n_; ++i) {
      plan.for_each_exit(tables, candidates[i], scratch, [&](std::uint64_t r) {
        auto& list = owners[r];
        if (!list.empty() && list.back() == i) return;
        for (std::uint32_t j : list) graph_.set(j, i);
        list.push_back(static_cast<std::uint32_t>(i));
      });
    }
  }

  const BitMatrix& graph() const noexcept { return graph_; }

 private:
  std::size_t n_ = 0;
  BitMatrix graph_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::vector<std::uint32_t>> owners_;
  std::vector<std::uint64_t> stamp_;
  std::vector<std::uint64_t> touched_;
  std::uint64_t epoch_ = 0;
};

/// Candidates joined when their transfer sets meet at some terminal.
/// A candidate set is unambiguous iff it is independent here.
class ConfusabilityGraph {
 public:
  ConfusabilityGraph(std::vector<Word> candidates, BitMatrix conflicts)
      : candidates_(std::move(candidates)), conflicts_(std::move(conflicts)) {}

  const std::vector<Word>& candidates() const noexcept { return candidates_; }
  const BitMatrix& conflicts() const noexcept { return conflicts_; }
  bool conflict(std::size_t i, std::size_t j) const { return conflicts_.test(i, j); }
  std::size_t edge_count() const { return conflicts_.edge_count(); }

  bool is_independent(std::span<const std::size_t> members) const {
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        if (members[a] == members[b] || conflict(members[a], members[b])) return false;
    return true;
  }

  /// Index of a candidate word, or size() if absent.
  std::size_t index_of(const Word& w) const {
    for (std::size_t i = 0; i < candidates_.size(); ++i)
      if (candidates_[i] == w) return i;
    return candidates_.size();
  }

 private:
  std::vector<Word> candidates_;
  BitMatrix conflicts_;
};

inline ConfusabilityGraph confusability_graph(const Network& net, const Adversary& adv, const NetworkCode& code,
                                              std::vector<Word> candidates) {
  const Alphabet& a = code.alphabet();
  const std::size_t n = net.out_degree(net.source());
  for (const auto& w : candidates) {
    if (w.size() != n)
      throw Error(ErrorKind::LengthMismatch, "candidate " + format_word(w) + " does not have length " + std::to_string(n));
    for (Symbol s : w)
      if (!a.contains(s)) throw Error(ErrorKind::SymbolOutOfRange, "candidate " + format_word(w) + " leaves the alphabet");
  }
  const EdgeSet from(net.out_edges(net.source()).begin(), net.out_edges(net.source()).end());
  ConflictBuilder builder;
  builder.reset(candidates.size());
  for (VertexIndex t : net.terminals()) {
    TransferPlan plan(net, adv, from, EdgeSet(net.in_edges(t).begin(), net.in_edges(t).end()), code);
    auto scratch = plan.make_scratch();
    builder.add_terminal(plan, code.data(), candidates, scratch);
  }
  return ConfusabilityGraph(std::move(candidates), builder.graph());
}

}  // namespace oneshot
