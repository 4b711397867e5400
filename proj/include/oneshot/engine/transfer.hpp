#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "oneshot/core/adversary.hpp"
#include "oneshot/core/alphabet.hpp"
#include "oneshot/core/cuts.hpp"
#include "oneshot/core/network.hpp"
#include "oneshot/core/network_code.hpp"

namespace oneshot {

/// Replacement symbols the adversary writes onto edges. The exiting value of
/// a listed edge is the replacement, whatever entered it.
struct AdversaryAction {
  std::vector<std::pair<EdgeIndex, Symbol>> replacements;
};

inline std::size_t hamming_distance(std::span<const Symbol> u, std::span<const Symbol> v) {
  if (u.size() != v.size())
    throw Error(ErrorKind::LengthMismatch, "vectors of length " + std::to_string(u.size()) + " and " + std::to_string(v.size()));
  std::size_t d = 0;
  for (std::size_t i = 0; i < u.size(); ++i) d += u[i] != v[i];
  return d;
}

/// The set of vectors that can exit `to` when `x` enters `from`.
struct TransferSet {
  EdgeSet from;
  EdgeSet to;
  Word input;
  std::vector<Word> result;  // sorted, distinct
};

/// Execution schedule for one (from -> to) transfer, compiled against a
/// network, an adversary and the table layout of a network code. Evaluating
/// under a different code with the same layout only swaps the table data.
///
/// Vectors on `from` and `to` are read and written in the plan network's edge
/// order. Adversary supports are restricted to vulnerable edges inside the
/// influence cone; every support of size min(t, #candidates) is combined with
/// every replacement tuple, which includes leaving symbols unchanged.
class TransferPlan {
 public:
  TransferPlan(const Network& net, const Adversary& adv, EdgeSet from, EdgeSet to, const NetworkCode& prototype)
      : from_(net.ordered(std::move(from))),
        to_(net.ordered(std::move(to))),
        cone_(influence_cone(net, from_, to_)),
        q_(prototype.alphabet().size()),
        layout_(prototype.shared_layout()) {
    auto space = checked_pow(q_, to_.size());
    if (!space) throw Error(ErrorKind::SearchSpaceTooLarge, "exit vectors do not fit in 64-bit ranks");
    exit_space_ = *space;

    std::vector<std::ptrdiff_t> pos(net.edge_count(), -1);
    for (std::size_t i = 0; i < cone_.size(); ++i) pos[cone_[i]] = static_cast<std::ptrdiff_t>(i);

    std::vector<char> is_from(net.edge_count(), 0);
    for (std::size_t i = 0; i < from_.size(); ++i) {
      is_from[from_[i]] = 1;
      if (pos[from_[i]] >= 0) seeds_.push_back({static_cast<std::uint32_t>(pos[from_[i]]), static_cast<std::uint32_t>(i)});
    }
    for (std::size_t i = 0; i < cone_.size(); ++i) {
      const EdgeIndex e = cone_[i];
      if (is_from[e]) continue;
      const auto& table = prototype.table(net.edges()[e].tail);
      const auto coord = std::find(table.outputs.begin(), table.outputs.end(), e) - table.outputs.begin();
      Step s;
      s.pos = static_cast<std::uint32_t>(i);
      s.base = table.offset + static_cast<std::size_t>(coord);
      s.stride = static_cast<std::uint32_t>(table.outputs.size());
      s.first_input = static_cast<std::uint32_t>(step_inputs_.size());
      s.input_count = static_cast<std::uint32_t>(table.inputs.size());
      for (EdgeIndex f : table.inputs) {
        if (pos[f] < 0) throw Error(ErrorKind::ConeClosureViolation, "input edge " + net.edge_id(f) + " is outside the cone");
        step_inputs_.push_back(static_cast<std::uint32_t>(pos[f]));
      }
      steps_.push_back(s);
    }
    for (EdgeIndex e : to_) exits_.push_back(static_cast<std::uint32_t>(pos[e]));

    std::vector<std::uint32_t> candidates;
    for (std::size_t i = 0; i < cone_.size(); ++i)
      if (adv.is_vulnerable(cone_[i])) candidates.push_back(static_cast<std::uint32_t>(i));
    support_size_ = std::min(adv.budget(), candidates.size());
    build_supports(candidates);
  }

  const EdgeSet& from() const noexcept { return from_; }
  const EdgeSet& to() const noexcept { return to_; }
  const EdgeSet& cone() const noexcept { return cone_; }
  std::uint64_t exit_space() const noexcept { return exit_space_; }

  /// Number of adversary actions swept per input (with repetitions).
  std::uint64_t action_count() const {
    return static_cast<std::uint64_t>(support_count()) * *checked_pow(q_, support_size_);
  }

  /// Calls `sink(rank)` for the exit vector of every adversary action; ranks
  /// may repeat. `tables` is the data of a code sharing the plan's layout.
  template <class Sink>
  void for_each_exit(std::span<const Symbol> tables, std::span<const Symbol> x, Sink&& sink) const {
    Scratch scratch(cone_.size(), support_size_);
    for_each_exit(tables, x, scratch, sink);
  }

  /// Reusable buffers for hot loops.
  struct Scratch {
    Scratch(std::size_t cone_size, std::size_t support_size)
        : values(cone_size), forced(cone_size, kNone), replacement(support_size) {}
    std::vector<Symbol> values;
    std::vector<std::int64_t> forced;
    std::vector<Symbol> replacement;
  };

  Scratch make_scratch() const { return Scratch(cone_.size(), support_size_); }

  template <class Sink>
  void for_each_exit(std::span<const Symbol> tables, std::span<const Symbol> x, Scratch& sc, Sink&& sink) const {
    const std::size_t k = support_size_;
    const std::size_t supports = support_count();
    for (std::size_t s = 0; s < supports; ++s) {
      const std::uint32_t* support = supports_.data() + s * k;
      std::fill(sc.replacement.begin(), sc.replacement.end(), 0);
      while (true) {
        for (std::size_t j = 0; j < k; ++j) sc.forced[support[j]] = sc.replacement[j];
        sink(run(tables, x, sc));
        for (std::size_t j = 0; j < k; ++j) sc.forced[support[j]] = kNone;
        std::size_t j = k;
        while (j > 0 && ++sc.replacement[j - 1] == q_) sc.replacement[--j] = 0;
        if (j == 0) break;
      }
    }
  }

  std::vector<std::uint64_t> exit_ranks(const NetworkCode& code, std::span<const Symbol> x) const {
    check(code, x);
    std::vector<std::uint64_t> ranks;
    for_each_exit(code.data(), x, [&](std::uint64_t r) { ranks.push_back(r); });
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
    return ranks;
  }

  std::vector<Word> transfer_set(const NetworkCode& code, std::span<const Symbol> x) const {
    std::vector<Word> out;
    for (std::uint64_t r : exit_ranks(code, x)) out.push_back(word_unrank(r, q_, to_.size()));
    return out;
  }

  /// Exit vector under one explicit action. Replacements on edges outside the
  /// cone cannot reach `to` and are ignored.
  Word evaluate(const NetworkCode& code, std::span<const Symbol> x, const AdversaryAction& action) const {
    check(code, x);
    Scratch sc = make_scratch();
    for (const auto& [e, sym] : action.replacements) {
      if (!code.alphabet().contains(sym))
        throw Error(ErrorKind::SymbolOutOfRange, "replacement symbol " + std::to_string(sym) + " outside the alphabet");
      auto it = std::find(cone_.begin(), cone_.end(), e);
      if (it != cone_.end()) sc.forced[static_cast<std::size_t>(it - cone_.begin())] = sym;
    }
    return word_unrank(run(code.data(), x, sc), q_, to_.size());
  }

 private:
  static constexpr std::int64_t kNone = -1;

  struct Step {
    std::uint32_t pos;
    std::uint32_t stride;
    std::size_t base;
    std::uint32_t first_input;
    std::uint32_t input_count;
  };

  std::size_t support_count() const { return support_size_ == 0 ? 1 : supports_.size() / support_size_; }

  void build_supports(const std::vector<std::uint32_t>& candidates) {
    const std::size_t k = support_size_;
    if (k == 0) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      for (std::size_t i : idx) supports_.push_back(candidates[i]);
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == candidates.size() - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  void check(const NetworkCode& code, std::span<const Symbol> x) const {
    if (code.shared_layout() != layout_)
      throw Error(ErrorKind::InvalidCode, "network code does not share the layout this plan was compiled for");
    if (x.size() != from_.size())
      throw Error(ErrorKind::LengthMismatch, "input has " + std::to_string(x.size()) + " symbols, expected " +
                                                  std::to_string(from_.size()));
    for (Symbol s : x)
      if (s >= q_) throw Error(ErrorKind::SymbolOutOfRange, "input symbol " + std::to_string(s) + " outside the alphabet");
  }

  std::uint64_t run(std::span<const Symbol> tables, std::span<const Symbol> x, Scratch& sc) const {
    Symbol* vals = sc.values.data();
    const std::int64_t* forced = sc.forced.data();
    for (const auto& [p, xi] : seeds_) vals[p] = forced[p] >= 0 ? static_cast<Symbol>(forced[p]) : x[xi];
    for (const Step& s : steps_) {
      std::uint64_t row = 0;
      const std::uint32_t* in = step_inputs_.data() + s.first_input;
      for (std::uint32_t j = 0; j < s.input_count; ++j) row = row * q_ + vals[in[j]];
      vals[s.pos] = forced[s.pos] >= 0 ? static_cast<Symbol>(forced[s.pos]) : tables[s.base + row * s.stride];
    }
    std::uint64_t rank = 0;
    for (std::uint32_t p : exits_) rank = rank * q_ + vals[p];
    return rank;
  }

  EdgeSet from_;
  EdgeSet to_;
  EdgeSet cone_;
  std::uint32_t q_;
  std::shared_ptr<const CodeLayout> layout_;
  std::uint64_t exit_space_ = 1;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> seeds_;  // (cone pos, x index)
  std::vector<Step> steps_;
  std::vector<std::uint32_t> step_inputs_;
  std::vector<std::uint32_t> exits_;
  std::size_t support_size_ = 0;
  std::vector<std::uint32_t> supports_;  // support_count() rows of support_size_ cone positions
};

/// Single deterministic exit vector of `to` for input `x` and one action.
inline Word evaluate(const Network& net, const NetworkCode& code, const EdgeSet& from, const EdgeSet& to,
                     std::span<const Symbol> x, const AdversaryAction& action) {
  for (const auto& [e, sym] : action.replacements)
    if (e >= net.edge_count()) throw Error(ErrorKind::UnknownEdge, "action on edge index " + std::to_string(e));
  return TransferPlan(net, Adversary::none(net), from, to, code).evaluate(code, x, action);
}

inline TransferSet transfer_set(const Network& net, const Adversary& adv, const NetworkCode& code, const EdgeSet& from,
                                const EdgeSet& to, std::span<const Symbol> x) {
  TransferPlan plan(net, adv, from, to, code);
  TransferSet ts{plan.from(), plan.to(), Word(x.begin(), x.end()), plan.transfer_set(code, x)};
  return ts;
}

}  // namespace oneshot
