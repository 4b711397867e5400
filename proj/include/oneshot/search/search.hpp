#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "oneshot/analysis/confusability.hpp"
#include "oneshot/analysis/independent_set.hpp"
#include "oneshot/analysis/unambiguity.hpp"
#include "oneshot/bounds/bounds.hpp"
#include "oneshot/core/network_code.hpp"

namespace oneshot {

/// The space of all network codes over an alphabet: one base-q digit per
/// table entry, so the total is q^(sum over V of outdeg(V) * q^indeg(V)).
struct SearchSpace {
  std::uint32_t q = 2;
  std::vector<std::uint64_t> rows;  // q^indeg per intermediate vertex
  std::size_t digits = 0;
  boost::multiprecision::cpp_int total;
};

inline SearchSpace search_space(const Network& net, const Alphabet& a) {
  SearchSpace s;
  s.q = a.size();
  for (VertexIndex v : net.intermediates()) {
    auto rows = checked_pow(a.size(), net.in_degree(v));
    if (!rows) throw Error(ErrorKind::SearchSpaceTooLarge, "table of '" + net.vertex_name(v) + "' has too many rows");
    s.rows.push_back(*rows);
    s.digits += static_cast<std::size_t>(*rows) * net.out_degree(v);
  }
  s.total = boost::multiprecision::pow(boost::multiprecision::cpp_int(a.size()), static_cast<unsigned>(s.digits));
  return s;
}

struct SearchOptions {
  std::uint64_t budget = 1'000'000;
  unsigned jobs = 1;
  /// Stop once a code reaches q^(cut-set bound) words; sound because no code can exceed it.
  bool early_stop = true;
  /// Skip codes whose terminal-facing output columns are not in first-occurrence
  /// normal form. Relabeling symbols on an edge into a terminal is a bijection
  /// on that coordinate for every exit vector, so it preserves unambiguity.
  bool prune_symmetry = false;
};

namespace detail {

inline std::uint64_t checked_space(const SearchSpace& s, std::uint64_t budget) {
  if (s.total > budget)
    throw Error(ErrorKind::SearchSpaceTooLarge,
                "network code space has " + s.total.str() + " members, budget is " + std::to_string(budget));
  return static_cast<std::uint64_t>(s.total);
}

/// Writes the digits of `index` into the table storage; the last entry is least significant.
inline void set_code_index(std::span<Symbol> data, std::uint32_t q, std::uint64_t index) {
  for (std::size_t i = data.size(); i-- > 0;) {
    data[i] = static_cast<Symbol>(index % q);
    index /= q;
  }
}

inline void increment_code(std::span<Symbol> data, std::uint32_t q) {
  for (std::size_t i = data.size(); i-- > 0;) {
    if (++data[i] < q) return;
    data[i] = 0;
  }
}

/// Table columns (offset, stride, rows) that feed a terminal.
struct Column {
  std::size_t offset;
  std::size_t stride;
  std::uint64_t rows;
};

inline std::vector<Column> terminal_columns(const Network& net, const NetworkCode& code) {
  std::vector<Column> cols;
  for (const auto& t : code.layout().tables)
    for (std::size_t c = 0; c < t.outputs.size(); ++c)
      if (net.is_terminal(net.edges()[t.outputs[c]].head)) cols.push_back({t.offset + c, t.outputs.size(), t.rows});
  return cols;
}

inline bool is_canonical(std::span<const Symbol> data, const std::vector<Column>& cols) {
  for (const auto& c : cols) {
    Symbol next = 0;
    for (std::uint64_t r = 0; r < c.rows; ++r) {
      const Symbol s = data[c.offset + r * c.stride];
      if (s > next) return false;
      if (s == next) ++next;
    }
  }
  return true;
}

/// Per-thread machinery to find the best outer code for many codes that
/// share one layout.
class CodeEvaluator {
 public:
  CodeEvaluator(const Network& net, const Adversary& adv, const NetworkCode& prototype, const std::vector<Word>& candidates)
      : candidates_(candidates), solver_(builder_.graph()) {
    const EdgeSet from(net.out_edges(net.source()).begin(), net.out_edges(net.source()).end());
    for (VertexIndex t : net.terminals()) {
      plans_.emplace_back(net, adv, from, EdgeSet(net.in_edges(t).begin(), net.in_edges(t).end()), prototype);
      scratch_.push_back(plans_.back().make_scratch());
    }
  }

  /// Size of a largest unambiguous code when it exceeds `must_exceed`.
  std::optional<std::size_t> best_size(std::span<const Symbol> tables, std::ptrdiff_t must_exceed) {
    builder_.reset(candidates_.size());
    for (std::size_t i = 0; i < plans_.size(); ++i) builder_.add_terminal(plans_[i], tables, candidates_, scratch_[i]);
    auto set = solver_.solve(must_exceed);
    if (!set) return std::nullopt;
    return set->size();
  }

 private:
  const std::vector<Word>& candidates_;
  std::vector<TransferPlan> plans_;
  std::vector<TransferPlan::Scratch> scratch_;
  ConflictBuilder builder_;
  MaxIndependentSet solver_;
};

}  // namespace detail

/// Every network code in enumeration order (mixed-radix counter over table
/// entries, last entry fastest). `visit(code, index)` returns false to stop.
template <class Visit>
void enumerate_network_codes(const Network& net, const Alphabet& a, std::uint64_t budget, Visit&& visit) {
  const std::uint64_t total = detail::checked_space(search_space(net, a), budget);
  NetworkCode code(net, a);
  for (std::uint64_t i = 0; i < total; ++i) {
    if (i) detail::increment_code(code.mutable_data(), a.size());
    if (!visit(std::as_const(code), i)) return;
  }
}

inline NetworkCode network_code_at(const Network& net, const Alphabet& a, std::uint64_t index) {
  NetworkCode code(net, a);
  detail::set_code_index(code.mutable_data(), a.size(), index);
  return code;
}

template <class URBG>
NetworkCode random_network_code(const Network& net, const Alphabet& a, URBG& rng) {
  NetworkCode code(net, a);
  std::uniform_int_distribution<Symbol> sym(0, a.size() - 1);
  for (Symbol& s : code.mutable_data()) s = sym(rng);
  return code;
}

struct SearchResult {
  CapacityReport report;
  NetworkCode code;
  std::uint64_t code_index = 0;
  std::uint64_t space = 0;
  std::uint64_t examined = 0;
  bool stopped_early = false;
};

/// Largest unambiguous code over every network code and every outer code.
/// The witness is the first maximizing network code in enumeration order.
inline SearchResult best_over_all_codes(const Network& net, const Adversary& adv, const Alphabet& a,
                                        const SearchOptions& opt = {}) {
  const std::uint64_t total = detail::checked_space(search_space(net, a), opt.budget);
  const NetworkCode prototype(net, a);
  const auto candidates = all_words(a, net.out_degree(net.source()));
  if (candidates.size() > kMaxCandidates)
    throw Error(ErrorKind::SearchSpaceTooLarge, "too many source words for exact search");

  std::uint64_t target = std::numeric_limits<std::uint64_t>::max();
  if (opt.early_stop) {
    const auto cap = checked_pow(a.size(), singleton_cutset_bound(net, adv).value);
    if (cap) target = std::min<std::uint64_t>(*cap, candidates.size());
  }
  const auto columns = detail::terminal_columns(net, prototype);

  constexpr std::uint64_t kChunk = 4096;
  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
  struct ChunkBest {
    std::size_t size = 0;
    std::uint64_t index = 0;
  };
  std::vector<ChunkBest> results(chunks);
  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<std::uint64_t> stop_at{std::numeric_limits<std::uint64_t>::max()};
  std::atomic<std::uint64_t> examined{0};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&] {
    try {
      NetworkCode code = prototype;
      detail::CodeEvaluator eval(net, adv, prototype, candidates);
      std::uint64_t local_examined = 0;
      for (std::uint64_t c; (c = next_chunk.fetch_add(1)) < chunks;) {
        const std::uint64_t begin = c * kChunk;
        if (begin > stop_at.load()) break;
        const std::uint64_t end = std::min(total, begin + kChunk);
        detail::set_code_index(code.mutable_data(), a.size(), begin);
        ChunkBest best;
        for (std::uint64_t i = begin; i < end; ++i) {
          if (i != begin) detail::increment_code(code.mutable_data(), a.size());
          if (i > stop_at.load(std::memory_order_relaxed)) break;
          if (opt.prune_symmetry && !detail::is_canonical(code.data(), columns)) continue;
          ++local_examined;
          if (auto m = eval.best_size(code.data(), static_cast<std::ptrdiff_t>(best.size))) {
            best = {*m, i};
            if (*m >= target) {
              std::uint64_t cur = stop_at.load();
              while (i < cur && !stop_at.compare_exchange_weak(cur, i)) {
              }
              break;
            }
          }
        }
        results[c] = best;
      }
      examined += local_examined;
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };

  const unsigned jobs = std::max(1u, opt.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  ChunkBest overall;
  for (const auto& r : results)
    if (r.size > overall.size) overall = r;

  NetworkCode code = network_code_at(net, a, overall.index);
  CapacityReport report = max_unambiguous_code(net, adv, code);
  return {std::move(report), std::move(code), overall.index, total, examined.load(),
          stop_at.load() != std::numeric_limits<std::uint64_t>::max()};
}

/// Largest M with M^2 + M - 1 <= q^2.
inline std::size_t diamond_converse_limit(std::uint32_t q) {
  const std::uint64_t qq = std::uint64_t{q} * q;
  std::size_t m = 0;
  while ((m + 1) * (m + 1) + (m + 1) - 1 <= qq) ++m;
  return m;
}

struct ConverseViolation {
  NetworkCode code;
  std::size_t code_size;
};

struct ConverseReport {
  std::uint32_t q = 2;
  std::uint64_t codes_checked = 0;
  std::size_t max_code_size = 0;
  std::vector<ConverseViolation> violations;
};

/// Exhaustive sweep, or `samples` uniformly random codes when set.
struct ConverseMode {
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 1;
  std::uint64_t budget = 1'000'000;
};

/// Checks |C|^2 + |C| - 1 <= q^2 for the best outer code of every examined
/// network code on the diamond network.
inline ConverseReport verify_diamond_converse(const Network& net, const Adversary& adv, const Alphabet& a,
                                           const ConverseMode& mode = {}) {
  const auto mids = net.intermediates();
  bool diamond = net.terminals().size() == 1 && mids.size() == 2 && net.out_degree(net.source()) == 3 &&
                 adv.budget() == 1 && adv.vulnerable().size() == 3;
  if (diamond) {
    diamond = is_two_level(net);
    std::vector<std::size_t> in{net.in_degree(mids[0]), net.in_degree(mids[1])};
    std::sort(in.begin(), in.end());
    diamond = diamond && in == std::vector<std::size_t>{1, 2};
    for (EdgeIndex e : adv.vulnerable()) diamond = diamond && net.edges()[e].tail == net.source();
  }
  if (!diamond) throw Error(ErrorKind::UnsupportedTopology, "the converse inequality is stated for the diamond network");

  ConverseReport report;
  report.q = a.size();
  const std::size_t limit = diamond_converse_limit(a.size());
  const NetworkCode prototype(net, a);
  const auto candidates = all_words(a, 3);
  detail::CodeEvaluator eval(net, adv, prototype, candidates);

  auto check = [&](const NetworkCode& code) {
    ++report.codes_checked;
    const auto floor = static_cast<std::ptrdiff_t>(std::min(report.max_code_size, limit));
    if (auto m = eval.best_size(code.data(), floor)) {
      report.max_code_size = std::max(report.max_code_size, *m);
      if (*m > limit) report.violations.push_back({code, *m});
    }
  };

  if (mode.samples) {
    std::mt19937_64 rng(mode.seed);
    for (std::uint64_t i = 0; i < *mode.samples; ++i) check(random_network_code(net, a, rng));
  } else {
    enumerate_network_codes(net, a, mode.budget, [&](const NetworkCode& code, std::uint64_t) {
      check(code);
      return true;
    });
  }
  return report;
}

}  // namespace oneshot
