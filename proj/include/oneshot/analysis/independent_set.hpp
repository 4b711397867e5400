#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace oneshot {

/// Fixed-size bit rows over n vertices, stored as one flat word array.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t words() const noexcept { return words_; }

  void set(std::size_t i, std::size_t j) {
    bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
    bits_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
  }
  bool test(std::size_t i, std::size_t j) const { return (bits_[i * words_ + j / 64] >> (j % 64)) & 1; }
  const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words_; }

  std::size_t degree(std::size_t i) const {
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(std::popcount(row(i)[w]));
    return d;
  }

  std::size_t edge_count() const {
    std::size_t d = 0;
    for (std::size_t i = 0; i < n_; ++i) d += degree(i);
    return d / 2;
  }

  void clear() { std::fill(bits_.begin(), bits_.end(), 0); }

  void reset(std::size_t n) {
    n_ = n;
    words_ = (n + 63) / 64;
    bits_.assign(n * words_, 0);
  }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Exact maximum independent set by branch and bound.
///
/// Branching always takes the smallest remaining vertex, include-branch
/// first, so leaves are visited in lexicographic order of their sorted
/// vertex lists and the first maximum set found is the lexicographically
/// least one. The bound is a greedy clique cover of the remaining vertices.
/// A min-degree greedy pass supplies the initial lower bound.
class MaxIndependentSet {
 public:
  /// Keeps a reference to `conflicts`, which may be refilled between solves.
  explicit MaxIndependentSet(const BitMatrix& conflicts) : g_(conflicts) {}

  /// Lexicographically least maximum independent set, provided its size
  /// exceeds `must_exceed`; std::nullopt otherwise.
  std::optional<std::vector<std::size_t>> solve(std::ptrdiff_t must_exceed = -1) {
    const std::size_t n = g_.size();
    w_ = g_.words();
    best_.clear();
    found_ = false;
    threshold_ = std::max<std::ptrdiff_t>(must_exceed, static_cast<std::ptrdiff_t>(greedy_size()) - 1);
    if (threshold_ >= static_cast<std::ptrdiff_t>(n)) return std::nullopt;
    stack_.assign((n + 2) * w_, 0);
    scratch_.assign(2 * w_, 0);
    std::uint64_t* all = stack_.data();
    for (std::size_t i = 0; i < n; ++i) all[i / 64] |= std::uint64_t{1} << (i % 64);
    chosen_.clear();
    expand(0);
    if (!found_) return std::nullopt;
    return best_;
  }

  /// Size of a maximum independent set.
  std::size_t maximum() {
    auto s = solve();
    return s ? s->size() : 0;
  }

 private:
  std::size_t greedy_size() const {
    const std::size_t n = g_.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::vector<std::size_t> deg(n);
    for (std::size_t i = 0; i < n; ++i) deg[i] = g_.degree(i);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return deg[a] < deg[b]; });
    std::vector<char> blocked(n, 0);
    std::size_t size = 0;
    for (std::size_t v : order) {
      if (blocked[v]) continue;
      ++size;
      for (std::size_t u = 0; u < n; ++u)
        if (g_.test(v, u)) blocked[u] = 1;
    }
    return size;
  }

  std::size_t clique_cover(const std::uint64_t* p) {
    std::uint64_t* rest = scratch_.data();
    std::uint64_t* clique = scratch_.data() + w_;
    std::copy(p, p + w_, rest);
    std::size_t cliques = 0;
    for (std::size_t w = 0; w < w_;) {
      if (!rest[w]) {
        ++w;
        continue;
      }
      const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(rest[w]));
      rest[w] &= rest[w] - 1;
      ++cliques;
      const std::uint64_t* nv = g_.row(v);
      for (std::size_t k = w; k < w_; ++k) clique[k] = rest[k] & nv[k];
      for (std::size_t k = w; k < w_;) {
        if (!clique[k]) {
          ++k;
          continue;
        }
        const std::size_t u = k * 64 + static_cast<std::size_t>(std::countr_zero(clique[k]));
        rest[k] &= ~(std::uint64_t{1} << (u % 64));
        const std::uint64_t* nu = g_.row(u);
        for (std::size_t m = k; m < w_; ++m) clique[m] &= nu[m];
      }
    }
    return cliques;
  }

  void expand(std::size_t depth) {
    std::uint64_t* p = stack_.data() + depth * w_;
    std::size_t first_word = 0;
    while (first_word < w_ && !p[first_word]) ++first_word;
    if (first_word == w_) {
      if (static_cast<std::ptrdiff_t>(chosen_.size()) > threshold_) {
        best_ = chosen_;
        found_ = true;
        threshold_ = static_cast<std::ptrdiff_t>(chosen_.size());
      }
      return;
    }
    if (static_cast<std::ptrdiff_t>(chosen_.size() + clique_cover(p)) <= threshold_) return;

    const std::size_t v = first_word * 64 + static_cast<std::size_t>(std::countr_zero(p[first_word]));
    std::uint64_t* next = p + w_;
    const std::uint64_t* nv = g_.row(v);
    for (std::size_t k = 0; k < w_; ++k) next[k] = p[k] & ~nv[k];
    next[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    chosen_.push_back(v);
    expand(depth + 1);
    chosen_.pop_back();

    for (std::size_t k = 0; k < w_; ++k) next[k] = p[k];
    next[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    expand(depth + 1);
  }

  const BitMatrix& g_;
  std::size_t w_ = 0;
  std::vector<std::uint64_t> stack_;
  std::vector<std::uint64_t> scratch_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
  std::ptrdiff_t threshold_ = -1;
  bool found_ = false;
};

}  // namespace oneshot
