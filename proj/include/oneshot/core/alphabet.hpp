#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oneshot/error.hpp"

namespace oneshot {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

/// Symbols are the integers 0..q-1.
class Alphabet {
 public:
  explicit Alphabet(std::uint32_t q) : q_(q) {
    if (q < 2) throw Error(ErrorKind::InvalidAlphabet, "alphabet size must be at least 2, got " + std::to_string(q));
  }

  std::uint32_t size() const noexcept { return q_; }
  bool contains(Symbol s) const noexcept { return s < q_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::uint32_t q_;
};

/// base^exp if it fits in 64 bits.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) return std::nullopt;
    r *= base;
  }
  return r;
}

inline std::uint64_t word_count(const Alphabet& a, std::size_t length) {
  auto n = checked_pow(a.size(), length);
  if (!n) throw Error(ErrorKind::SearchSpaceTooLarge, "q^" + std::to_string(length) + " overflows 64 bits");
  return *n;
}

/// Mixed-radix rank of a word; the first coordinate is most significant, so
/// ranks follow lexicographic order.
inline std::uint64_t word_rank(std::span<const Symbol> w, std::uint32_t q) noexcept {
  std::uint64_t r = 0;
  for (Symbol s : w) r = r * q + s;
  return r;
}

inline Word word_unrank(std::uint64_t rank, std::uint32_t q, std::size_t length) {
  Word w(length);
  for (std::size_t i = length; i-- > 0;) {
    w[i] = static_cast<Symbol>(rank % q);
    rank /= q;
  }
  return w;
}

/// All words of the given length in lexicographic order.
inline std::vector<Word> all_words(const Alphabet& a, std::size_t length) {
  const std::uint64_t n = word_count(a, length);
  std::vector<Word> out;
  out.reserve(n);
  for (std::uint64_t r = 0; r < n; ++r) out.push_back(word_unrank(r, a.size(), length));
  return out;
}

inline std::string format_word(std::span<const Symbol> w, std::string_view sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(w[i]);
  }
  return s;
}

}  // namespace oneshot
