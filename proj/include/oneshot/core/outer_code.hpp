#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "oneshot/core/alphabet.hpp"
#include "oneshot/core/network.hpp"

namespace oneshot {

/// Non-empty set of source words, kept in lexicographic order.
class OuterCode {
 public:
  explicit OuterCode(std::vector<Word> words) : words_(std::move(words)) {
    if (words_.empty()) throw Error(ErrorKind::InvalidCode, "an outer code needs at least one codeword");
    for (const auto& w : words_)
      if (w.size() != words_.front().size()) throw Error(ErrorKind::LengthMismatch, "codewords have different lengths");
    std::sort(words_.begin(), words_.end());
    if (std::adjacent_find(words_.begin(), words_.end()) != words_.end())
      throw Error(ErrorKind::InvalidCode, "duplicate codeword " + format_word(*std::adjacent_find(words_.begin(), words_.end())));
  }

  const std::vector<Word>& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  std::size_t length() const noexcept { return words_.front().size(); }
  bool contains(const Word& w) const { return std::binary_search(words_.begin(), words_.end(), w); }

  friend bool operator==(const OuterCode&, const OuterCode&) = default;

 private:
  std::vector<Word> words_;
};

/// Codeword length must equal outdeg(source); symbols must lie in the alphabet.
inline void check_outer_code(const Network& net, const Alphabet& a, const OuterCode& code) {
  const std::size_t n = net.out_degree(net.source());
  if (code.length() != n)
    throw Error(ErrorKind::LengthMismatch,
                "codewords have length " + std::to_string(code.length()) + ", source has " + std::to_string(n) + " out-edges");
  for (const auto& w : code.words())
    for (Symbol s : w)
      if (!a.contains(s)) throw Error(ErrorKind::SymbolOutOfRange, "codeword " + format_word(w) + " leaves the alphabet");
}

}  // namespace oneshot
