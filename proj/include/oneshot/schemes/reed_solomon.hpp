#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oneshot/engine/transfer.hpp"
#include "oneshot/schemes/prime_field.hpp"

namespace oneshot {

/// [n, k, n-k+1] Reed-Solomon code over GF(p): the message is the
/// coefficient vector (constant term first) of a polynomial of degree < k,
/// evaluated at the points 0..n-1.
class MdsCode {
 public:
  MdsCode(std::size_t n, std::size_t k, PrimeField field) : n_(n), k_(k), field_(field) {
    if (n > field.modulus())
      throw Error(ErrorKind::FieldTooSmall, "length " + std::to_string(n) + " needs a field with at least " +
                                                std::to_string(n) + " elements, got p=" + std::to_string(field.modulus()));
    if (k == 0 || k > n)
      throw Error(ErrorKind::InvalidCode, "dimension " + std::to_string(k) + " invalid for length " + std::to_string(n));
  }

  std::size_t length() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return k_; }
  std::size_t distance() const noexcept { return n_ - k_ + 1; }
  std::size_t radius() const noexcept { return (distance() - 1) / 2; }
  const PrimeField& field() const noexcept { return field_; }

 private:
  std::size_t n_;
  std::size_t k_;
  PrimeField field_;
};

inline Word rs_encode(const MdsCode& code, std::span<const Symbol> message) {
  if (message.size() != code.dimension())
    throw Error(ErrorKind::LengthMismatch, "message has " + std::to_string(message.size()) + " symbols, expected " +
                                                std::to_string(code.dimension()));
  const auto& f = code.field();
  for (Symbol m : message)
    if (m >= f.modulus()) throw Error(ErrorKind::SymbolOutOfRange, "message symbol " + std::to_string(m) + " not in the field");
  Word out(code.length());
  for (std::size_t x = 0; x < code.length(); ++x) {
    Symbol acc = 0;
    for (std::size_t i = message.size(); i-- > 0;) acc = f.add(f.mul(acc, static_cast<Symbol>(x)), message[i]);
    out[x] = acc;
  }
  return out;
}

inline constexpr std::uint64_t kMaxCodebook = 1'000'000;

/// Every codeword, indexed by the lexicographic rank of its message.
inline std::vector<Word> codebook(const MdsCode& code) {
  const auto size = checked_pow(code.field().modulus(), code.dimension());
  if (!size || *size > kMaxCodebook) throw Error(ErrorKind::SearchSpaceTooLarge, "codebook too large to enumerate");
  std::vector<Word> book;
  book.reserve(*size);
  for (std::uint64_t r = 0; r < *size; ++r)
    book.push_back(rs_encode(code, word_unrank(r, code.field().modulus(), code.dimension())));
  return book;
}

/// Nearest-codeword decoding by scanning the whole codebook. Accepts a
/// received word only if some codeword lies within the unique-decoding
/// radius.
class ExhaustiveDecoder {
 public:
  explicit ExhaustiveDecoder(MdsCode code) : code_(std::move(code)), book_(codebook(code_)) {}

  const MdsCode& code() const noexcept { return code_; }

  std::optional<Word> try_decode(std::span<const Symbol> received) const {
    if (received.size() != code_.length())
      throw Error(ErrorKind::LengthMismatch, "received word has " + std::to_string(received.size()) + " symbols, expected " +
                                                  std::to_string(code_.length()));
    for (std::size_t r = 0; r < book_.size(); ++r)
      if (hamming_distance(book_[r], received) <= code_.radius())
        return word_unrank(r, code_.field().modulus(), code_.dimension());
    return std::nullopt;
  }

  Word decode(std::span<const Symbol> received) const {
    auto m = try_decode(received);
    if (!m) throw Error(ErrorKind::DecodingFailure, "no codeword within distance " + std::to_string(code_.radius()) + " of " +
                                                        format_word(received));
    return *m;
  }

 private:
  MdsCode code_;
  std::vector<Word> book_;
};

inline Word rs_decode(const MdsCode& code, std::span<const Symbol> received) {
  return ExhaustiveDecoder(code).decode(received);
}

/// Smallest Hamming weight of a nonzero codeword, by full codebook scan.
inline std::size_t minimum_distance(const MdsCode& code) {
  std::size_t best = code.length() + 1;
  for (const auto& w : codebook(code)) {
    std::size_t weight = 0;
    for (Symbol s : w) weight += s != 0;
    if (weight > 0) best = std::min(best, weight);
  }
  return best;
}

}  // namespace oneshot
