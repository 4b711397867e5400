#pragma once

#include <cstdint>
#include <string>

#include "oneshot/core/alphabet.hpp"

namespace oneshot {

inline bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Arithmetic modulo a prime p on the symbols 0..p-1.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  }

  std::uint32_t modulus() const noexcept { return p_; }
  Alphabet alphabet() const { return Alphabet(p_); }

  Symbol add(Symbol a, Symbol b) const { return static_cast<Symbol>((std::uint64_t{a} + b) % p_); }
  Symbol sub(Symbol a, Symbol b) const { return static_cast<Symbol>((std::uint64_t{a} + p_ - b) % p_); }
  Symbol neg(Symbol a) const { return sub(0, a); }
  Symbol mul(Symbol a, Symbol b) const { return static_cast<Symbol>((std::uint64_t{a} * b) % p_); }

  Symbol pow(Symbol a, std::uint64_t e) const {
    std::uint64_t r = 1 % p_, b = a % p_;
    for (; e; e >>= 1, b = b * b % p_)
      if (e & 1) r = r * b % p_;
    return static_cast<Symbol>(r);
  }

  /// Fermat inverse a^(p-2).
  Symbol inv(Symbol a) const {
    if (a % p_ == 0) throw Error(ErrorKind::DivisionByZero, "zero has no inverse");
    return pow(a, p_ - 2);
  }

  Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }

 private:
  std::uint32_t p_;
};

}  // namespace oneshot
