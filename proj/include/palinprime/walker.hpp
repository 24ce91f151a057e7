#pragma once

#include <cstdint>
#include <vector>

#include "palinprime/digits.hpp"
#include "palinprime/errors.hpp"

namespace palinprime {

/// Odometer over the free digits of Pi(length), visiting palindromes in
/// increasing numeric order. Tracks either the exact value (Modular = false,
/// requires g^length <= 2^64) or multiplier * n mod modulus (Modular = true,
/// modulus <= 2^63), using only additions per step.
template <bool Modular>
class PalindromeWalker {
 public:
  PalindromeWalker(unsigned length, Base g, std::uint64_t modulus = 0, std::uint64_t multiplier = 1)
      : g_(g.value()), modulus_(modulus), free_(free_digit_count(length)) {
    if constexpr (Modular) {
      if (modulus == 0 || modulus > (std::uint64_t{1} << 63))
        throw DomainError("walker modulus must lie in [1, 2^63]");
    } else {
      if (checked_pow(g.value(), length) - 1 > Natural{UINT64_MAX})
        throw OverflowError("palindromes of length " + std::to_string(length) + " exceed 64 bits");
    }
    const unsigned h = free_digit_count(length);
    step_.resize(h);
    reset_.resize(h);
    for (unsigned i = 0; i < h; ++i) {
      const unsigned mirror = length - 1 - i;
      Natural w;
      if constexpr (Modular) {
        w = pow_mod(g.value(), i) + (mirror != i ? pow_mod(g.value(), mirror) : 0);
        w = (w % modulus) * (multiplier % modulus) % modulus;
        step_[i] = static_cast<std::uint64_t>(w);
        reset_[i] = static_cast<std::uint64_t>(w * (g_ - 1) % modulus);
      } else {
        w = checked_pow(g.value(), i) + (mirror != i ? checked_pow(g.value(), mirror) : 0);
        step_[i] = static_cast<std::uint64_t>(w);
        reset_[i] = static_cast<std::uint64_t>(w * (g_ - 1));
      }
    }
    count_ = static_cast<std::uint64_t>(palindrome_count(length, g));
    seek(0);
  }

  std::uint64_t count() const { return count_; }

  /// Positions the walker on the palindrome of the given rank.
  void seek(std::uint64_t rank) {
    if (rank >= count_) {
      done_ = true;
      return;
    }
    done_ = false;
    std::uint64_t r = rank;
    for (std::size_t i = free_.size(); i-- > 1;) {
      free_[i] = static_cast<unsigned>(r % g_);
      r /= g_;
    }
    free_[0] = static_cast<unsigned>(r) + 1;
    acc_ = 0;
    for (std::size_t i = 0; i < free_.size(); ++i) {
      if constexpr (Modular)
        acc_ = static_cast<std::uint64_t>((Natural{acc_} + Natural{step_[i]} * free_[i]) % modulus_);
      else
        acc_ += step_[i] * free_[i];
    }
  }

  bool done() const { return done_; }
  std::uint64_t value() const { return acc_; }
  std::span<const unsigned> free_digits() const { return free_; }

  /// Moves to the next palindrome; returns false past the last one.
  bool advance() {
    std::size_t i = free_.size() - 1;
    for (;;) {
      if (free_[i] + 1 < g_) {
        ++free_[i];
        add(step_[i]);
        return true;
      }
      if (i == 0) {
        done_ = true;
        return false;
      }
      free_[i] = 0;
      sub(reset_[i]);
      --i;
    }
  }

 private:
  Natural pow_mod(unsigned base, unsigned exponent) const {
    Natural result = 1 % modulus_;
    Natural b = base % modulus_;
    for (unsigned e = exponent; e != 0; e >>= 1) {
      if (e & 1u) result = result * b % modulus_;
      b = b * b % modulus_;
    }
    return result;
  }

  void add(std::uint64_t w) {
    if constexpr (Modular) {
      acc_ += w;
      if (acc_ >= modulus_) acc_ -= modulus_;
    } else {
      acc_ += w;
    }
  }

  void sub(std::uint64_t w) {
    if constexpr (Modular)
      acc_ = acc_ >= w ? acc_ - w : acc_ + (modulus_ - w);
    else
      acc_ -= w;
  }

  unsigned g_;
  std::uint64_t modulus_;
  std::vector<unsigned> free_;
  std::vector<std::uint64_t> step_;
  std::vector<std::uint64_t> reset_;
  std::uint64_t acc_ = 0;
  std::uint64_t count_ = 0;
  bool done_ = false;
};

using ValueWalker = PalindromeWalker<false>;
using ResidueWalker = PalindromeWalker<true>;

/// Calls fn(x) for each palindrome of rank in [begin, end), x being the value
/// or residue tracked by the walker.
template <class Walker, class Fn>
void walk_range(Walker& walker, std::uint64_t begin, std::uint64_t end, Fn&& fn) {
  if (begin >= end) return;
  walker.seek(begin);
  for (std::uint64_t r = begin; r < end; ++r) {
    fn(walker.value());
    walker.advance();
  }
}

}  // namespace palinprime
