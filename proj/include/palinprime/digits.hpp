#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace palinprime {

/// Non-negative integer wide enough for every desk-scale palindrome, modulus
/// and count. Arithmetic that would leave 128 bits throws OverflowError.
using Natural = unsigned __int128;

std::string to_string(Natural n);
Natural parse_natural(std::string_view text);

/// Numeration base g, 2 <= g <= 65536 (so that g^3 - g fits in 64 bits).
class Base {
 public:
  static constexpr unsigned kMax = 65536;

  explicit Base(unsigned g);

  unsigned value() const { return g_; }
  /// g^3 - g, the modulus of the refined classes.
  std::uint64_t cube_minus() const;

  friend bool operator==(Base, Base) = default;

 private:
  unsigned g_;
};

/// Little-endian base-g digits: index i holds the coefficient of g^i.
/// Nonempty, every digit < g, most significant digit nonzero.
class DigitString {
 public:
  DigitString(std::vector<unsigned> digits, Base g);

  std::span<const unsigned> digits() const { return digits_; }
  std::size_t length() const { return digits_.size(); }
  Base base() const { return base_; }
  unsigned operator[](std::size_t i) const { return digits_[i]; }

  friend bool operator==(const DigitString&, const DigitString&) = default;

 private:
  std::vector<unsigned> digits_;
  Base base_;
};

/// A palindrome together with its length; construction validates both.
class Palindrome {
 public:
  Palindrome(Natural value, Base g);

  Natural value() const { return value_; }
  unsigned length() const { return length_; }
  Base base() const { return base_; }

 private:
  Natural value_;
  unsigned length_;
  Base base_;
};

Natural checked_pow(Natural base, unsigned exponent);

DigitString to_digits(Natural n, Base g);
Natural from_digits(const DigitString& ds);
Natural from_digits(std::span<const unsigned> digits, Base g);

/// Number of base-g digits of n >= 1.
unsigned digit_length(Natural n, Base g);
bool is_palindrome(Natural n, Base g);

/// Number of free digits, ceil(length / 2).
inline unsigned free_digit_count(unsigned length) { return (length + 1) / 2; }

/// #Pi(length): g^(h-1) (g-1) with h = ceil(length/2).
Natural palindrome_count(unsigned length, Base g);

/// Mirrors the free digits n_0..n_{h-1} into a palindrome of `length` digits.
Natural make_palindrome(std::span<const unsigned> free, unsigned length, Base g);

/// Free digits of the palindrome with the given rank, n_0 first.
std::vector<unsigned> free_digits_at(Natural rank, unsigned length, Base g);

/// The rank-th smallest palindrome of the given length.
Natural palindrome_at(Natural rank, unsigned length, Base g);
/// Inverse of palindrome_at.
Natural rank_of(Natural n, unsigned length, Base g);

}  // namespace palinprime
