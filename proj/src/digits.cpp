#include "palinprime/digits.hpp"

#include <algorithm>

#include "palinprime/errors.hpp"

namespace palinprime {

std::string to_string(Natural n) {
  if (n == 0) return "0";
  std::string out;
  while (n != 0) {
    out.push_back(static_cast<char>('0' + static_cast<unsigned>(n % 10)));
    n /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Natural parse_natural(std::string_view text) {
  if (text.empty()) throw DomainError("empty integer literal");
  Natural value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw DomainError("not a non-negative integer: '" + std::string(text) + "'");
    if (__builtin_mul_overflow(value, Natural{10}, &value) ||
        __builtin_add_overflow(value, Natural(static_cast<unsigned>(c - '0')), &value))
      throw OverflowError("integer literal exceeds 128 bits: '" + std::string(text) + "'");
  }
  return value;
}

Base::Base(unsigned g) : g_(g) {
  if (g < 2) throw DomainError("base must be at least 2, got " + std::to_string(g));
  if (g > kMax) throw DomainError("base must be at most 65536, got " + std::to_string(g));
}

std::uint64_t Base::cube_minus() const {
  const std::uint64_t g = g_;
  return g * g * g - g;
}

DigitString::DigitString(std::vector<unsigned> digits, Base g) : digits_(std::move(digits)), base_(g) {
  if (digits_.empty()) throw DomainError("digit string must be nonempty");
  for (unsigned d : digits_)
    if (d >= g.value())
      throw DomainError("digit " + std::to_string(d) + " out of range for base " + std::to_string(g.value()));
  if (digits_.back() == 0) throw DomainError("most significant digit must be nonzero");
}

Palindrome::Palindrome(Natural value, Base g) : value_(value), length_(0), base_(g) {
  if (!is_palindrome(value, g)) throw DomainError(to_string(value) + " is not a palindrome");
  length_ = digit_length(value, g);
}

Natural checked_pow(Natural base, unsigned exponent) {
  Natural result = 1;
  for (unsigned i = 0; i < exponent; ++i)
    if (__builtin_mul_overflow(result, base, &result)) throw OverflowError("power exceeds 128 bits");
  return result;
}

DigitString to_digits(Natural n, Base g) {
  if (n == 0) throw DomainError("to_digits requires n >= 1");
  std::vector<unsigned> digits;
  while (n != 0) {
    digits.push_back(static_cast<unsigned>(n % g.value()));
    n /= g.value();
  }
  return DigitString(std::move(digits), g);
}

Natural from_digits(const DigitString& ds) {
  Natural value = 0;
  for (std::size_t i = ds.length(); i-- > 0;) {
    if (__builtin_mul_overflow(value, Natural{ds.base().value()}, &value) ||
        __builtin_add_overflow(value, Natural{ds[i]}, &value))
      throw OverflowError("digit string value exceeds 128 bits");
  }
  return value;
}

Natural from_digits(std::span<const unsigned> digits, Base g) {
  return from_digits(DigitString(std::vector<unsigned>(digits.begin(), digits.end()), g));
}

unsigned digit_length(Natural n, Base g) {
  if (n == 0) throw DomainError("digit_length requires n >= 1");
  unsigned len = 0;
  for (; n != 0; n /= g.value()) ++len;
  return len;
}

bool is_palindrome(Natural n, Base g) {
  const DigitString ds = to_digits(n, g);
  const auto d = ds.digits();
  return std::equal(d.begin(), d.begin() + d.size() / 2, d.rbegin());
}

Natural palindrome_count(unsigned length, Base g) {
  if (length == 0) throw DomainError("palindrome length must be positive");
  Natural count = checked_pow(g.value(), free_digit_count(length) - 1);
  if (__builtin_mul_overflow(count, Natural{g.value() - 1}, &count))
    throw OverflowError("palindrome count exceeds 128 bits");
  return count;
}

Natural make_palindrome(std::span<const unsigned> free, unsigned length, Base g) {
  if (length == 0) throw DomainError("palindrome length must be positive");
  if (free.size() != free_digit_count(length))
    throw DomainError("length " + std::to_string(length) + " needs " + std::to_string(free_digit_count(length)) +
                      " free digits, got " + std::to_string(free.size()));
  if (free[0] == 0) throw DomainError("leading free digit n_0 must be nonzero");
  std::vector<unsigned> digits(length);
  for (std::size_t i = 0; i < free.size(); ++i) {
    digits[i] = free[i];
    digits[length - 1 - i] = free[i];
  }
  return from_digits(DigitString(std::move(digits), g));
}

std::vector<unsigned> free_digits_at(Natural rank, unsigned length, Base g) {
  const Natural count = palindrome_count(length, g);
  if (rank >= count)
    throw RangeError("rank " + to_string(rank) + " outside [0, " + to_string(count) + ") for length " +
                     std::to_string(length));
  const unsigned h = free_digit_count(length);
  std::vector<unsigned> free(h);
  for (unsigned i = h; i-- > 1;) {
    free[i] = static_cast<unsigned>(rank % g.value());
    rank /= g.value();
  }
  free[0] = static_cast<unsigned>(rank) + 1;
  return free;
}

Natural palindrome_at(Natural rank, unsigned length, Base g) {
  return make_palindrome(free_digits_at(rank, length, g), length, g);
}

Natural rank_of(Natural n, unsigned length, Base g) {
  if (n == 0 || digit_length(n, g) != length || !is_palindrome(n, g))
    throw DomainError(to_string(n) + " is not a base-" + std::to_string(g.value()) + " palindrome of length " +
                      std::to_string(length));
  const DigitString ds = to_digits(n, g);
  const unsigned h = free_digit_count(length);
  Natural rank = ds[0] - 1;
  for (unsigned i = 1; i < h; ++i) rank = rank * g.value() + ds[i];
  return rank;
}

}  // namespace palinprime
