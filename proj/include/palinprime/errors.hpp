#pragma once

#include <stdexcept>
#include <string>

namespace palinprime {

/// Invalid argument: bad base, zero where a positive integer is required,
/// non-palindrome passed to rank_of, divisor not dividing g^3 - g, ...
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Rank outside [0, #Pi(length)).
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Enumeration or pair budget exceeded.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Value outside the representable or factorable range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace palinprime
