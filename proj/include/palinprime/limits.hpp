#pragma once

#include <cstdint>

namespace palinprime {

/// Resource limits and parallelism shared by every exhaustive operation.
struct Limits {
  /// Maximum number of palindromes any single enumeration may visit.
  std::uint64_t enumeration = 20'000'000;
  /// Maximum number of ordered pairs the brute-force gcd counter may visit.
  std::uint64_t pairs = 1'000'000'000;
  /// Worker threads; results never depend on this value.
  unsigned threads = 1;

  /// Defaults, with PALINPRIME_BUDGET overriding `enumeration` and
  /// `threads` set to the available hardware parallelism.
  static Limits defaults();

  Limits with_threads(unsigned t) const {
    Limits l = *this;
    l.threads = t == 0 ? 1 : t;
    return l;
  }
};

void check_enumeration_budget(std::uint64_t count, const Limits& limits);

}  // namespace palinprime
