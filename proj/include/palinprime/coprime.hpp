#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "palinprime/census.hpp"

namespace palinprime {

/// Signed 128-bit accumulator for the Moebius sums.
using Wide = __int128;

/// Ordered coprime-pair count split at the threshold U:
/// total = n1 + n2, n1 summing mu(d) c_d^2 over d <= U and n2 over d > U.
struct SieveResult {
  Wide total = 0;
  Wide n1 = 0;
  Wide n2 = 0;
  std::uint64_t threshold = 0;
  Natural pair_universe = 0;
};

enum class PairOrder { row_major, column_major };

/// #{(m, n) in values^2 : gcd(m, n) = 1}, ordered pairs, m = n allowed.
/// `order` only changes the iteration order of the pair matrix.
Natural coprime_pairs_brute(std::span<const std::uint64_t> values, const Limits& limits = Limits::defaults(),
                            PairOrder order = PairOrder::row_major);

/// floor(g^(N/5)), the default split point for length 2N+1.
std::uint64_t default_threshold(unsigned half_length, Base g);
/// floor(x^(1/5)), the default split point for P*(x).
std::uint64_t default_threshold(std::uint64_t x);

/// Sum of mu(d) c_d^2 over the realized squarefree divisors of a profile.
SieveResult sieve_from_profile(const DivisorProfile& profile, std::uint64_t threshold);

/// Ordered coprime pairs in Pi(length) by the Moebius sieve.
SieveResult coprime_pairs_sieve(unsigned length, Base g, std::uint64_t threshold,
                                const Limits& limits = Limits::defaults());

/// Ordered coprime pairs in P*(x) by the Moebius sieve.
SieveResult pstar_coprime_pairs(std::uint64_t x, Base g, std::uint64_t threshold,
                                const Limits& limits = Limits::defaults());

enum class ConvergenceMode { fixed_length, pstar };

struct ConvergenceRow {
  std::uint64_t scale = 0;  // N for fixed length 2N+1, x for P*(x)
  Wide count = 0;
  Natural universe = 0;
  double ratio = 0;
  double predicted = 0;
  double relative_deviation = 0;
};

/// One row per scale comparing the coprime-pair density with the predicted
/// constant (thm1_constant for fixed length, thm2_constant for P*(x)).
std::vector<ConvergenceRow> convergence_report(Base g, std::span<const std::uint64_t> scales, ConvergenceMode mode,
                                               const Limits& limits = Limits::defaults());

}  // namespace palinprime
