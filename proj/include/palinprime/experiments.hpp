#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "palinprime/coprime.hpp"
#include "palinprime/expsum.hpp"
#include "palinprime/limits.hpp"
#include "palinprime/report.hpp"

namespace palinprime {

/// A report plus the verdict of the property it audits.
struct AuditOutcome {
  Report report;
  bool passed = true;
};

/// Lengths 1, 2, ... whose palindrome count stays within max_count.
std::vector<unsigned> lengths_up_to_count(Base g, std::uint64_t max_count, bool odd_only = false,
                                          bool even_only = false);

/// Enumerated count equals the closed form for every length with #Pi <= max_count.
AuditOutcome audit_count_formula(std::span<const unsigned> bases, std::uint64_t max_count, const Limits& limits);

/// Every even-length palindrome is divisible by g + 1.
AuditOutcome audit_even_divisibility(std::span<const unsigned> bases, std::uint64_t max_count, const Limits& limits);

/// |#Pi(2N+1; 0, d) - main term| <= g^2 for every d | g^3 - g.
AuditOutcome audit_ap_main_term(std::span<const unsigned> bases, std::uint64_t max_count, const Limits& limits);

struct BtAuditConfig {
  std::vector<unsigned> bases{2, 10};
  unsigned max_length = 9;
  std::uint64_t max_modulus = 10'000;
  unsigned samples_per_modulus = 64;
  std::uint64_t seed = 0;
};

/// count_ap <= bt_majorant over sampled residues, plus the a = g^(L-1) + 1
/// regression showing the additive 1 cannot be dropped.
AuditOutcome audit_brun_titchmarsh(const BtAuditConfig& config, const Limits& limits);

struct ExpSumAuditConfig {
  std::vector<unsigned> bases{2, 3, 10};
  unsigned max_half_length = 6;
  unsigned samples = 10'000;
  std::uint64_t seed = 0;
  /// Budget of direct-sum terms per (g, N) for cross-checking the split sum.
  std::uint64_t cross_check_terms = 10'000'000;
};

/// |S(2N+1; alpha)| <= g^2 Phi_N(alpha) + 1e-9 g^N over seeded alphas, and
/// S(2N+1; 0) = #Pi(2N+1) to 1e-9 relative.
AuditOutcome audit_exponential_sum(const ExpSumAuditConfig& config, const Limits& limits);

/// Seeded uniform angle m / 2^53, independent of the standard library's
/// distribution implementations.
std::vector<Angle> sample_angles(std::uint64_t seed, std::size_t count);
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0);

struct SieveInstance {
  unsigned base;
  bool pstar;            // P*(x) instead of Pi(2N+1)
  std::uint64_t scale;   // N or x
};

/// Sieve total equals the brute-force gcd count and n1 + n2 = total for
/// several thresholds.
AuditOutcome audit_sieve_oracle(std::span<const SieveInstance> instances, const Limits& limits);
std::vector<SieveInstance> default_sieve_instances();

/// Relative deviation at the largest scale is strictly below the smallest.
AuditOutcome audit_convergence(Base g, std::span<const std::uint64_t> scales, ConvergenceMode mode,
                               const Limits& limits);

/// #P*(10^k)/sqrt(10^k) stays within a factor `spread` over the exponents.
AuditOutcome audit_pstar_growth(Base g, unsigned min_exponent, unsigned max_exponent, double spread,
                                const Limits& limits);

}  // namespace palinprime
