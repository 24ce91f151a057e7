#pragma once

#include <complex>
#include <cstdint>

#include "palinprime/digits.hpp"
#include "palinprime/limits.hpp"

namespace palinprime {

using ComplexValue = std::complex<double>;

/// A point of R/Z held exactly as a reduced fraction numerator / denominator with
/// 0 <= numerator < denominator <= 2^62. Real inputs are rounded to the
/// nearest multiple of 2^-53 after reduction mod 1.
class Angle {
 public:
  static constexpr std::uint64_t kMaxDenominator = std::uint64_t{1} << 62;
  static constexpr std::uint64_t kRealDenominator = std::uint64_t{1} << 53;

  static Angle fraction(std::int64_t h, std::uint64_t q);
  /// h/q + k/(g^3 - g).
  static Angle farey(std::int64_t h, std::uint64_t q, std::int64_t k, Base g);
  static Angle real(double alpha);

  std::uint64_t numerator() const { return num_; }
  std::uint64_t denominator() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// alpha * n mod 1.
  Angle times(Natural n) const;
  Angle operator-() const;

 private:
  Angle(std::uint64_t num, std::uint64_t den);

  std::uint64_t num_;
  std::uint64_t den_;
};

/// e(r / den) = exp(2 pi i r / den).
ComplexValue unit_root(std::uint64_t r, std::uint64_t den);

/// sum_{0 <= n < g} e(alpha n).
ComplexValue psi(const Angle& alpha, Base g);

/// prod_{1 <= i < N} |psi(alpha (g^i + g^(2N-i)))|; 1 when N = 1.
double phi(unsigned half_length, const Angle& alpha, Base g);

/// sum_{n in Pi(length)} e(alpha n), one term per palindrome with
/// compensated summation over a fixed shard layout.
ComplexValue s_direct(unsigned length, const Angle& alpha, Base g, const Limits& limits = Limits::defaults());

/// The same sum evaluated as (sum over the leading free-digit block) times
/// (sum over the trailing block); each block is enumerated value by value.
ComplexValue s_split(unsigned length, const Angle& alpha, Base g, const Limits& limits = Limits::defaults());

enum class SumMethod { direct, split };

struct Lemma33Check {
  double lhs = 0;
  double rhs = 0;
  bool ok = false;
};

/// |S(2N+1; alpha)| against g^2 Phi_N(alpha) + 1e-9 g^N.
Lemma33Check lemma33_audit(unsigned half_length, const Angle& alpha, Base g, SumMethod method = SumMethod::direct,
                           const Limits& limits = Limits::defaults());

/// sum_{q <= Q, (q, g^3-g) = 1} q^(-1/2) max_{a, k} |#Pi_{k,g}(2N+1; a, q) - #Pi_{k,g}(2N+1)/q|.
double bv_discrepancy(std::uint64_t max_modulus, unsigned half_length, Base g,
                      const Limits& limits = Limits::defaults());

/// sum_{2 <= q <= Q, (q, g^3-g) = 1} sum*_{h mod q} Phi_N(h/q + k/(g^3-g)).
double phi_farey_sum(std::uint64_t max_modulus, unsigned half_length, std::int64_t k, Base g,
                     const Limits& limits = Limits::defaults());

}  // namespace palinprime
