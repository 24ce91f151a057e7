#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "palinprime/digits.hpp"

namespace palinprime {

using Rational = boost::multiprecision::cpp_rational;

/// "num/den", always with an explicit denominator.
std::string to_string(const Rational& r);
double to_double(const Rational& r);

/// zeta(2) = pi^2 / 6.
inline constexpr double kZeta2 = std::numbers::pi * std::numbers::pi / 6.0;

/// Largest input accepted by factorize().
inline constexpr std::uint64_t kFactorBound = std::uint64_t{1} << 63;
/// Trial-division primes are tabulated up to this limit.
inline constexpr std::uint32_t kPrimeTableLimit = 10'000'000;

Natural gcd(Natural a, Natural b);

struct Factorization {
  std::uint64_t n = 1;
  std::map<std::uint64_t, unsigned> factors;  // prime -> exponent

  std::size_t omega() const { return factors.size(); }
  bool squarefree() const;
  std::uint64_t radical() const;
};

/// Primes below kPrimeTableLimit, built once on first use.
const std::vector<std::uint32_t>& prime_table();

/// Complete factorization of 1 <= n <= bound by trial division over the
/// prime table; a cofactor beyond the table is accepted only if it is prime.
Factorization factorize(std::uint64_t n, std::uint64_t bound = kFactorBound);

bool is_prime(std::uint64_t n);

int mobius(const Factorization& f);
int mobius(std::uint64_t n);
std::uint64_t tau(const Factorization& f);
std::uint64_t tau(std::uint64_t n);

/// All 2^omega squarefree divisors, ascending.
std::vector<std::uint64_t> squarefree_divisors(const Factorization& f);
std::vector<std::uint64_t> squarefree_divisors(std::uint64_t n);

/// Squarefree divisors paired with mu(d), in generation order.
std::vector<std::pair<std::uint64_t, int>> signed_squarefree_divisors(const Factorization& f);

/// All divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// An exact rational factor together with its quotient by zeta(2).
struct ZetaQuotient {
  Rational rational;
  double value;
};

Rational rho(Base g);

/// rho(g) (1 - (2/g) prod_{p | g} p/(p+1)) / zeta(2).
ZetaQuotient thm1_constant(Base g);
/// prod_{p | g^3 - g} (1 - p^-2)^-1 / zeta(2).
ZetaQuotient thm2_constant(Base g);
/// Limit of sum_{(m,q)=1} mu(m)/m^2 = prod_{p | q} (1 - p^-2)^-1 / zeta(2).
ZetaQuotient euler_restricted_mobius_sum_limit(std::uint64_t q);

}  // namespace palinprime
