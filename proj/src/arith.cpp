#include "palinprime/arith.hpp"

#include <algorithm>
#include <mutex>

#include "palinprime/errors.hpp"

namespace palinprime {

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Natural gcd(Natural a, Natural b) {
  while (b != 0) {
    const Natural t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool Factorization::squarefree() const {
  return std::all_of(factors.begin(), factors.end(), [](const auto& pe) { return pe.second == 1; });
}

std::uint64_t Factorization::radical() const {
  std::uint64_t r = 1;
  for (const auto& [p, e] : factors) r *= p;
  return r;
}

const std::vector<std::uint32_t>& prime_table() {
  static const std::vector<std::uint32_t> primes = [] {
    // Odd-only sieve of Eratosthenes: index i stands for 2i + 1.
    const std::uint32_t half = kPrimeTableLimit / 2;
    std::vector<bool> composite(half, false);
    for (std::uint32_t i = 1; 2 * i * (i + 1) < half; ++i) {
      if (composite[i]) continue;
      const std::uint32_t p = 2 * i + 1;
      for (std::uint64_t j = 2ull * i * (i + 1); j < half; j += p) composite[j] = true;
    }
    std::vector<std::uint32_t> out{2};
    for (std::uint32_t i = 1; i < half; ++i)
      if (!composite[i]) out.push_back(2 * i + 1);
    return out;
  }();
  return primes;
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(Natural{a} * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  for (b %= m; e != 0; e >>= 1) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  for (; (d & 1) == 0; d >>= 1) ++s;
  // These witnesses are deterministic for all n < 2^64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned r = 1; r < s && witness; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) witness = false;
    }
    if (witness) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n, std::uint64_t bound) {
  if (n == 0) throw DomainError("factorize requires n >= 1");
  if (n > bound) throw OverflowError("factorize: " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  Factorization f;
  f.n = n;
  std::uint64_t m = n;
  if (m > 1) {
    for (std::uint32_t p : prime_table()) {
      if (std::uint64_t{p} * p > m) break;
      if (m % p != 0) continue;
      unsigned e = 0;
      do {
        m /= p;
        ++e;
      } while (m % p == 0);
      f.factors.emplace(p, e);
    }
  }
  if (m > 1) {
    const std::uint64_t reach = std::uint64_t{kPrimeTableLimit} * kPrimeTableLimit;
    if (m >= reach && !is_prime(m))
      throw OverflowError("factorize: composite cofactor " + std::to_string(m) + " beyond trial-division reach");
    f.factors.emplace(m, 1);
  }
  return f;
}

int mobius(const Factorization& f) {
  if (!f.squarefree()) return 0;
  return f.omega() % 2 == 0 ? 1 : -1;
}

int mobius(std::uint64_t n) { return mobius(factorize(n)); }

std::uint64_t tau(const Factorization& f) {
  std::uint64_t t = 1;
  for (const auto& [p, e] : f.factors) t *= e + 1;
  return t;
}

std::uint64_t tau(std::uint64_t n) { return tau(factorize(n)); }

std::vector<std::uint64_t> squarefree_divisors(const Factorization& f) {
  std::vector<std::uint64_t> out{1};
  out.reserve(std::size_t{1} << f.omega());
  for (const auto& [p, e] : f.factors) {
    const std::size_t k = out.size();
    for (std::size_t i = 0; i < k; ++i) out.push_back(out[i] * p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> squarefree_divisors(std::uint64_t n) { return squarefree_divisors(factorize(n)); }

std::vector<std::pair<std::uint64_t, int>> signed_squarefree_divisors(const Factorization& f) {
  std::vector<std::pair<std::uint64_t, int>> out{{1, 1}};
  out.reserve(std::size_t{1} << f.omega());
  for (const auto& [p, e] : f.factors) {
    const std::size_t k = out.size();
    for (std::size_t i = 0; i < k; ++i) out.emplace_back(out[i].first * p, -out[i].second);
  }
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : factorize(n).factors) {
    const std::size_t k = out.size();
    std::uint64_t pk = 1;
    for (unsigned j = 1; j <= e; ++j) {
      pk *= p;
      for (std::size_t i = 0; i < k; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational rho(Base g) {
  const Rational gr(g.value());
  if (g.value() % 2 == 0) {
    const Rational t = gr / (gr - 1);
    return t * t;
  }
  return (gr + Rational(1, 3)) / (gr - 1);
}

namespace {

Rational inverse_euler_factor(std::uint64_t q) {
  Rational product(1);
  for (const auto& [p, e] : factorize(q).factors) {
    const Rational p2 = Rational(p) * p;
    product *= p2 / (p2 - 1);
  }
  return product;
}

ZetaQuotient over_zeta2(Rational r) {
  const double v = to_double(r) / kZeta2;
  return {std::move(r), v};
}

}  // namespace

ZetaQuotient thm1_constant(Base g) {
  Rational product(1);
  for (const auto& [p, e] : factorize(g.value()).factors) product *= Rational(p, p + 1);
  return over_zeta2(rho(g) * (1 - Rational(2, g.value()) * product));
}

ZetaQuotient thm2_constant(Base g) { return over_zeta2(inverse_euler_factor(g.cube_minus())); }

ZetaQuotient euler_restricted_mobius_sum_limit(std::uint64_t q) {
  if (q == 0) throw DomainError("modulus must be positive");
  return over_zeta2(inverse_euler_factor(q));
}

}  // namespace palinprime
