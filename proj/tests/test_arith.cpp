#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "palinprime/arith.hpp"
#include "palinprime/errors.hpp"

using namespace palinprime;

TEST_CASE("gcd") {
  CHECK(gcd(1221, 990) == 33);
  CHECK(gcd(7, 5) == 1);
  CHECK(gcd(0, 9) == 9);
  CHECK(gcd(9, 0) == 9);
}

TEST_CASE("factorize") {
  const auto f990 = factorize(990);
  CHECK(f990.factors == std::map<std::uint64_t, unsigned>{{2, 1}, {3, 2}, {5, 1}, {11, 1}});
  CHECK(factorize(1).factors.empty());
  CHECK(factorize(1221).factors == std::map<std::uint64_t, unsigned>{{3, 1}, {11, 1}, {37, 1}});
  CHECK(factorize(1024).factors == std::map<std::uint64_t, unsigned>{{2, 10}});

  // 2^61 - 1 is prime and lies beyond the square of the prime table.
  const std::uint64_t m61 = (std::uint64_t{1} << 61) - 1;
  CHECK(factorize(m61).factors == std::map<std::uint64_t, unsigned>{{m61, 1}});
  // Composite cofactor above 10^7 squared: both factors exceed the table.
  CHECK_THROWS_AS(factorize(std::uint64_t{10000019} * 10000079), OverflowError);
  CHECK_THROWS_AS(factorize(0), DomainError);
  CHECK_THROWS_AS(factorize(1000, 999), OverflowError);
  CHECK_THROWS_AS(factorize(kFactorBound + 1), OverflowError);
}

TEST_CASE("factorization reproduces n") {
  for (std::uint64_t n = 1; n <= 20000; ++n) {
    const auto f = factorize(n);
    std::uint64_t prod = 1;
    for (const auto& [p, e] : f.factors) {
      CHECK(is_prime(p));
      for (unsigned i = 0; i < e; ++i) prod *= p;
    }
    REQUIRE(prod == n);
  }
}

TEST_CASE("is_prime against the prime table") {
  const auto& primes = prime_table();
  CHECK(primes.size() == 664579);  // pi(10^7)
  std::size_t k = 0;
  for (std::uint64_t n = 0; n <= 100000; ++n) {
    const bool expected = k < primes.size() && primes[k] == n;
    if (expected) ++k;
    REQUIRE(is_prime(n) == expected);
  }
}

TEST_CASE("mobius, tau and squarefree divisors") {
  CHECK(mobius(6) == 1);
  CHECK(tau(12) == 6);
  CHECK(mobius(1) == 1);
  CHECK(tau(1) == 1);
  CHECK(mobius(30) == -1);
  CHECK(mobius(12) == 0);
  CHECK(squarefree_divisors(990) ==
        std::vector<std::uint64_t>{1, 2, 3, 5, 6, 10, 11, 15, 22, 30, 33, 55, 66, 110, 165, 330});
  CHECK(squarefree_divisors(1) == std::vector<std::uint64_t>{1});
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(990).size() == 24);
}

TEST_CASE("mobius agrees with a linear sieve and sums to the indicator") {
  const auto mu = oracle::mobius_table(10000);
  for (std::uint64_t m = 1; m <= 10000; ++m) {
    REQUIRE(mobius(m) == mu[m]);
    int sum = 0;
    for (std::uint64_t d : divisors(m)) sum += mobius(d);
    CHECK(sum == (m == 1 ? 1 : 0));
    CHECK(tau(m) <= m);
  }
  for (std::uint64_t p : {2, 3, 5, 7, 11, 101})
    for (std::uint64_t k = 1; k <= 50; ++k) CHECK(mobius(p * p * k) == 0);
}

TEST_CASE("rho") {
  CHECK(rho(Base(10)) == Rational(100, 81));
  CHECK(rho(Base(2)) == Rational(4));
  CHECK(rho(Base(3)) == Rational(5, 3));
  CHECK(to_string(rho(Base(10))) == "100/81");
  CHECK(to_string(rho(Base(2))) == "4/1");
}

TEST_CASE("leading constants") {
  const auto t10 = thm1_constant(Base(10));
  CHECK(t10.rational == Rational(800, 729));
  CHECK(t10.value == doctest::Approx(800.0 / 729.0 / kZeta2).epsilon(1e-15));
  CHECK(t10.value == doctest::Approx(0.667135).epsilon(1e-5));
  CHECK(thm1_constant(Base(2)).rational == Rational(4, 3));
  CHECK(thm1_constant(Base(2)).value == doctest::Approx(0.81057).epsilon(1e-5));
  CHECK(thm1_constant(Base(3)).rational == Rational(5, 6));
  CHECK(thm1_constant(Base(3)).value == doctest::Approx(0.50660).epsilon(1e-5));

  CHECK(thm2_constant(Base(10)).rational == Rational(605, 384));
  CHECK(thm2_constant(Base(10)).value == doctest::Approx(0.95779).epsilon(1e-5));
  CHECK(thm2_constant(Base(2)).rational == Rational(3, 2));
  CHECK(thm2_constant(Base(3)).rational == Rational(3, 2));
  CHECK(thm2_constant(Base(3)).value == doctest::Approx(0.91189).epsilon(1e-5));
  CHECK(kZeta2 == doctest::Approx(1.6449340668482264).epsilon(1e-15));
}

TEST_CASE("restricted Moebius limits") {
  const auto one = euler_restricted_mobius_sum_limit(1);
  CHECK(one.rational == Rational(1));
  CHECK(one.value == doctest::Approx(0.60793).epsilon(1e-5));
  CHECK(euler_restricted_mobius_sum_limit(990).rational == Rational(605, 384));
  CHECK(euler_restricted_mobius_sum_limit(6).rational == Rational(3, 2));
  CHECK_THROWS_AS(euler_restricted_mobius_sum_limit(0), DomainError);
  for (unsigned g : {2u, 3u, 5u, 6u, 10u, 12u})
    CHECK(thm2_constant(Base(g)).value == euler_restricted_mobius_sum_limit(Base(g).cube_minus()).value);
}

TEST_CASE("partial Moebius sums converge within 2/U") {
  constexpr std::uint32_t kMax = 1'000'000;
  const auto mu = oracle::mobius_table(kMax);
  for (std::uint64_t q : {1ull, 6ull, 990ull}) {
    const double limit = euler_restricted_mobius_sum_limit(q).value;
    double partial = 0;
    std::uint64_t next_check = 10;
    for (std::uint64_t m = 1; m <= kMax; ++m) {
      if (mu[m] != 0 && std::gcd(m, q) == 1) partial += mu[m] / (static_cast<double>(m) * m);
      if (m == next_check) {
        CHECK(std::abs(partial - limit) <= 2.0 / static_cast<double>(m));
        next_check *= 10;
      }
    }
  }
}

TEST_CASE("leading constant from its closed form in floating point") {
  // Independent of the rational path: direct double evaluation.
  for (unsigned g = 2; g <= 30; ++g) {
    const double gd = g;
    const double r = g % 2 == 0 ? (gd / (gd - 1)) * (gd / (gd - 1)) : (gd + 1.0 / 3.0) / (gd - 1);
    double prod = 1;
    for (unsigned p = 2; p <= g; ++p)
      if (g % p == 0 && is_prime(p)) prod *= p / (p + 1.0);
    const double expected = r * (1 - 2.0 / gd * prod) / (std::acos(-1.0) * std::acos(-1.0) / 6);
    CHECK(thm1_constant(Base(g)).value == doctest::Approx(expected).epsilon(1e-13));
  }
}
