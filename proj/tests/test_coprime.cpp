#include <doctest.h>

#include "oracles.hpp"
#include "palinprime/coprime.hpp"
#include "palinprime/errors.hpp"

using namespace palinprime;

namespace {

Limits serial() { return Limits{}.with_threads(1); }

}  // namespace

TEST_CASE("coprime_pairs_brute") {
  const std::vector<std::uint64_t> pi3{5, 7}, one{1}, evens{2, 4};
  CHECK(coprime_pairs_brute(pi3, serial()) == 2);
  CHECK(coprime_pairs_brute(one, serial()) == 1);
  CHECK(coprime_pairs_brute(evens, serial()) == 0);
  CHECK(coprime_pairs_brute(std::vector<std::uint64_t>{}, serial()) == 0);

  Limits tight = serial();
  tight.pairs = 3;
  CHECK_THROWS_AS(coprime_pairs_brute(pi3, tight), BudgetError);
}

TEST_CASE("brute force is symmetric under transposition") {
  const auto values = oracle::palindromes(5, 10);
  const Natural rows = coprime_pairs_brute(values, serial(), PairOrder::row_major);
  CHECK(rows == coprime_pairs_brute(values, serial(), PairOrder::column_major));
  CHECK(rows == oracle::coprime_pairs(values));
}

TEST_CASE("default thresholds") {
  CHECK(default_threshold(1, Base(10)) == 1);   // 10^(1/5) ~ 1.58
  CHECK(default_threshold(5, Base(10)) == 10);
  CHECK(default_threshold(16, Base(2)) == 9);   // 9^5 <= 2^16 < 10^5
  CHECK(default_threshold(4, Base(2)) == 1);
  CHECK(default_threshold(std::uint64_t{100000}) == 10);
  CHECK(default_threshold(std::uint64_t{99999}) == 9);
}

TEST_CASE("coprime_pairs_sieve") {
  for (std::uint64_t u : {0ull, 1ull, 5ull, 100ull}) {
    const auto r = coprime_pairs_sieve(3, Base(2), u, serial());
    CHECK(r.total == 2);
    CHECK(r.n1 + r.n2 == r.total);
    CHECK(r.pair_universe == 4);
    CHECK(r.threshold == u);
  }
  const auto values = oracle::palindromes(3, 10);
  const auto r10 = coprime_pairs_sieve(3, Base(10), default_threshold(1, Base(10)), serial());
  CHECK(r10.total == static_cast<Wide>(oracle::coprime_pairs(values)));
  CHECK(r10.pair_universe == 8100);
}

TEST_CASE("sieve equals brute force on full small instances") {
  for (unsigned g : {2u, 3u, 5u, 10u}) {
    for (unsigned n = 1; count_formula(2 * n + 1, Base(g)) <= 1000; ++n) {
      const auto values = oracle::palindromes(2 * n + 1, g);
      const auto brute = static_cast<Wide>(oracle::coprime_pairs(values));
      for (std::uint64_t u : {0ull, 1ull, 3ull, 50ull, 1000000ull}) {
        const auto r = coprime_pairs_sieve(2 * n + 1, Base(g), u, serial());
        CHECK(r.total == brute);
        CHECK(r.n1 + r.n2 == r.total);
      }
    }
  }
}

TEST_CASE("pstar_coprime_pairs") {
  // gcd(7,7) = 7 and gcd(5,5) = 5, so the diagonal only counts for 1
  CHECK(pstar_coprime_pairs(100, Base(10), 1, serial()).total == 3);
  CHECK(pstar_coprime_pairs(1, Base(10), 1, serial()).total == 1);
  CHECK(pstar_coprime_pairs(10, Base(2), 1, serial()).total == 7);
  for (unsigned g : {2u, 3u, 10u}) {
    for (std::uint64_t x : {50ull, 999ull, 10000ull}) {
      const auto values = oracle::pstar(x, g);
      const auto r = pstar_coprime_pairs(x, Base(g), default_threshold(x), serial());
      CHECK(r.total == static_cast<Wide>(oracle::coprime_pairs(values)));
      CHECK(r.pair_universe == Natural{values.size()} * values.size());
    }
  }
}

TEST_CASE("convergence_report") {
  const std::vector<std::uint64_t> one{1};
  const auto rows2 = convergence_report(Base(2), one, ConvergenceMode::fixed_length, serial());
  REQUIRE(rows2.size() == 1);
  CHECK(rows2[0].ratio == 0.5);
  CHECK(rows2[0].universe == 4);
  CHECK(rows2[0].predicted == doctest::Approx(0.81057).epsilon(1e-5));
  CHECK(rows2[0].relative_deviation == doctest::Approx(std::abs(0.5 - rows2[0].predicted) / rows2[0].predicted));

  const auto rows10 = convergence_report(Base(10), one, ConvergenceMode::fixed_length, serial());
  CHECK(rows10[0].universe == 8100);

  const std::vector<std::uint64_t> xs{100, 1000};
  for (const auto& row : convergence_report(Base(10), xs, ConvergenceMode::pstar, serial())) {
    CHECK(row.relative_deviation >= 0);
    CHECK(row.predicted == doctest::Approx(thm2_constant(Base(10)).value));
    CHECK(row.ratio == doctest::Approx(static_cast<double>(row.count) / static_cast<double>(row.universe)));
  }
  const std::vector<std::uint64_t> zero{0};
  CHECK_THROWS_AS(convergence_report(Base(10), zero, ConvergenceMode::fixed_length, serial()), DomainError);
}

TEST_CASE("sieve results do not depend on the thread count") {
  const auto a = coprime_pairs_sieve(21, Base(2), 4, serial());
  const auto b = coprime_pairs_sieve(21, Base(2), 4, Limits{}.with_threads(5));
  CHECK(a.total == b.total);
  CHECK(a.n1 == b.n1);
  CHECK(a.n2 == b.n2);
}
