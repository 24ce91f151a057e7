#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "palinprime/digits.hpp"
#include "palinprime/errors.hpp"
#include "palinprime/walker.hpp"

using namespace palinprime;

namespace {

std::vector<unsigned> digits_of(const DigitString& ds) { return {ds.digits().begin(), ds.digits().end()}; }

}  // namespace

TEST_CASE("to_digits is little-endian") {
  CHECK(digits_of(to_digits(1221, Base(10))) == std::vector<unsigned>{1, 2, 2, 1});
  CHECK(digits_of(to_digits(5, Base(2))) == std::vector<unsigned>{1, 0, 1});
  CHECK(digits_of(to_digits(9, Base(10))) == std::vector<unsigned>{9});
  CHECK(digits_of(to_digits(123, Base(10))) == std::vector<unsigned>{3, 2, 1});
  CHECK_THROWS_AS(to_digits(0, Base(10)), DomainError);
}

TEST_CASE("from_digits") {
  const std::vector<unsigned> five{1, 0, 1}, ten{0, 1}, p{1, 2, 2, 1};
  CHECK(from_digits(five, Base(2)) == 5);
  CHECK(from_digits(p, Base(10)) == 1221);
  CHECK(from_digits(ten, Base(10)) == 10);

  const std::vector<unsigned> bad_digit{1, 10}, leading_zero{1, 0};
  CHECK_THROWS_AS(from_digits(bad_digit, Base(10)), DomainError);
  CHECK_THROWS_AS(from_digits(leading_zero, Base(10)), DomainError);
  CHECK_THROWS_AS(from_digits(std::vector<unsigned>{}, Base(10)), DomainError);
}

TEST_CASE("base validation") {
  CHECK_THROWS_AS(Base(0), DomainError);
  CHECK_THROWS_AS(Base(1), DomainError);
  CHECK_THROWS_AS(Base(65537), DomainError);
  CHECK(Base(10).cube_minus() == 990);
  CHECK(Base(2).cube_minus() == 6);
}

TEST_CASE("is_palindrome") {
  CHECK(is_palindrome(1221, Base(10)));
  CHECK_FALSE(is_palindrome(123, Base(10)));
  CHECK(is_palindrome(5, Base(2)));
  CHECK_FALSE(is_palindrome(6, Base(2)));
  CHECK_THROWS_AS(is_palindrome(0, Base(2)), DomainError);
  CHECK_THROWS_AS(Palindrome(12, Base(10)), DomainError);
  CHECK(Palindrome(12321, Base(10)).length() == 5);
}

TEST_CASE("make_palindrome mirrors the free digits") {
  const std::vector<unsigned> a{7, 3}, b{1, 0}, c{1};
  CHECK(make_palindrome(a, 3, Base(10)) == 737);
  CHECK(make_palindrome(b, 4, Base(2)) == 9);
  CHECK(make_palindrome(c, 1, Base(10)) == 1);

  const std::vector<unsigned> zero_lead{0, 3};
  CHECK(make_palindrome(a, 4, Base(10)) == 7337);
  CHECK_THROWS_AS(make_palindrome(c, 4, Base(10)), DomainError);
  CHECK_THROWS_AS(make_palindrome(zero_lead, 3, Base(10)), DomainError);
  CHECK_THROWS_AS(make_palindrome(c, 3, Base(10)), DomainError);
}

TEST_CASE("palindrome_at and rank_of") {
  CHECK(palindrome_at(0, 3, Base(10)) == 101);
  CHECK(palindrome_at(89, 3, Base(10)) == 999);
  CHECK(palindrome_at(1, 3, Base(2)) == 7);
  CHECK(rank_of(101, 3, Base(10)) == 0);
  CHECK(rank_of(999, 3, Base(10)) == 89);
  CHECK(rank_of(7, 3, Base(2)) == 1);

  CHECK_THROWS_AS(palindrome_at(90, 3, Base(10)), RangeError);
  CHECK_THROWS_AS(palindrome_at(2, 3, Base(2)), RangeError);
  CHECK_THROWS_AS(rank_of(123, 3, Base(10)), DomainError);
  CHECK_THROWS_AS(rank_of(1221, 3, Base(10)), DomainError);
  CHECK_THROWS_AS(rank_of(0, 1, Base(10)), DomainError);
}

TEST_CASE("unranking reproduces a scan of every integer of that length") {
  for (unsigned g : {2u, 3u, 5u, 10u}) {
    for (unsigned len = 1; oracle::ipow(g, len) <= 200'000; ++len) {
      const auto expected = oracle::palindromes(len, g);
      REQUIRE(palindrome_count(len, Base(g)) == expected.size());
      for (std::size_t r = 0; r < expected.size(); ++r) {
        CHECK(palindrome_at(r, len, Base(g)) == expected[r]);
        CHECK(rank_of(expected[r], len, Base(g)) == r);
      }
    }
  }
}

TEST_CASE("length-1 palindromes are the nonzero digits") {
  CHECK(palindrome_count(1, Base(10)) == 9);
  CHECK(palindrome_at(0, 1, Base(7)) == 1);
  CHECK(palindrome_at(5, 1, Base(7)) == 6);
}

TEST_CASE("round trip over random 128-bit values") {
  std::mt19937_64 rng(12345);
  for (unsigned g : {2u, 3u, 5u, 10u}) {
    for (int i = 0; i < 2000; ++i) {
      Natural n = (Natural{rng()} << 64) | rng();
      n >>= rng() % 128;
      if (n == 0) n = 1;
      const DigitString ds = to_digits(n, Base(g));
      CHECK(ds[ds.length() - 1] != 0);
      CHECK(from_digits(ds) == n);
    }
  }
}

TEST_CASE("make_palindrome output is a palindrome of the requested length") {
  std::mt19937_64 rng(7);
  for (unsigned g : {2u, 3u, 10u, 16u}) {
    for (unsigned len = 1; len <= 30; ++len) {
      std::vector<unsigned> free(free_digit_count(len));
      for (auto& d : free) d = static_cast<unsigned>(rng() % g);
      free[0] = 1 + static_cast<unsigned>(rng() % (g - 1));
      const Natural p = make_palindrome(free, len, Base(g));
      CHECK(is_palindrome(p, Base(g)));
      CHECK(digit_length(p, Base(g)) == len);
      CHECK(palindrome_at(rank_of(p, len, Base(g)), len, Base(g)) == p);
    }
  }
}

TEST_CASE("ranks enumerate in strictly increasing order") {
  for (unsigned g : {2u, 3u, 7u}) {
    for (unsigned len = 1; len <= 9; ++len) {
      const auto count = static_cast<std::uint64_t>(palindrome_count(len, Base(g)));
      Natural prev = 0;
      for (std::uint64_t r = 0; r < count; ++r) {
        const Natural p = palindrome_at(r, len, Base(g));
        CHECK(p > prev);
        prev = p;
      }
    }
  }
}

TEST_CASE("walker values and residues agree with unranking") {
  for (unsigned g : {2u, 3u, 10u}) {
    for (unsigned len = 1; len <= 8; ++len) {
      ValueWalker values(len, Base(g));
      ResidueWalker mod7(len, Base(g), 7);
      ResidueWalker scaled(len, Base(g), 1000003, 12345);
      for (std::uint64_t r = 0; r < values.count(); ++r) {
        const auto p = static_cast<std::uint64_t>(palindrome_at(r, len, Base(g)));
        REQUIRE(values.value() == p);
        REQUIRE(mod7.value() == p % 7);
        REQUIRE(scaled.value() == (p % 1000003) * 12345 % 1000003);
        const bool more = values.advance();
        mod7.advance();
        scaled.advance();
        CHECK(more == (r + 1 < values.count()));
      }
      CHECK(values.done());
      // Seeking mid-range lands on the same palindrome as unranking.
      values.seek(values.count() / 2);
      CHECK(values.value() == palindrome_at(values.count() / 2, len, Base(g)));
    }
  }
}

TEST_CASE("exact walker refuses values beyond 64 bits") {
  CHECK_THROWS_AS(ValueWalker(21, Base(10)), OverflowError);
  CHECK_NOTHROW(ValueWalker(19, Base(10)));
  CHECK_NOTHROW(ResidueWalker(41, Base(10), 97));
}

TEST_CASE("even-length palindromes are divisible by g + 1") {
  for (unsigned g : {2u, 3u, 10u}) {
    for (unsigned len = 2; palindrome_count(len, Base(g)) <= 20'000; len += 2) {
      ValueWalker w(len, Base(g));
      std::uint64_t bad = 0;
      do {
        bad += w.value() % (g + 1) != 0;
      } while (w.advance());
      CHECK(bad == 0);
    }
  }
}

TEST_CASE("natural parsing and printing") {
  CHECK(to_string(Natural{0}) == "0");
  const Natural big = (Natural{1} << 100) + 7;
  CHECK(parse_natural(to_string(big)) == big);
  CHECK_THROWS_AS(parse_natural("12a"), DomainError);
  CHECK_THROWS_AS(parse_natural("999999999999999999999999999999999999999999"), OverflowError);
}
