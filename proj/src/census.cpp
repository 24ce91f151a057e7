#include "palinprime/census.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "palinprime/errors.hpp"
#include "palinprime/parallel.hpp"
#include "palinprime/walker.hpp"

namespace palinprime {

namespace {

std::uint64_t normalize(std::int64_t a, std::uint64_t q) {
  const auto m = static_cast<std::int64_t>(q);
  const std::int64_t r = a % m;
  return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

std::uint64_t checked_count(unsigned length, Base g, const Limits& limits) {
  const Natural count = palindrome_count(length, g);
  if (count > Natural{UINT64_MAX}) throw BudgetError("palindrome count exceeds 64 bits");
  check_enumeration_budget(static_cast<std::uint64_t>(count), limits);
  return static_cast<std::uint64_t>(count);
}

/// Sums pred over residues mod `modulus` of Pi(length), sharded.
template <class Pred>
std::uint64_t count_residues(unsigned length, Base g, std::uint64_t modulus, const Limits& limits, Pred pred) {
  const std::uint64_t count = checked_count(length, g, limits);
  const auto shards = shard_ranks(count);
  const auto partial = parallel_map<std::uint64_t>(shards.size(), limits.threads, [&](std::size_t s) {
    ResidueWalker walker(length, g, modulus);
    std::uint64_t hits = 0;
    walk_range(walker, shards[s].begin, shards[s].end, [&](std::uint64_t r) { hits += pred(r) ? 1 : 0; });
    return hits;
  });
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

}  // namespace

ApQuery ApQuery::make(std::int64_t a, std::uint64_t q, Base g, std::optional<std::int64_t> k) {
  if (q == 0) throw DomainError("modulus q must be positive");
  if (q > static_cast<std::uint64_t>(INT64_MAX)) throw DomainError("modulus q too large");
  ApQuery out;
  out.q = q;
  out.a = normalize(a, q);
  if (k) out.k = normalize(*k, g.cube_minus());
  return out;
}

Natural count_formula(unsigned length, Base g) { return palindrome_count(length, g); }

std::uint64_t count_enumerated(unsigned length, Base g, const Limits& limits) {
  const std::uint64_t count = checked_count(length, g, limits);
  const auto shards = shard_ranks(count);
  const auto partial = parallel_map<std::uint64_t>(shards.size(), limits.threads, [&](std::size_t s) {
    // Modulus 1 walks the digit strings without materializing (possibly huge) values.
    ResidueWalker walker(length, g, 1);
    std::uint64_t seen = 0;
    walk_range(walker, shards[s].begin, shards[s].end, [&](std::uint64_t) { ++seen; });
    return seen;
  });
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

std::uint64_t count_ap(unsigned length, Base g, const ApQuery& query, const Limits& limits) {
  if (query.q == 0) throw DomainError("modulus q must be positive");
  if (!query.k) {
    return count_residues(length, g, query.q, limits, [a = query.a](std::uint64_t r) { return r == a; });
  }
  const std::uint64_t m = g.cube_minus();
  const Natural l = Natural{query.q} / gcd(query.q, m) * m;
  if (l > (Natural{1} << 63)) throw OverflowError("lcm(q, g^3 - g) exceeds 2^63");
  return count_residues(length, g, static_cast<std::uint64_t>(l), limits,
                        [a = query.a, q = query.q, k = *query.k, m](std::uint64_t r) {
                          return r % q == a && r % m == k;
                        });
}

std::vector<std::uint64_t> residue_histogram(unsigned length, Base g, std::uint64_t q, const Limits& limits) {
  if (q == 0) throw DomainError("modulus q must be positive");
  const std::uint64_t count = checked_count(length, g, limits);
  if (q > limits.enumeration) throw BudgetError("histogram modulus exceeds enumeration budget");
  // Per-shard histograms cost O(q) each, so large moduli get fewer shards.
  const auto shards = shard_ranks(count, std::clamp<std::uint64_t>(count / q, 1, 16));
  const auto partial = parallel_map<std::vector<std::uint64_t>>(shards.size(), limits.threads, [&](std::size_t s) {
    std::vector<std::uint64_t> hist(q, 0);
    ResidueWalker walker(length, g, q);
    walk_range(walker, shards[s].begin, shards[s].end, [&](std::uint64_t r) { ++hist[r]; });
    return hist;
  });
  std::vector<std::uint64_t> total(q, 0);
  for (const auto& h : partial)
    for (std::uint64_t r = 0; r < q; ++r) total[r] += h[r];
  return total;
}

Rational ap_main_term(unsigned length, Base g, std::uint64_t d) {
  if (length % 2 == 0) throw DomainError("ap_main_term requires an odd length");
  const std::uint64_t m = g.cube_minus();
  if (d == 0 || m % d != 0)
    throw DomainError(std::to_string(d) + " does not divide g^3 - g = " + std::to_string(m));
  const std::uint64_t gv = g.value();
  const std::uint64_t two_part = std::gcd(std::gcd(d, gv * gv - 1), std::uint64_t{2});
  const std::uint64_t dg = std::gcd(d, gv);
  const Rational count(boost::multiprecision::cpp_int(to_string(count_formula(length, g))));
  return (1 + Rational(two_part, gv - 1)) * (1 - Rational(dg, gv)) * count / d;
}

double bt_majorant(unsigned length, Base g, std::uint64_t q, bool a_is_zero) {
  if (q == 0) throw DomainError("modulus q must be positive");
  const double gv = g.value();
  const double main = 2.0 * gv * std::pow(gv, length / 2.0) / std::sqrt(static_cast<double>(q));
  return a_is_zero ? main : main + 1.0;
}

std::vector<std::uint64_t> palindromes_of_length(unsigned length, Base g, const Limits& limits) {
  const std::uint64_t count = checked_count(length, g, limits);
  const auto shards = shard_ranks(count);
  const auto parts = parallel_map<std::vector<std::uint64_t>>(shards.size(), limits.threads, [&](std::size_t s) {
    ValueWalker walker(length, g);
    std::vector<std::uint64_t> out;
    out.reserve(shards[s].end - shards[s].begin);
    walk_range(walker, shards[s].begin, shards[s].end, [&](std::uint64_t v) { out.push_back(v); });
    return out;
  });
  std::vector<std::uint64_t> all;
  all.reserve(count);
  for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return all;
}

std::vector<std::uint64_t> pstar_list(std::uint64_t x, Base g, const Limits& limits) {
  if (x == 0) throw DomainError("pstar_list requires x >= 1");
  const unsigned top = digit_length(x, g);
  Natural total = 0;
  for (unsigned len = 1; len <= top; ++len) total += palindrome_count(len, g);
  if (total > Natural{limits.enumeration})
    throw BudgetError("enumeration of " + to_string(total) + " palindromes exceeds budget " +
                      std::to_string(limits.enumeration));
  const std::uint64_t m = g.cube_minus();
  std::vector<std::uint64_t> out;
  for (unsigned len = 1; len <= top; ++len) {
    std::uint64_t count = static_cast<std::uint64_t>(palindrome_count(len, g));
    if (len == top) {
      // Number of palindromes of the top length that are <= x.
      std::uint64_t lo = 0, hi = count;
      while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (palindrome_at(mid, len, g) <= x)
          lo = mid + 1;
        else
          hi = mid;
      }
      count = lo;
    }
    const auto shards = shard_ranks(count);
    const auto parts = parallel_map<std::vector<std::uint64_t>>(shards.size(), limits.threads, [&](std::size_t s) {
      ValueWalker walker(len, g);
      std::vector<std::uint64_t> kept;
      walk_range(walker, shards[s].begin, shards[s].end, [&](std::uint64_t v) {
        if (std::gcd(v, m) == 1) kept.push_back(v);
      });
      return kept;
    });
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

std::uint64_t pstar_count(std::uint64_t x, Base g, const Limits& limits) { return pstar_list(x, g, limits).size(); }

DivisorProfile divisor_profile(std::span<const std::uint64_t> values, const Limits& limits) {
  using Partial = std::unordered_map<std::uint64_t, DivisorProfile::Entry>;
  const auto shards = shard_ranks(values.size(), 32);
  const auto parts = parallel_map<Partial>(shards.size(), limits.threads, [&](std::size_t s) {
    Partial counts;
    for (std::uint64_t i = shards[s].begin; i < shards[s].end; ++i) {
      if (values[i] == 0) throw DomainError("divisor_profile: values must be positive");
      for (const auto& [d, mu] : signed_squarefree_divisors(factorize(values[i]))) {
        auto& e = counts[d];
        ++e.count;
        e.mobius = mu;
      }
    }
    return counts;
  });
  DivisorProfile profile;
  profile.universe = values.size();
  for (const auto& p : parts)
    for (const auto& [d, e] : p) {
      auto& slot = profile.counts[d];
      slot.count += e.count;
      slot.mobius = e.mobius;
    }
  return profile;
}

DivisorProfile divisor_profile(unsigned length, Base g, const Limits& limits) {
  const auto values = palindromes_of_length(length, g, limits);
  return divisor_profile(values, limits);
}

}  // namespace palinprime
