#include "palinprime/coprime.hpp"

#include <cmath>
#include <numeric>

#include "palinprime/errors.hpp"
#include "palinprime/parallel.hpp"

namespace palinprime {

namespace {

std::uint64_t integer_fifth_root(Natural v) {
  auto r = static_cast<std::uint64_t>(std::pow(static_cast<long double>(v), 0.2L));
  auto fifth = [](std::uint64_t t) {
    Natural p = 1;
    for (int i = 0; i < 5; ++i)
      if (__builtin_mul_overflow(p, Natural{t}, &p)) return ~Natural{0};
    return p;
  };
  while (r > 0 && fifth(r) > v) --r;
  while (fifth(r + 1) <= v) ++r;
  return r;
}

}  // namespace

Natural coprime_pairs_brute(std::span<const std::uint64_t> values, const Limits& limits, PairOrder order) {
  const Natural pairs = Natural{values.size()} * values.size();
  if (pairs > Natural{limits.pairs})
    throw BudgetError("brute-force pair count " + to_string(pairs) + " exceeds pair budget " +
                      std::to_string(limits.pairs));
  const std::size_t n = values.size();
  const auto blocks = shard_ranks(n);
  const auto partial = parallel_map<std::uint64_t>(blocks.size(), limits.threads, [&](std::size_t b) {
    std::uint64_t hits = 0;
    for (std::uint64_t i = blocks[b].begin; i < blocks[b].end; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto [m, k] = order == PairOrder::row_major ? std::pair{values[i], values[j]}
                                                          : std::pair{values[j], values[i]};
        hits += std::gcd(m, k) == 1 ? 1 : 0;
      }
    }
    return hits;
  });
  Natural total = 0;
  for (auto h : partial) total += h;
  return total;
}

std::uint64_t default_threshold(unsigned half_length, Base g) {
  return integer_fifth_root(checked_pow(g.value(), half_length));
}

std::uint64_t default_threshold(std::uint64_t x) { return integer_fifth_root(x); }

SieveResult sieve_from_profile(const DivisorProfile& profile, std::uint64_t threshold) {
  SieveResult out;
  out.threshold = threshold;
  out.pair_universe = Natural{profile.universe} * profile.universe;
  for (const auto& [d, entry] : profile.counts) {
    const std::uint64_t c = entry.count;
    const int mu = entry.mobius;
    if (mu == 0) continue;
    Wide term = 0;
    if (__builtin_mul_overflow(static_cast<Wide>(c), static_cast<Wide>(c), &term))
      throw OverflowError("sieve term c_d^2 overflows 128 bits");
    if (mu < 0) term = -term;
    Wide& bucket = d <= threshold ? out.n1 : out.n2;
    if (__builtin_add_overflow(bucket, term, &bucket)) throw OverflowError("sieve accumulator overflow");
  }
  if (__builtin_add_overflow(out.n1, out.n2, &out.total)) throw OverflowError("sieve accumulator overflow");
  return out;
}

SieveResult coprime_pairs_sieve(unsigned length, Base g, std::uint64_t threshold, const Limits& limits) {
  return sieve_from_profile(divisor_profile(length, g, limits), threshold);
}

SieveResult pstar_coprime_pairs(std::uint64_t x, Base g, std::uint64_t threshold, const Limits& limits) {
  const auto values = pstar_list(x, g, limits);
  return sieve_from_profile(divisor_profile(values, limits), threshold);
}

std::vector<ConvergenceRow> convergence_report(Base g, std::span<const std::uint64_t> scales, ConvergenceMode mode,
                                               const Limits& limits) {
  const double predicted = mode == ConvergenceMode::fixed_length ? thm1_constant(g).value : thm2_constant(g).value;
  std::vector<ConvergenceRow> rows;
  rows.reserve(scales.size());
  for (std::uint64_t scale : scales) {
    SieveResult r;
    if (mode == ConvergenceMode::fixed_length) {
      if (scale == 0 || scale > 1000) throw DomainError("half-length N must lie in [1, 1000]");
      const auto n = static_cast<unsigned>(scale);
      r = coprime_pairs_sieve(2 * n + 1, g, default_threshold(n, g), limits);
    } else {
      if (scale == 0) throw DomainError("x must be positive");
      r = pstar_coprime_pairs(scale, g, default_threshold(scale), limits);
    }
    ConvergenceRow row;
    row.scale = scale;
    row.count = r.total;
    row.universe = r.pair_universe;
    row.ratio = r.pair_universe == 0 ? 0.0 : static_cast<double>(r.total) / static_cast<double>(r.pair_universe);
    row.predicted = predicted;
    row.relative_deviation = std::abs(row.ratio - predicted) / predicted;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace palinprime
