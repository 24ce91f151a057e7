#include "palinprime/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "palinprime/errors.hpp"
#include "palinprime/parallel.hpp"
#include "palinprime/walker.hpp"

namespace palinprime {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

nlohmann::ordered_json base_list(std::span<const unsigned> bases) {
  auto out = nlohmann::ordered_json::array();
  for (unsigned g : bases) out.push_back(g);
  return out;
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ a);
  h = splitmix64(h ^ b);
  return splitmix64(h ^ c);
}

std::vector<Angle> sample_angles(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<Angle> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(Angle::fraction(static_cast<std::int64_t>(rng() >> 11), Angle::kRealDenominator));
  return out;
}

std::vector<unsigned> lengths_up_to_count(Base g, std::uint64_t max_count, bool odd_only, bool even_only) {
  std::vector<unsigned> out;
  for (unsigned len = 1;; ++len) {
    if (palindrome_count(len, g) > Natural{max_count}) break;
    if (odd_only && len % 2 == 0) continue;
    if (even_only && len % 2 == 1) continue;
    out.push_back(len);
  }
  return out;
}

AuditOutcome audit_count_formula(std::span<const unsigned> bases, std::uint64_t max_count, const Limits& limits) {
  AuditOutcome out;
  out.report.config = {{"bases", base_list(bases)}, {"max_count", max_count}};
  out.report.columns = {"base", "length", "formula", "enumerated", "ok"};
  std::uint64_t checked = 0;
  for (unsigned gv : bases) {
    const Base g(gv);
    for (unsigned len : lengths_up_to_count(g, max_count)) {
      const Natural formula = count_formula(len, g);
      const std::uint64_t enumerated = count_enumerated(len, g, limits);
      const bool ok = formula == Natural{enumerated};
      out.passed = out.passed && ok;
      ++checked;
      out.report.add_row({Cell::integer(gv), Cell::integer(len), Cell::integer(formula), Cell::integer(enumerated),
                          Cell::boolean(ok)});
    }
  }
  out.report.summary = {{"lengths_checked", checked}, {"passed", out.passed}};
  return out;
}

AuditOutcome audit_even_divisibility(std::span<const unsigned> bases, std::uint64_t max_count,
                                     const Limits& limits) {
  AuditOutcome out;
  out.report.config = {{"bases", base_list(bases)}, {"max_count", max_count}};
  out.report.columns = {"base", "length", "count", "violations"};
  std::uint64_t total_violations = 0;
  for (unsigned gv : bases) {
    const Base g(gv);
    for (unsigned len : lengths_up_to_count(g, max_count, false, true)) {
      const auto values = palindromes_of_length(len, g, limits);
      const auto violations =
          std::count_if(values.begin(), values.end(), [gv](std::uint64_t v) { return v % (gv + 1) != 0; });
      total_violations += static_cast<std::uint64_t>(violations);
      out.report.add_row({Cell::integer(gv), Cell::integer(len), Cell::integer(std::uint64_t{values.size()}),
                          Cell::integer(static_cast<std::int64_t>(violations))});
    }
  }
  out.passed = total_violations == 0;
  out.report.summary = {{"violations", total_violations}, {"passed", out.passed}};
  return out;
}

AuditOutcome audit_ap_main_term(std::span<const unsigned> bases, std::uint64_t max_count, const Limits& limits) {
  AuditOutcome out;
  out.report.config = {{"bases", base_list(bases)}, {"max_count", max_count}};
  out.report.columns = {"base", "length", "d", "actual", "main_term", "main_term_real", "abs_error", "bound", "ok"};
  auto per_base = nlohmann::ordered_json::array();
  for (unsigned gv : bases) {
    const Base g(gv);
    const double bound = static_cast<double>(gv) * gv;
    Rational worst(0);
    for (unsigned len : lengths_up_to_count(g, max_count, true)) {
      for (std::uint64_t d : divisors(g.cube_minus())) {
        const std::uint64_t actual = count_ap(len, g, ApQuery::make(0, d, g), limits);
        const Rational main = ap_main_term(len, g, d);
        Rational err = Rational(actual) - main;
        if (err < 0) err = -err;
        worst = std::max(worst, err);
        const bool ok = to_double(err) <= bound;
        out.passed = out.passed && ok;
        out.report.add_row({Cell::integer(gv), Cell::integer(len), Cell::integer(d), Cell::integer(actual),
                            Cell::text(to_string(main)), Cell::real(to_double(main)), Cell::real(to_double(err)),
                            Cell::real(bound), Cell::boolean(ok)});
      }
    }
    per_base.push_back({{"base", gv}, {"max_abs_error", to_string(worst)},
                        {"max_abs_error_real", nlohmann::ordered_json::parse(format_real(to_double(worst)))},
                        {"bound", gv * gv}});
  }
  out.report.summary = {{"per_base", per_base}, {"passed", out.passed}};
  return out;
}

AuditOutcome audit_brun_titchmarsh(const BtAuditConfig& config, const Limits& limits) {
  AuditOutcome out;
  out.report.config = {{"bases", base_list(config.bases)},
                       {"max_length", config.max_length},
                       {"max_modulus", config.max_modulus},
                       {"samples_per_modulus", config.samples_per_modulus},
                       {"seed", config.seed}};
  out.report.columns = {"base", "length", "kind", "checks", "violations", "max_count", "max_ratio"};

  struct Partial {
    std::uint64_t checks = 0;
    std::uint64_t violations = 0;
    std::uint64_t max_count = 0;
    double max_ratio = 0;
  };

  std::uint64_t total_violations = 0;
  for (unsigned gv : config.bases) {
    const Base g(gv);
    for (unsigned len = 1; len <= config.max_length; ++len) {
      const std::uint64_t count = static_cast<std::uint64_t>(palindrome_count(len, g));
      check_enumeration_budget(count, limits);
      const Natural span_limit = checked_pow(gv, len);  // g^length
      // Moduli are split into fixed blocks so the merge order never changes.
      const auto blocks = shard_ranks(config.max_modulus, 64);
      const auto parts = parallel_map<Partial>(blocks.size(), limits.threads, [&](std::size_t b) {
        Partial p;
        std::vector<std::uint64_t> hist, residues;
        for (std::uint64_t q = blocks[b].begin + 1; q <= blocks[b].end; ++q) {
          std::mt19937_64 rng(mix_seed(config.seed, gv, len, q));
          std::vector<std::uint64_t> sample{0};
          for (unsigned s = 0; s < config.samples_per_modulus; ++s) sample.push_back(rng() % q);

          ResidueWalker walker(len, g, q);
          const bool dense = count >= q;
          if (dense) {
            hist.assign(q, 0);
            walk_range(walker, 0, count, [&](std::uint64_t r) { ++hist[r]; });
          } else {
            residues.clear();
            walk_range(walker, 0, count, [&](std::uint64_t r) { residues.push_back(r); });
            std::sort(residues.begin(), residues.end());
          }
          for (std::uint64_t a : sample) {
            const std::uint64_t c =
                dense ? hist[a]
                      : static_cast<std::uint64_t>(std::upper_bound(residues.begin(), residues.end(), a) -
                                                   std::lower_bound(residues.begin(), residues.end(), a));
            const double bound = bt_majorant(len, g, q, a == 0);
            bool ok = static_cast<double>(c) <= bound;
            // Beyond g^length a class holds at most one integer, and no multiple of q.
            if (Natural{q} >= span_limit) ok = ok && c <= (a == 0 ? 0u : 1u);
            ++p.checks;
            if (!ok) ++p.violations;
            p.max_count = std::max(p.max_count, c);
            p.max_ratio = std::max(p.max_ratio, static_cast<double>(c) / bound);
          }
        }
        return p;
      });
      Partial merged;
      for (const auto& p : parts) {
        merged.checks += p.checks;
        merged.violations += p.violations;
        merged.max_count = std::max(merged.max_count, p.max_count);
        merged.max_ratio = std::max(merged.max_ratio, p.max_ratio);
      }
      total_violations += merged.violations;
      out.report.add_row({Cell::integer(gv), Cell::integer(len), Cell::text("sampled"), Cell::integer(merged.checks),
                          Cell::integer(merged.violations), Cell::integer(merged.max_count),
                          Cell::real(merged.max_ratio)});
    }

    // Regression: a = g^(L-1) + 1 lies in Pi(L), so for q > 4 g^2 g^L the class
    // a mod q keeps one element while g^(L/2) q^(-1/2) < 1/2.
    for (unsigned len = 2; len <= config.max_length; ++len) {
      const Natural a = checked_pow(gv, len - 1) + 1;
      const Natural q = 4 * Natural{gv} * gv * checked_pow(gv, len) + 1;
      if (q > (Natural{1} << 62)) break;
      const auto query = ApQuery::make(static_cast<std::int64_t>(a), static_cast<std::uint64_t>(q), g);
      const std::uint64_t c = count_ap(len, g, query, limits);
      const double scale = std::pow(static_cast<double>(gv), len / 2.0) / std::sqrt(static_cast<double>(q));
      const double without_one = bt_majorant(len, g, static_cast<std::uint64_t>(q), true);
      const bool ok = c >= 1 && scale < 0.5 && static_cast<double>(c) > without_one &&
                      static_cast<double>(c) <= bt_majorant(len, g, static_cast<std::uint64_t>(q), false);
      if (!ok) ++total_violations;
      out.report.add_row({Cell::integer(gv), Cell::integer(len), Cell::text("plus_one_regression"), Cell::integer(1),
                          Cell::integer(ok ? 0 : 1), Cell::integer(c), Cell::real(scale)});
    }
  }
  out.passed = total_violations == 0;
  out.report.summary = {{"violations", total_violations}, {"passed", out.passed}};
  return out;
}

AuditOutcome audit_exponential_sum(const ExpSumAuditConfig& config, const Limits& limits) {
  AuditOutcome out;
  out.report.config = {{"bases", base_list(config.bases)},
                       {"max_half_length", config.max_half_length},
                       {"samples", config.samples},
                       {"seed", config.seed},
                       {"cross_check_terms", config.cross_check_terms}};
  out.report.columns = {"base",          "N",         "samples",        "violations",   "max_ratio",
                        "cross_checked", "max_cross_rel_diff", "s_zero_rel_error", "ok"};
  for (unsigned gv : config.bases) {
    const Base g(gv);
    for (unsigned n = 1; n <= config.max_half_length; ++n) {
      const unsigned length = 2 * n + 1;
      const double count = static_cast<double>(palindrome_count(length, g));
      const auto angles = sample_angles(mix_seed(config.seed, gv, n), config.samples);
      const auto blocks = shard_ranks(angles.size(), 64);
      struct Partial {
        std::uint64_t violations = 0;
        double max_ratio = 0;
      };
      const auto parts = parallel_map<Partial>(blocks.size(), limits.threads, [&](std::size_t b) {
        Partial p;
        for (std::uint64_t i = blocks[b].begin; i < blocks[b].end; ++i) {
          const auto check = lemma33_audit(n, angles[i], g, SumMethod::split, limits);
          if (!check.ok) ++p.violations;
          p.max_ratio = std::max(p.max_ratio, check.lhs / check.rhs);
        }
        return p;
      });
      Partial merged;
      for (const auto& p : parts) {
        merged.violations += p.violations;
        merged.max_ratio = std::max(merged.max_ratio, p.max_ratio);
      }

      // The split evaluation is checked against one term per palindrome.
      const auto cross = static_cast<std::size_t>(
          std::clamp<double>(static_cast<double>(config.cross_check_terms) / count, 1.0,
                             static_cast<double>(angles.size())));
      double max_cross = 0;
      for (std::size_t i = 0; i < cross; ++i) {
        const ComplexValue direct = s_direct(length, angles[i], g, limits);
        const ComplexValue split = s_split(length, angles[i], g, limits);
        max_cross = std::max(max_cross, std::abs(direct - split) / count);
      }
      const ComplexValue s0 = s_direct(length, Angle::fraction(0, 1), g, limits);
      const double s0_error = std::abs(s0 - ComplexValue(count, 0)) / count;

      const bool ok = merged.violations == 0 && max_cross <= 1e-9 && s0_error <= 1e-9;
      out.passed = out.passed && ok;
      out.report.add_row({Cell::integer(gv), Cell::integer(n), Cell::integer(std::uint64_t{angles.size()}),
                          Cell::integer(merged.violations), Cell::real(merged.max_ratio),
                          Cell::integer(std::uint64_t{cross}), Cell::real(max_cross), Cell::real(s0_error),
                          Cell::boolean(ok)});
    }
  }
  out.report.summary = {{"passed", out.passed}};
  return out;
}

std::vector<SieveInstance> default_sieve_instances() {
  std::vector<SieveInstance> out;
  for (std::uint64_t n = 1; n <= 5; ++n) out.push_back({2, false, n});
  for (std::uint64_t n = 1; n <= 3; ++n) out.push_back({3, false, n});
  out.push_back({10, false, 1});
  for (unsigned g : {2u, 3u, 10u})
    for (std::uint64_t x : {1ull, 10ull, 100ull, 1000ull, 10000ull}) out.push_back({g, true, x});
  return out;
}

AuditOutcome audit_sieve_oracle(std::span<const SieveInstance> instances, const Limits& limits) {
  AuditOutcome out;
  out.report.columns = {"base", "set", "scale", "size", "brute", "sieve_total", "thresholds", "ok"};
  auto list = nlohmann::ordered_json::array();
  for (const auto& inst : instances) list.push_back({{"base", inst.base}, {"pstar", inst.pstar}, {"scale", inst.scale}});
  out.report.config = {{"instances", list}};
  for (const auto& inst : instances) {
    const Base g(inst.base);
    const auto values = inst.pstar ? pstar_list(inst.scale, g, limits)
                                   : palindromes_of_length(2 * static_cast<unsigned>(inst.scale) + 1, g, limits);
    const Natural brute = coprime_pairs_brute(values, limits);
    const Natural transposed = coprime_pairs_brute(values, limits, PairOrder::column_major);
    const DivisorProfile profile = divisor_profile(values, limits);
    const std::uint64_t natural_split =
        inst.pstar ? default_threshold(inst.scale) : default_threshold(static_cast<unsigned>(inst.scale), g);
    bool ok = brute == transposed;
    Wide total = 0;
    const std::vector<std::uint64_t> thresholds{0, 1, 2, natural_split, 10, 1000,
                                                std::numeric_limits<std::uint64_t>::max()};
    for (std::uint64_t u : thresholds) {
      const SieveResult r = sieve_from_profile(profile, u);
      ok = ok && r.n1 + r.n2 == r.total && r.total >= 0 && static_cast<Natural>(r.total) == brute &&
           static_cast<Natural>(r.total) <= r.pair_universe;
      total = r.total;
    }
    out.passed = out.passed && ok;
    out.report.add_row({Cell::integer(inst.base), Cell::text(inst.pstar ? "pstar" : "fixed_length"),
                        Cell::integer(inst.scale), Cell::integer(std::uint64_t{values.size()}), Cell::integer(brute),
                        Cell::integer(total), Cell::integer(std::uint64_t{thresholds.size()}), Cell::boolean(ok)});
  }
  out.report.summary = {{"passed", out.passed}};
  return out;
}

AuditOutcome audit_convergence(Base g, std::span<const std::uint64_t> scales, ConvergenceMode mode,
                               const Limits& limits) {
  AuditOutcome out;
  auto scale_list = nlohmann::ordered_json::array();
  for (auto s : scales) scale_list.push_back(s);
  out.report.config = {{"base", g.value()},
                       {"mode", mode == ConvergenceMode::fixed_length ? "fixed-length" : "pstar"},
                       {"scales", scale_list}};
  out.report.columns = {"scale", "count", "universe", "ratio", "predicted", "relative_deviation"};
  const auto rows = convergence_report(g, scales, mode, limits);
  for (const auto& r : rows)
    out.report.add_row({Cell::integer(r.scale), Cell::integer(r.count), Cell::integer(r.universe),
                        Cell::real(r.ratio), Cell::real(r.predicted), Cell::real(r.relative_deviation)});
  out.passed = rows.size() >= 2 && rows.back().relative_deviation < rows.front().relative_deviation;
  out.report.summary = {{"first_deviation", rows.empty() ? 0.0 : rows.front().relative_deviation},
                        {"last_deviation", rows.empty() ? 0.0 : rows.back().relative_deviation},
                        {"decreasing", out.passed}};
  return out;
}

AuditOutcome audit_pstar_growth(Base g, unsigned min_exponent, unsigned max_exponent, double spread,
                                const Limits& limits) {
  AuditOutcome out;
  out.report.config = {{"base", g.value()},
                       {"min_exponent", min_exponent},
                       {"max_exponent", max_exponent},
                       {"spread", spread}};
  out.report.columns = {"k", "x", "count", "ratio"};
  double lo = std::numeric_limits<double>::infinity(), hi = 0;
  for (unsigned k = min_exponent; k <= max_exponent; ++k) {
    const Natural x = checked_pow(10, k);
    if (x > Natural{UINT64_MAX}) throw OverflowError("x exceeds 64 bits");
    const std::uint64_t count = pstar_count(static_cast<std::uint64_t>(x), g, limits);
    const double ratio = static_cast<double>(count) / std::sqrt(static_cast<double>(x));
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    out.report.add_row({Cell::integer(k), Cell::integer(x), Cell::integer(count), Cell::real(ratio)});
  }
  out.passed = lo > 0 && hi / lo <= spread;
  out.report.summary = {{"min_ratio", nlohmann::ordered_json::parse(format_real(lo))},
                        {"max_ratio", nlohmann::ordered_json::parse(format_real(hi))},
                        {"passed", out.passed}};
  return out;
}

}  // namespace palinprime
