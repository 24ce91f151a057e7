#include "palinprime/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

#include "palinprime/coprime.hpp"
#include "palinprime/errors.hpp"
#include "palinprime/experiments.hpp"
#include "palinprime/expsum.hpp"
#include "palinprime/report.hpp"

namespace palinprime::cli {

namespace {

struct RunConfig {
  unsigned base = 10;
  std::vector<unsigned> bases;
  unsigned length = 0;
  unsigned half_length = 0;
  std::uint64_t x = 0;
  std::uint64_t modulus = 1;
  std::int64_t residue = 0;
  std::optional<std::int64_t> refined_class;
  std::optional<std::uint64_t> threshold;
  std::optional<double> u_exponent;
  std::vector<std::uint64_t> scales;
  std::string mode = "fixed-length";
  std::string format = "json";
  std::string out_path;
  std::string svg_path;
  unsigned threads = 0;
  std::uint64_t seed = 0;
  std::uint64_t max_count = 1'000'000;
  unsigned max_length = 9;
  std::uint64_t max_modulus = 10'000;
  unsigned samples = 64;
  unsigned max_half_length = 6;
  std::optional<double> alpha;
  std::uint64_t farey_q = 10;
  bool list = false;
  bool pairs = false;
  bool brute = false;
};

Limits limits_for(const RunConfig& cfg) {
  Limits l = Limits::defaults();
  if (cfg.threads != 0) l.threads = cfg.threads;
  return l;
}

std::uint64_t threshold_for(const RunConfig& cfg, Base g, unsigned n) {
  if (cfg.threshold) return *cfg.threshold;
  if (cfg.u_exponent) return static_cast<std::uint64_t>(std::floor(std::pow(g.value(), *cfg.u_exponent * n)));
  return default_threshold(n, g);
}

void emit(const RunConfig& cfg, const Report& report, std::ostream& out) {
  const std::string text = cfg.format == "csv" ? to_csv(report) : to_json(report);
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw DomainError("cannot open output file " + cfg.out_path);
  file << text;
}

Report cmd_enumerate(const RunConfig& cfg) {
  const Base g(cfg.base);
  Report r;
  r.config = {{"base", cfg.base}, {"length", cfg.length}};
  r.columns = {"rank", "value"};
  const auto values = palindromes_of_length(cfg.length, g, limits_for(cfg));
  for (std::size_t i = 0; i < values.size(); ++i) r.add_row({Cell::integer(std::uint64_t{i}), Cell::integer(values[i])});
  r.summary = {{"count", values.size()}};
  return r;
}

Report cmd_census(const RunConfig& cfg) {
  const Base g(cfg.base);
  Report r;
  r.config = {{"base", cfg.base}, {"length", cfg.length}};
  r.columns = {"length", "formula", "enumerated", "equal"};
  const Natural formula = count_formula(cfg.length, g);
  const std::uint64_t enumerated = count_enumerated(cfg.length, g, limits_for(cfg));
  r.add_row({Cell::integer(cfg.length), Cell::integer(formula), Cell::integer(enumerated),
             Cell::boolean(formula == Natural{enumerated})});
  return r;
}

Report cmd_ap(const RunConfig& cfg) {
  const Base g(cfg.base);
  const ApQuery query = ApQuery::make(cfg.residue, cfg.modulus, g, cfg.refined_class);
  Report r;
  r.config = {{"base", cfg.base}, {"length", cfg.length}, {"residue", cfg.residue}, {"modulus", cfg.modulus}};
  if (cfg.refined_class) r.config["class"] = *cfg.refined_class;
  r.columns = {"length", "a", "q", "k", "count", "bt_majorant"};
  const std::uint64_t count = count_ap(cfg.length, g, query, limits_for(cfg));
  r.add_row({Cell::integer(cfg.length), Cell::integer(query.a), Cell::integer(query.q),
             query.k ? Cell::integer(*query.k) : Cell::text(""), Cell::integer(count),
             Cell::real(bt_majorant(cfg.length, g, query.q, query.a == 0))});
  if (!query.k && query.a == 0 && cfg.length % 2 == 1 && g.cube_minus() % query.q == 0) {
    const Rational main = ap_main_term(cfg.length, g, query.q);
    r.summary = {{"main_term", to_string(main)},
                 {"main_term_real", nlohmann::ordered_json::parse(format_real(to_double(main)))}};
  }
  return r;
}

std::vector<unsigned> bases_or(const RunConfig& cfg, std::vector<unsigned> fallback) {
  return cfg.bases.empty() ? fallback : cfg.bases;
}

Report cmd_lemma34(const RunConfig& cfg, bool& passed) {
  const auto bases = bases_or(cfg, {2, 3, 5, 6, 10});
  auto outcome = audit_ap_main_term(bases, cfg.max_count, limits_for(cfg));
  passed = outcome.passed;
  return outcome.report;
}

Report cmd_bt(const RunConfig& cfg, bool& passed) {
  BtAuditConfig bt;
  bt.bases = bases_or(cfg, {2, 10});
  bt.max_length = cfg.max_length;
  bt.max_modulus = cfg.max_modulus;
  bt.samples_per_modulus = cfg.samples;
  bt.seed = cfg.seed;
  auto outcome = audit_brun_titchmarsh(bt, limits_for(cfg));
  passed = outcome.passed;
  return outcome.report;
}

Report cmd_lemma33(const RunConfig& cfg, bool& passed) {
  if (cfg.alpha) {
    const Base g(cfg.base);
    const auto check = lemma33_audit(cfg.half_length, Angle::real(*cfg.alpha), g, SumMethod::direct, limits_for(cfg));
    Report r;
    r.config = {{"base", cfg.base}, {"half_length", cfg.half_length}, {"alpha", *cfg.alpha}};
    r.columns = {"N", "alpha", "lhs", "rhs", "ok"};
    r.add_row({Cell::integer(cfg.half_length), Cell::real(*cfg.alpha), Cell::real(check.lhs), Cell::real(check.rhs),
               Cell::boolean(check.ok)});
    passed = check.ok;
    return r;
  }
  ExpSumAuditConfig ex;
  ex.bases = bases_or(cfg, {2, 3, 10});
  ex.max_half_length = cfg.max_half_length;
  ex.samples = cfg.samples;
  ex.seed = cfg.seed;
  auto outcome = audit_exponential_sum(ex, limits_for(cfg));
  passed = outcome.passed;
  return outcome.report;
}

Report cmd_coprime(const RunConfig& cfg) {
  const Base g(cfg.base);
  const Limits limits = limits_for(cfg);
  const unsigned n = cfg.half_length;
  if (n == 0) throw DomainError("--half-length must be at least 1");
  const unsigned length = 2 * n + 1;
  const auto values = palindromes_of_length(length, g, limits);
  if (cfg.brute && Natural{values.size()} * values.size() > Natural{limits.pairs})
    throw BudgetError("--brute needs " + std::to_string(values.size()) + "^2 pairs, over the pair budget");
  const SieveResult s = sieve_from_profile(divisor_profile(values, limits), threshold_for(cfg, g, n));
  Report r;
  r.config = {{"base", cfg.base}, {"half_length", n}, {"length", length}};
  r.columns = {"N", "size", "total", "n1", "n2", "threshold", "universe", "ratio", "predicted"};
  r.add_row({Cell::integer(n), Cell::integer(std::uint64_t{values.size()}), Cell::integer(s.total),
             Cell::integer(s.n1), Cell::integer(s.n2), Cell::integer(s.threshold), Cell::integer(s.pair_universe),
             Cell::real(static_cast<double>(s.total) / static_cast<double>(s.pair_universe)),
             Cell::real(thm1_constant(g).value)});
  if (cfg.brute) {
    const Natural brute = coprime_pairs_brute(values, limits);
    r.summary = {{"brute", to_string(brute)}, {"matches", brute == static_cast<Natural>(s.total)}};
  }
  return r;
}

Report cmd_pstar(const RunConfig& cfg) {
  const Base g(cfg.base);
  const Limits limits = limits_for(cfg);
  const auto values = pstar_list(cfg.x, g, limits);
  Report r;
  r.config = {{"base", cfg.base}, {"x", cfg.x}};
  r.summary = {{"count", values.size()},
               {"ratio_to_sqrt_x", nlohmann::ordered_json::parse(
                                       format_real(static_cast<double>(values.size()) / std::sqrt(double(cfg.x))))}};
  if (cfg.pairs) {
    const SieveResult s = sieve_from_profile(divisor_profile(values, limits),
                                             cfg.threshold ? *cfg.threshold : default_threshold(cfg.x));
    r.summary["coprime_pairs"] = to_string(static_cast<Natural>(s.total));
    r.summary["universe"] = to_string(s.pair_universe);
    r.summary["predicted"] = nlohmann::ordered_json::parse(format_real(thm2_constant(g).value));
  }
  r.columns = {"value"};
  if (cfg.list)
    for (auto v : values) r.add_row({Cell::integer(v)});
  return r;
}

Report cmd_convergence(const RunConfig& cfg, bool& passed) {
  const Base g(cfg.base);
  if (cfg.mode != "fixed-length" && cfg.mode != "pstar") throw DomainError("--mode must be fixed-length or pstar");
  const auto mode = cfg.mode == "pstar" ? ConvergenceMode::pstar : ConvergenceMode::fixed_length;
  auto scales = cfg.scales;
  if (scales.empty())
    scales = mode == ConvergenceMode::pstar ? std::vector<std::uint64_t>{1000, 100000, 10000000}
                                            : std::vector<std::uint64_t>{1, 2, 3};
  auto outcome = audit_convergence(g, scales, mode, limits_for(cfg));
  passed = outcome.passed;
  if (!cfg.svg_path.empty()) {
    std::vector<SeriesPoint> points;
    for (const auto& row : outcome.report.rows)
      points.push_back({std::stod(row[0].csv()), std::stod(row[5].csv())});
    std::ofstream file(cfg.svg_path, std::ios::binary);
    if (!file) throw DomainError("cannot open SVG output " + cfg.svg_path);
    file << to_svg("Relative deviation from the predicted density (base " + std::to_string(g.value()) + ")",
                   mode == ConvergenceMode::pstar ? "x" : "N", "relative deviation", points);
  }
  return outcome.report;
}

Report cmd_constants(const RunConfig& cfg) {
  const Base g(cfg.base);
  const auto t1 = thm1_constant(g);
  const auto t2 = thm2_constant(g);
  Report r;
  r.config = {{"base", cfg.base}};
  r.columns = {"base", "rho", "rho_real", "thm1_rational", "thm1", "thm2_rational", "thm2"};
  r.add_row({Cell::integer(cfg.base), Cell::text(to_string(rho(g))), Cell::real(to_double(rho(g))),
             Cell::text(to_string(t1.rational)), Cell::real(t1.value), Cell::text(to_string(t2.rational)),
             Cell::real(t2.value)});
  r.summary = {{"zeta2", nlohmann::ordered_json::parse(format_real(kZeta2))}};
  return r;
}

Report cmd_bv(const RunConfig& cfg) {
  const Base g(cfg.base);
  Report r;
  r.config = {{"base", cfg.base}, {"half_length", cfg.half_length}, {"Q", cfg.farey_q}};
  r.columns = {"Q", "N", "discrepancy"};
  r.add_row({Cell::integer(cfg.farey_q), Cell::integer(cfg.half_length),
             Cell::real(bv_discrepancy(cfg.farey_q, cfg.half_length, g, limits_for(cfg)))});
  return r;
}

Report cmd_farey(const RunConfig& cfg) {
  const Base g(cfg.base);
  const std::int64_t k = cfg.refined_class.value_or(0);
  Report r;
  r.config = {{"base", cfg.base}, {"half_length", cfg.half_length}, {"Q", cfg.farey_q}, {"class", k}};
  r.columns = {"Q", "N", "k", "phi_sum"};
  r.add_row({Cell::integer(cfg.farey_q), Cell::integer(cfg.half_length), Cell::integer(k),
             Cell::real(phi_farey_sum(cfg.farey_q, cfg.half_length, k, g, limits_for(cfg)))});
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Palindrome census, coprime-pair sieve and exponential-sum audits", "palinprime"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.out_path, "Write the report to this file instead of stdout");
    sub->add_option("--threads", cfg.threads, "Worker threads (default: available parallelism)")
        ->check(CLI::PositiveNumber);
  };
  auto base = [&](CLI::App* sub) { sub->add_option("--base,-g", cfg.base, "Base g >= 2")->required(); };
  auto base_list = [&](CLI::App* sub) { sub->add_option("--base,-g", cfg.bases, "Bases to audit"); };

  auto* enumerate = app.add_subcommand("enumerate", "List Pi(length) in rank order");
  base(enumerate);
  enumerate->add_option("--length,-L", cfg.length, "Palindrome length")->required()->check(CLI::PositiveNumber);
  common(enumerate);

  auto* census = app.add_subcommand("census", "Closed-form and enumerated #Pi(length)");
  base(census);
  census->add_option("--length,-L", cfg.length)->required()->check(CLI::PositiveNumber);
  common(census);

  auto* ap = app.add_subcommand("ap", "Count palindromes of one length in a residue class");
  base(ap);
  ap->add_option("--length,-L", cfg.length)->required()->check(CLI::PositiveNumber);
  ap->add_option("--modulus,-q", cfg.modulus)->required();
  ap->add_option("--residue,-a", cfg.residue);
  ap->add_option("--class,-k", cfg.refined_class, "Refine by n = k mod g^3 - g");
  common(ap);

  auto* lemma34 = app.add_subcommand("lemma34-audit", "Audit #Pi(2N+1; 0, d) against its main term");
  base_list(lemma34);
  lemma34->add_option("--max-count", cfg.max_count, "Largest #Pi(length) to include");
  common(lemma34);

  auto* bt = app.add_subcommand("bt-audit", "Audit counts in progressions against the explicit majorant");
  base_list(bt);
  bt->add_option("--max-length", cfg.max_length);
  bt->add_option("--max-modulus", cfg.max_modulus);
  bt->add_option("--samples", cfg.samples, "Sampled residues per modulus");
  bt->add_option("--seed", cfg.seed);
  common(bt);

  auto* lemma33 = app.add_subcommand("lemma33-audit", "Audit |S(2N+1; alpha)| <= g^2 Phi_N(alpha)");
  lemma33->add_option("--base,-g", cfg.bases, "Bases to audit (the first one is used with --alpha)")
      ->each([&](const std::string& v) { cfg.base = static_cast<unsigned>(std::stoul(v)); });
  lemma33->add_option("--half-length,-N", cfg.half_length, "N for a single --alpha evaluation");
  lemma33->add_option("--alpha", cfg.alpha, "Evaluate a single angle with the direct sum");
  lemma33->add_option("--max-half-length", cfg.max_half_length);
  lemma33->add_option("--samples", cfg.samples, "Seeded uniform angles per (g, N)")->default_val(10000);
  lemma33->add_option("--seed", cfg.seed);
  common(lemma33);

  auto* coprime = app.add_subcommand("coprime", "Ordered coprime pairs in Pi(2N+1) by the Moebius sieve");
  base(coprime);
  coprime->add_option("--half-length,-N", cfg.half_length)->required();
  coprime->add_option("--threshold,-U", cfg.threshold, "Split point U (default floor(g^(N/5)))");
  coprime->add_option("--u-exponent", cfg.u_exponent, "U = floor(g^(e N))");
  coprime->add_flag("--brute", cfg.brute, "Also run the brute-force gcd oracle");
  common(coprime);

  auto* pstar = app.add_subcommand("pstar", "Palindromes up to x coprime to g^3 - g");
  base(pstar);
  pstar->add_option("--x,-x", cfg.x)->required()->check(CLI::PositiveNumber);
  pstar->add_flag("--list", cfg.list, "Emit every element as a row");
  pstar->add_flag("--pairs", cfg.pairs, "Also count ordered coprime pairs");
  pstar->add_option("--threshold,-U", cfg.threshold);
  common(pstar);

  auto* convergence = app.add_subcommand("convergence", "Coprime-pair density against the predicted constant");
  base(convergence);
  convergence->add_option("--scales", cfg.scales, "N values (fixed-length) or x values (pstar)");
  convergence->add_option("--mode", cfg.mode)->check(CLI::IsMember({"fixed-length", "pstar"}));
  convergence->add_option("--svg", cfg.svg_path, "Write a log-scale chart of the deviation");
  common(convergence);

  auto* constants = app.add_subcommand("constants", "rho(g) and the leading constants");
  base(constants);
  common(constants);

  auto* bv = app.add_subcommand("bv", "Discrepancy of counts in progressions summed over moduli");
  base(bv);
  bv->add_option("--half-length,-N", cfg.half_length)->required();
  bv->add_option("--Q,-Q", cfg.farey_q)->check(CLI::Range(1, 1000));
  common(bv);

  auto* farey = app.add_subcommand("farey", "Sum of Phi_N over reduced fractions shifted by k/(g^3-g)");
  base(farey);
  farey->add_option("--half-length,-N", cfg.half_length)->required()->check(CLI::PositiveNumber);
  farey->add_option("--Q,-Q", cfg.farey_q)->check(CLI::Range(1, 1000));
  farey->add_option("--class,-k", cfg.refined_class);
  common(farey);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    bool passed = true;
    Report report;
    if (*enumerate) report = cmd_enumerate(cfg);
    else if (*census) report = cmd_census(cfg);
    else if (*ap) report = cmd_ap(cfg);
    else if (*lemma34) report = cmd_lemma34(cfg, passed);
    else if (*bt) report = cmd_bt(cfg, passed);
    else if (*lemma33) report = cmd_lemma33(cfg, passed);
    else if (*coprime) report = cmd_coprime(cfg);
    else if (*pstar) report = cmd_pstar(cfg);
    else if (*convergence) report = cmd_convergence(cfg, passed);
    else if (*constants) report = cmd_constants(cfg);
    else if (*bv) report = cmd_bv(cfg);
    else if (*farey) report = cmd_farey(cfg);
    emit(cfg, report, out);
    if (!passed) err << "audit reported failures; see the report\n";
    return kExitOk;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace palinprime::cli
