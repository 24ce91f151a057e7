#include "palinprime/expsum.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "palinprime/census.hpp"
#include "palinprime/errors.hpp"
#include "palinprime/parallel.hpp"
#include "palinprime/walker.hpp"

namespace palinprime {

namespace {

/// Neumaier-compensated accumulator for complex sums.
class CompensatedSum {
 public:
  void add(ComplexValue z) {
    add_part(re_, re_c_, z.real());
    add_part(im_, im_c_, z.imag());
  }
  ComplexValue value() const { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void add_part(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }

  double re_ = 0, re_c_ = 0, im_ = 0, im_c_ = 0;
};

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  Natural r = 1 % m;
  Natural base = b % m;
  for (; e != 0; e >>= 1) {
    if (e & 1) r = r * base % m;
    base = base * base % m;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t normalize(std::int64_t a, std::uint64_t m) {
  const Natural mm = m;
  if (a >= 0) return static_cast<std::uint64_t>(Natural(static_cast<std::uint64_t>(a)) % mm);
  const Natural neg = Natural(static_cast<std::uint64_t>(-(a + 1))) + 1;
  const Natural r = neg % mm;
  return r == 0 ? 0 : static_cast<std::uint64_t>(mm - r);
}

/// Residues alpha * (sum of digits times weights) over the free digits
/// [first, last), with digit 0 restricted to [1, g).
std::vector<std::uint64_t> block_residues(unsigned first, unsigned last, unsigned length, const Angle& alpha, Base g) {
  const std::uint64_t den = alpha.denominator();
  std::vector<std::uint64_t> residues{0};
  for (unsigned i = first; i < last; ++i) {
    const unsigned mirror = length - 1 - i;
    std::uint64_t w = pow_mod(g.value(), i, den);
    if (mirror != i) w = static_cast<std::uint64_t>((Natural{w} + pow_mod(g.value(), mirror, den)) % den);
    const auto step = static_cast<std::uint64_t>(Natural{alpha.numerator()} * w % den);
    std::vector<std::uint64_t> next;
    next.reserve(residues.size() * g.value());
    for (std::uint64_t r : residues) {
      std::uint64_t acc = r;
      for (unsigned d = 0; d < g.value(); ++d) {
        if (i != 0 || d != 0) next.push_back(acc);
        acc += step;
        if (acc >= den) acc -= den;
      }
    }
    residues = std::move(next);
  }
  return residues;
}

}  // namespace

Angle::Angle(std::uint64_t num, std::uint64_t den) {
  const std::uint64_t d = std::gcd(num, den);
  num_ = num / d;
  den_ = den / d;
}

Angle Angle::fraction(std::int64_t h, std::uint64_t q) {
  if (q == 0) throw DomainError("angle denominator must be positive");
  if (q > kMaxDenominator) throw OverflowError("angle denominator exceeds 2^62");
  return Angle(normalize(h, q), q);
}

Angle Angle::farey(std::int64_t h, std::uint64_t q, std::int64_t k, Base g) {
  if (q == 0) throw DomainError("angle denominator must be positive");
  const std::uint64_t m = g.cube_minus();
  const Natural den = Natural{q} * m;
  if (den > kMaxDenominator) throw OverflowError("q (g^3 - g) exceeds 2^62");
  const Natural num = Natural{normalize(h, q)} * m + Natural{normalize(k, m)} * q;
  return Angle(static_cast<std::uint64_t>(num % den), static_cast<std::uint64_t>(den));
}

Angle Angle::real(double alpha) {
  if (!std::isfinite(alpha)) throw DomainError("angle must be finite");
  const double frac = alpha - std::floor(alpha);
  auto m = static_cast<std::uint64_t>(std::llround(std::ldexp(frac, 53)));
  if (m >= kRealDenominator) m -= kRealDenominator;
  return Angle(m, kRealDenominator);
}

Angle Angle::times(Natural n) const {
  const Natural r = Natural{num_} * (n % den_) % den_;
  return Angle(static_cast<std::uint64_t>(r), den_);
}

Angle Angle::operator-() const { return Angle(num_ == 0 ? 0 : den_ - num_, den_); }

ComplexValue unit_root(std::uint64_t r, std::uint64_t den) {
  // Centre the phase in [-1/2, 1/2) before scaling by 2 pi.
  const double t = 2 * r >= den ? -static_cast<double>(den - r) / static_cast<double>(den)
                                : static_cast<double>(r) / static_cast<double>(den);
  const double x = 2 * std::numbers::pi * t;
  return {std::cos(x), std::sin(x)};
}

ComplexValue psi(const Angle& alpha, Base g) {
  CompensatedSum sum;
  const std::uint64_t den = alpha.denominator();
  std::uint64_t r = 0;
  for (unsigned n = 0; n < g.value(); ++n) {
    sum.add(unit_root(r, den));
    r += alpha.numerator();
    if (r >= den) r -= den;
  }
  return sum.value();
}

double phi(unsigned half_length, const Angle& alpha, Base g) {
  if (half_length == 0) throw DomainError("phi requires N >= 1");
  const std::uint64_t den = alpha.denominator();
  double product = 1.0;
  for (unsigned i = 1; i < half_length; ++i) {
    const Natural w = Natural{pow_mod(g.value(), i, den)} + pow_mod(g.value(), 2 * half_length - i, den);
    product *= std::abs(psi(alpha.times(w), g));
  }
  return product;
}

ComplexValue s_direct(unsigned length, const Angle& alpha, Base g, const Limits& limits) {
  const Natural total = palindrome_count(length, g);
  if (total > Natural{limits.enumeration})
    throw BudgetError("enumeration of " + to_string(total) + " palindromes exceeds budget " +
                      std::to_string(limits.enumeration));
  const auto shards = shard_ranks(static_cast<std::uint64_t>(total));
  const std::uint64_t den = alpha.denominator();
  const auto partial = parallel_map<ComplexValue>(shards.size(), limits.threads, [&](std::size_t s) {
    ResidueWalker walker(length, g, den, alpha.numerator());
    CompensatedSum sum;
    walk_range(walker, shards[s].begin, shards[s].end, [&](std::uint64_t r) { sum.add(unit_root(r, den)); });
    return sum.value();
  });
  CompensatedSum merged;
  for (const auto& z : partial) merged.add(z);
  return merged.value();
}

ComplexValue s_split(unsigned length, const Angle& alpha, Base g, const Limits& limits) {
  if (length == 0) throw DomainError("palindrome length must be positive");
  const unsigned h = free_digit_count(length);
  const unsigned top = (h + 1) / 2;
  const Natural work = checked_pow(g.value(), top) + checked_pow(g.value(), h - top);
  if (work > Natural{limits.enumeration}) throw BudgetError("split evaluation exceeds enumeration budget");
  const std::uint64_t den = alpha.denominator();
  auto block_sum = [&](unsigned first, unsigned last) {
    CompensatedSum sum;
    for (std::uint64_t r : block_residues(first, last, length, alpha, g)) sum.add(unit_root(r, den));
    return sum.value();
  };
  return block_sum(0, top) * block_sum(top, h);
}

Lemma33Check lemma33_audit(unsigned half_length, const Angle& alpha, Base g, SumMethod method,
                           const Limits& limits) {
  if (half_length == 0) throw DomainError("lemma33_audit requires N >= 1");
  const unsigned length = 2 * half_length + 1;
  const ComplexValue s =
      method == SumMethod::direct ? s_direct(length, alpha, g, limits) : s_split(length, alpha, g, limits);
  Lemma33Check out;
  const double gv = g.value();
  out.lhs = std::abs(s);
  out.rhs = gv * gv * phi(half_length, alpha, g) + 1e-9 * std::pow(gv, half_length);
  out.ok = out.lhs <= out.rhs;
  return out;
}

double bv_discrepancy(std::uint64_t max_modulus, unsigned half_length, Base g, const Limits& limits) {
  if (max_modulus == 0) throw DomainError("Q must be at least 1");
  if (max_modulus > 1000) throw DomainError("Q must be at most 1000");
  const unsigned length = 2 * half_length + 1;
  const std::uint64_t m = g.cube_minus();
  double total = 0.0;
  // q = 1 contributes nothing: every class count equals its mean.
  for (std::uint64_t q = 2; q <= max_modulus; ++q) {
    if (std::gcd(q, m) != 1) continue;
    const std::uint64_t modulus = q * m;
    const auto hist = residue_histogram(length, g, modulus, limits);
    // By CRT a residue r mod qM is the pair (r mod q, r mod M).
    std::vector<std::uint64_t> cells(modulus, 0), class_total(m, 0);
    for (std::uint64_t r = 0; r < modulus; ++r) {
      cells[(r % m) * q + r % q] += hist[r];
      class_total[r % m] += hist[r];
    }
    std::uint64_t worst = 0;  // max |q c - T|, in units of 1/q
    for (std::uint64_t k = 0; k < m; ++k) {
      for (std::uint64_t a = 0; a < q; ++a) {
        const std::uint64_t scaled = q * cells[k * q + a];
        const std::uint64_t t = class_total[k];
        worst = std::max(worst, scaled > t ? scaled - t : t - scaled);
      }
    }
    total += static_cast<double>(worst) / static_cast<double>(q) / std::sqrt(static_cast<double>(q));
  }
  return total;
}

double phi_farey_sum(std::uint64_t max_modulus, unsigned half_length, std::int64_t k, Base g, const Limits& limits) {
  if (half_length == 0) throw DomainError("phi_farey_sum requires N >= 1");
  if (max_modulus > 1000) throw DomainError("Q must be at most 1000");
  const std::uint64_t m = g.cube_minus();
  std::vector<std::uint64_t> moduli;
  for (std::uint64_t q = 2; q <= max_modulus; ++q)
    if (std::gcd(q, m) == 1) moduli.push_back(q);
  const auto partial = parallel_map<double>(moduli.size(), limits.threads, [&](std::size_t i) {
    const std::uint64_t q = moduli[i];
    double sum = 0.0;
    for (std::uint64_t h = 1; h < q; ++h)
      if (std::gcd(h, q) == 1) sum += phi(half_length, Angle::farey(static_cast<std::int64_t>(h), q, k, g), g);
    return sum;
  });
  double total = 0.0;
  for (double v : partial) total += v;
  return total;
}

}  // namespace palinprime
