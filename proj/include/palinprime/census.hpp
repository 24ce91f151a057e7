#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "palinprime/arith.hpp"
#include "palinprime/digits.hpp"
#include "palinprime/limits.hpp"

namespace palinprime {

/// Residue class a mod q, optionally refined by n = k mod g^3 - g.
/// Residues are normalized into [0, q) and [0, g^3 - g).
struct ApQuery {
  std::uint64_t a = 0;
  std::uint64_t q = 1;
  std::optional<std::uint64_t> k;

  static ApQuery make(std::int64_t a, std::uint64_t q, Base g, std::optional<std::int64_t> k = std::nullopt);
};

/// #Pi(length) by the closed form g^(N-1)(g-1) / g^N(g-1).
Natural count_formula(unsigned length, Base g);

/// #Pi(length) by walking every palindrome.
std::uint64_t count_enumerated(unsigned length, Base g, const Limits& limits = Limits::defaults());

/// #{n in Pi(length) : n = a mod q} (and n = k mod g^3 - g when k is set).
std::uint64_t count_ap(unsigned length, Base g, const ApQuery& query, const Limits& limits = Limits::defaults());

/// counts[r] = #{n in Pi(length) : n = r mod q}.
std::vector<std::uint64_t> residue_histogram(unsigned length, Base g, std::uint64_t q,
                                             const Limits& limits = Limits::defaults());

/// Exact main term of #Pi(length; 0, d) for odd length and d | g^3 - g:
/// (1 + (d, g^2-1, 2)/(g-1)) (1 - (d, g)/g) #Pi(length) / d.
Rational ap_main_term(unsigned length, Base g, std::uint64_t d);

/// Explicit majorant 2g g^(length/2) q^(-1/2), plus 1 for a nonzero residue.
double bt_majorant(unsigned length, Base g, std::uint64_t q, bool a_is_zero);

/// Palindromes n <= x with (n, g^3 - g) = 1, ascending.
std::vector<std::uint64_t> pstar_list(std::uint64_t x, Base g, const Limits& limits = Limits::defaults());
std::uint64_t pstar_count(std::uint64_t x, Base g, const Limits& limits = Limits::defaults());

/// All palindromes of the given length, ascending.
std::vector<std::uint64_t> palindromes_of_length(unsigned length, Base g, const Limits& limits = Limits::defaults());

/// c_d = #{n in S : d | n} for every squarefree d dividing some element of S.
/// Absent keys mean zero; counts.at(1) == universe.
struct DivisorProfile {
  struct Entry {
    std::uint64_t count = 0;
    int mobius = 0;
  };
  std::map<std::uint64_t, Entry> counts;
  std::uint64_t universe = 0;

  std::uint64_t count(std::uint64_t d) const {
    const auto it = counts.find(d);
    return it == counts.end() ? 0 : it->second.count;
  }
};

DivisorProfile divisor_profile(unsigned length, Base g, const Limits& limits = Limits::defaults());
DivisorProfile divisor_profile(std::span<const std::uint64_t> values, const Limits& limits = Limits::defaults());

}  // namespace palinprime
