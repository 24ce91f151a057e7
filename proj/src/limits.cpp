#include "palinprime/limits.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>
#include <thread>

#include "palinprime/errors.hpp"

namespace palinprime {

Limits Limits::defaults() {
  Limits l;
  if (const char* env = std::getenv("PALINPRIME_BUDGET"); env != nullptr && *env != '\0') {
    std::uint64_t value = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc() || ptr != end || value == 0)
      throw DomainError("PALINPRIME_BUDGET must be a positive integer, got '" + std::string(env) + "'");
    l.enumeration = value;
  }
  l.threads = std::max(1u, std::thread::hardware_concurrency());
  return l;
}

void check_enumeration_budget(std::uint64_t count, const Limits& limits) {
  if (count > limits.enumeration)
    throw BudgetError("enumeration of " + std::to_string(count) + " palindromes exceeds budget " +
                      std::to_string(limits.enumeration));
}

}  // namespace palinprime
