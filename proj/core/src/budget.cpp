#include "zpsum/budget.hpp"

#include <cstdlib>

namespace zpsum {

EnumerationBudget EnumerationBudget::defaults() {
  if (const char* env = std::getenv("ZPSUM_MAX_ENUMERATION")) {
    return {BigInt(env)};
  }
  return {BigInt(50'000'000)};
}

void require_budget(const BigInt& predicted, const EnumerationBudget& budget,
                    std::string_view what) {
  if (predicted > budget.limit) {
    throw BudgetError(what, predicted, budget.limit);
  }
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt bigint_pow(std::int64_t base, std::int64_t exp) {
  BigInt r = 1;
  for (std::int64_t i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace zpsum
