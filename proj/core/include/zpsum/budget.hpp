#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zpsum {

using BigInt = boost::multiprecision::cpp_int;

/// Thrown when an enumeration would exceed its budget. Commands refuse
/// to start rather than run unbounded jobs; the message carries the
/// closed-form count that triggered the refusal.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(std::string_view what, BigInt predicted, BigInt limit)
      : std::runtime_error(std::string(what) + ": would enumerate " +
                           predicted.str() + " cases, budget is " +
                           limit.str()),
        predicted_(std::move(predicted)),
        limit_(std::move(limit)) {}

  const BigInt& predicted() const noexcept { return predicted_; }
  const BigInt& limit() const noexcept { return limit_; }

 private:
  BigInt predicted_;
  BigInt limit_;
};

struct EnumerationBudget {
  BigInt limit;

  /// Default cap, overridable via the ZPSUM_MAX_ENUMERATION environment
  /// variable.
  static EnumerationBudget defaults();
};

/// Refuses (throws BudgetError) when predicted > budget.limit.
void require_budget(const BigInt& predicted, const EnumerationBudget& budget,
                    std::string_view what);

BigInt binomial(std::int64_t n, std::int64_t k);

/// (base)^exp for closed-form enumeration counts.
BigInt bigint_pow(std::int64_t base, std::int64_t exp);

}  // namespace zpsum
