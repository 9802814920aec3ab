#include "zpsum/classify.hpp"

#include <cmath>

#include "zpsum/enumerate.hpp"

namespace zpsum {

bool is_zero_sum_free(const ResidueSequence& a) {
  if (a.empty()) throw std::invalid_argument("is_zero_sum_free: empty");
  return !sigma(a).test(0);
}

bool is_l_zero_sum_free(const ResidueSequence& a, Count l) {
  if (l < 1 || l > a.cardinality()) {
    throw std::invalid_argument("is_l_zero_sum_free: l out of range");
  }
  return !sigma_l(a, l).test(0);
}

bool is_complete(const ResidueSequence& a) {
  if (a.empty()) throw std::invalid_argument("is_complete: empty");
  return sigma(a).full();
}

bool is_l_complete(const ResidueSequence& a, Count l) {
  if (l < 1 || l > a.cardinality()) {
    throw std::invalid_argument("is_l_complete: l out of range");
  }
  return sigma_l(a, l).full();
}

bool incomplete_by_norm_sum(const ResidueSequence& a) {
  return a.norm_sum() < a.modulus().value() - 1;
}

ClassificationReport classify_sequence(const ResidueSequence& a,
                                       std::span<const Count> ls) {
  ClassificationReport rep{};
  rep.zero_sum_free = is_zero_sum_free(a);
  rep.complete = is_complete(a);
  for (Count l : ls) {
    rep.l_results.push_back(
        {l, is_l_zero_sum_free(a, l), is_l_complete(a, l)});
  }
  return rep;
}

OlsonThresholdReport olson_threshold_check(PrimeModulus p,
                                           const EnumerationBudget& budget) {
  const std::int64_t pv = p.value();
  // smallest s with s^2 > 4p-3
  std::int64_t s = static_cast<std::int64_t>(std::sqrt(double(4 * pv - 3)));
  while (s * s <= 4 * pv - 3) ++s;
  while (s > 0 && (s - 1) * (s - 1) > 4 * pv - 3) --s;

  BigInt predicted = 0;
  for (std::int64_t k = s; k <= pv; ++k) predicted += binomial(pv, k);
  require_budget(predicted, budget, "olson_threshold_check");

  OlsonThresholdReport rep{pv, s, predicted, {}};
  for (std::int64_t k = s; k <= pv; ++k) {
    for_each_combination(pv, k, [&](const std::vector<std::int64_t>& idx) {
      ResidueSequence a(p, std::span<const std::int64_t>(idx));
      if (!sigma(a).full()) {
        rep.violations.emplace_back(idx.begin(), idx.end());
      }
      return true;
    });
  }
  return rep;
}

}  // namespace zpsum
