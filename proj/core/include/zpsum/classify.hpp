#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "zpsum/budget.hpp"
#include "zpsum/residue.hpp"
#include "zpsum/sumset.hpp"

namespace zpsum {

// All classifiers go through the sumset module so there is a single
// source of truth for membership; the norm-sum shortcut below is a
// separate sufficient-condition helper and never substitutes for the
// exact test.

/// 0 not in Sigma(A). Rejects the empty sequence.
bool is_zero_sum_free(const ResidueSequence& a);

/// 0 not in Sigma_l(A), 1 <= l <= |A|.
bool is_l_zero_sum_free(const ResidueSequence& a, Count l);

/// Sigma(A) = Z_p.
bool is_complete(const ResidueSequence& a);

/// Sigma_l(A) = Z_p.
bool is_l_complete(const ResidueSequence& a, Count l);

/// Sufficient condition only: sum of norms < p-1 forces incompleteness.
/// A false return says nothing about A.
bool incomplete_by_norm_sum(const ResidueSequence& a);

struct LClassification {
  Count l;
  bool l_zero_sum_free;
  bool l_complete;
  friend bool operator==(const LClassification&, const LClassification&) =
      default;
};

struct ClassificationReport {
  bool zero_sum_free;
  bool complete;
  std::vector<LClassification> l_results;
};

ClassificationReport classify_sequence(const ResidueSequence& a,
                                       std::span<const Count> ls);

struct OlsonThresholdReport {
  std::int64_t p;
  /// Smallest cardinality checked: the least s with s*s > 4p-3.
  std::int64_t min_cardinality;
  BigInt subsets_checked;
  /// Incomplete subsets above the threshold (the theorem predicts none).
  std::vector<std::vector<Residue>> violations;
};

/// Exhaustively tests Olson's completeness threshold: every subset of Z_p
/// with |A| > sqrt(4p-3) should be complete. Refuses when the closed-form
/// subset count exceeds the budget.
OlsonThresholdReport olson_threshold_check(
    PrimeModulus p, const EnumerationBudget& budget = EnumerationBudget::defaults());

}  // namespace zpsum
