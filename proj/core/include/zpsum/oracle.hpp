#pragma once

#include <cstdint>
#include <vector>

#include "zpsum/budget.hpp"
#include "zpsum/residue.hpp"
#include "zpsum/sumset.hpp"

namespace zpsum::oracle {

// Independent reference implementations used to cross-check the production
// paths. These deliberately avoid the word-packed knapsack DP: sums are
// enumerated selection by selection over the flattened sequence, and the
// partition counters enumerate partitions one at a time. Keep them
// independent; they are the other side of every dual-route check.

/// Sigma(A) by direct enumeration of all 2^|A| selections.
SumsetMask sigma_brute(const ResidueSequence& a);

/// Sigma_l(A) by direct enumeration.
SumsetMask sigma_l_brute(const ResidueSequence& a, Count l);

/// One pass over all selections filling Sigma and every Sigma_l row
/// (index = selection size, 0..|A|).
void all_sums_brute(const ResidueSequence& a, SumsetMask& sig,
                    std::vector<SumsetMask>& by_count);

/// Number of partitions of n with each part used at most m times
/// (m = 0 for unbounded), counted by explicit enumeration.
BigInt partition_count_enumerated(std::int64_t n, std::int64_t m);

/// Number of partitions of n into odd parts (unbounded), via a DP that is
/// distinct from the production bounded-multiplicity table.
BigInt partition_count_odd_parts(std::int64_t n);

struct BruteCensus {
  BigInt zero_sum_free;
  BigInt incomplete;
  BigInt total;
};

/// Census over all nonempty multisets with multiplicities <= m, classified
/// through sigma_brute. Enumeration style (nondecreasing element lists)
/// differs from the production multiplicity odometer.
BruteCensus census_brute(PrimeModulus p, Count m);

/// Quadratic K-net checker straight from the covering definition.
bool knet_brute(PrimeModulus p, const std::vector<Residue>& x,
                std::int64_t k);

}  // namespace zpsum::oracle
