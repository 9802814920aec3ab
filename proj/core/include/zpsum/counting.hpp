#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "zpsum/budget.hpp"
#include "zpsum/residue.hpp"

namespace zpsum {

// Exact big-integer partition counting and the exhaustive census of
// zero-sum-free / incomplete sequences. Counts are never floated; the
// asymptotic comparison (log N / sqrt p against the main-term exponent)
// is a report, not an assertion.

/// p_m(n): partitions of n in which each part value appears at most
/// m_bound times. m_bound = 0 means unbounded (the ordinary partition
/// function). Exact, O(n^2) big-integer additions via per-part sliding
/// window sums.
BigInt partition_count(std::int64_t n, std::int64_t m_bound);

struct PartitionTable {
  std::int64_t m_bound;  // 0 = unbounded
  std::vector<BigInt> values;  // p_m(0..N)
};

PartitionTable partition_table(std::int64_t n_max, std::int64_t m_bound);

/// Main-term exponent of the bounded-partition asymptotic:
/// sqrt((1 - 1/(m+1)) * 2/3) * pi * sqrt(n). m_bound = 0 gives the
/// unbounded limit sqrt(2n/3) * pi. The o(1) term is not modeled.
double meinardus_exponent(std::int64_t n, std::int64_t m_bound);

struct CensusReport {
  std::int64_t p;
  Count m;
  BigInt count_zero_sum_free;
  BigInt count_incomplete;
  /// ln(count) / sqrt(p); 0 when the count is 0.
  double log_ratio_zsf;
  double log_ratio_inc;
  BigInt multisets_enumerated;
};

/// Classifies every nonempty multiset over Z_p with multiplicities <= m.
/// Subtrees whose prefix is already complete are pruned (supersets of a
/// complete multiset stay complete and zero-sum). Workers partition the
/// space by the multiplicity of residue 0 and merge counters by addition.
CensusReport census(PrimeModulus p, Count m,
                    const EnumerationBudget& budget = EnumerationBudget::defaults(),
                    int threads = 1);

/// Reads a partition (of a number at most p-1) as a residue sequence;
/// guaranteed zero-sum-free since the integer sum never wraps.
/// Rejects partitions summing to p or more.
ResidueSequence zsf_from_partition(std::span<const std::int64_t> parts,
                                   PrimeModulus p);

/// Union of one partition with the negative of another; guaranteed
/// incomplete when the combined sum is at most p-2 (norm sum < p-1).
/// Oracle-validated; rejects empty input or sums above p-2.
ResidueSequence incomplete_from_two_partitions(
    std::span<const std::int64_t> parts_pos,
    std::span<const std::int64_t> parts_neg, PrimeModulus p);

}  // namespace zpsum
