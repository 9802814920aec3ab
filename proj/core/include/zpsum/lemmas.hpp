#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zpsum/budget.hpp"
#include "zpsum/residue.hpp"

namespace zpsum {

// Constructive toolkit for the simple lemmas (general modulus D, not
// necessarily prime) plus the empirical probes for the cited
// sumset-structure theorems, whose constants are unspecified and are
// therefore only measured, never asserted.

/// Pigeonhole on prefix sums: given |X| = D elements of Z_D, returns a
/// nonempty contiguous block of X summing to 0 mod D (either the first
/// zero prefix or the block strictly between two colliding prefixes).
/// The block is returned in input order. Rejects |X| != D.
std::vector<std::int64_t> zero_subset_mod_D(std::int64_t D,
                                            std::span<const std::int64_t> x);

/// Reachability with back-pointers: given |X| = D elements all coprime to
/// D, returns a sub-multiset of X summing to r mod D. r = 0 returns a
/// nonempty witness (the empty sum is excluded, matching the lemma's
/// convention). Errors name the first offending element when coprimality
/// fails.
std::vector<std::int64_t> full_sumset_coprime(std::int64_t D,
                                              std::span<const std::int64_t> x,
                                              std::int64_t r);

struct CRTRepresentation {
  std::vector<std::int64_t> d_list;
  std::int64_t D;
  std::int64_t r;
  std::vector<std::int64_t> a_list;
};

/// Unit-fraction representation: distinct d_i, D = lcm(d_i); finds
/// 0 <= a_i <= d_i - 1 with sum a_i * (D / d_i) = r (mod D), i.e.
/// sum a_i / d_i = r / D (mod 1). Solved by iterated extended gcd over
/// the weights D/d_i (whose gcd is 1), then reduced mod d_i; the
/// congruence is re-verified before returning.
CRTRepresentation crt_unit_fractions(std::span<const std::int64_t> d_list,
                                     std::int64_t r);

/// Bounded representation: gcd(d_1, ..., d_n, D) = 1; finds a_i >= 0 with
/// sum a_i <= D and sum a_i * d_i = r (mod D). BFS over the Cayley graph
/// of Z_D with generators d_i gives the minimum total sum a_i, which is a
/// path length and hence at most D - 1.
CRTRepresentation crt_bounded(std::span<const std::int64_t> d_list,
                              std::int64_t D, std::int64_t r);

struct OlsonProbeReport {
  std::int64_t p;
  /// min over subsets A (2 <= |A| <= p-1) of |Sigma_l(A)| / |A|^2 with
  /// l = floor(|A|/2).
  double min_ratio;
  std::vector<Residue> argmin_set;
  Count argmin_l;
  BigInt subsets_checked;
};

/// Exhaustive measurement of the Olson l-sum lower bound; the constants
/// C_0, c_0 are unspecified, so the minimum ratio is reported only.
OlsonProbeReport olson_lsum_probe(
    PrimeModulus p,
    const EnumerationBudget& budget = EnumerationBudget::defaults());

struct APProbeReport {
  std::int64_t p;
  Count set_size;
  Count l;
  std::int64_t d;
  std::int64_t trials;
  std::uint64_t seed;
  /// Trials whose Sigma_l(A) covered all of Z_p (the theorem's first
  /// branch).
  std::int64_t complete_count;
  /// min over non-complete trials of (longest AP length) / (l * |A|^(1/d));
  /// absent when every trial was complete.
  std::optional<double> min_ratio;
};

/// Seeded random probe of the AP-in-sumset theorem. Per-trial generators
/// are derived from (seed, trial index), so reports are reproducible
/// bit-for-bit and independent of scheduling.
APProbeReport ap_theorem_probe(PrimeModulus p, Count set_size, Count l,
                               std::int64_t d, std::int64_t trials,
                               std::uint64_t seed);

}  // namespace zpsum
