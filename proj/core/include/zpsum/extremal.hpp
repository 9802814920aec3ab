#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zpsum/budget.hpp"
#include "zpsum/residue.hpp"

namespace zpsum {

enum class Family { A1, A2, A3 };

/// Parameters and realized sequence of one of the extremal families.
///
/// A1 = {1^[m], ..., (n-1)^[m], n^[k]} with integer sum <= p-1.
/// A2 = {-n^[k], ..., -1^[m], 0^[m], 1^[m], ..., n^[k]} with norm sum <= p-2.
/// A3 = the symmetric A2 shape with all l-sums inside an integer interval
///      of length below p.
///
/// `degenerate` marks the A2 fallback {0^[m]} for primes too small to fit
/// any (n, k) with k >= 1; n and k are 0 there.
struct ExtremalSpec {
  Family family;
  std::int64_t p;
  Count m;
  std::int64_t n;
  Count k;
  std::optional<Count> l;
  ResidueSequence sequence;
  bool degenerate = false;
};

/// Largest n with 1 + 2 + ... + (n-1) < p.
std::int64_t n_of_p(const PrimeModulus& p);

/// Maximal zero-sum-free family: maximizes m(n-1)+k over 1 <= k <= m
/// subject to m*n(n-1)/2 + k*n <= p-1. Oracle-validated zero-sum-free.
ExtremalSpec build_A1(PrimeModulus p, Count m);

/// Maximal incomplete family: maximizes (2n-1)m + 2k subject to the
/// corrected guarantee m*n(n-1) + 2kn <= p-2 (the paper's two-sided
/// sandwich admits complete sequences at boundary primes, e.g. p = 13,
/// m = 1). Ties prefer larger n. Oracle-validated incomplete.
ExtremalSpec build_A2(PrimeModulus p, Count m);

/// Maximal symmetric l-incomplete family: exhausts n and k in [1, m],
/// keeping the largest cardinality whose l-sum range has integer length
/// below p and whose cardinality is at least l. Returns nullopt when no
/// (n, k) is feasible. Oracle-validated l-incomplete.
std::optional<ExtremalSpec> build_A3(PrimeModulus p, Count m, Count l);

struct ZeroFree3Extremal {
  /// The set {-2, 1, 3, 4, ..., n(p)} as residues, deduplicated and sorted.
  std::vector<Residue> members;
  std::int64_t n;
  /// p == n(p)(n(p)+1)/2 - 1.
  bool special;
  /// True when -2 collides with another member mod p, so the realized set
  /// has fewer than n(p) elements (happens at p = 5).
  bool collision;
};

/// The predicted unique extremal zero-sum-free set. Accepts p >= 5 (the
/// construction needs n(p) >= 3 distinct members).
ZeroFree3Extremal zerofree3_extremal(PrimeModulus p);

struct ZeroFree3ScanReport {
  std::int64_t p;
  std::int64_t n;
  BigInt subsets_enumerated;
  /// Zero-sum-free n(p)-subsets of Z_p \ {0} (the theorem predicts none
  /// when p is not special).
  std::vector<std::vector<Residue>> zero_sum_free_sets;
};

ZeroFree3ScanReport zerofree3_scan(
    PrimeModulus p,
    const EnumerationBudget& budget = EnumerationBudget::defaults());

/// Searches b for the smallest exceptional set with
/// b.(A \ A-flat) a sub-multiset of A1(p, m). Requires A zero-sum-free
/// and m(A) <= m. Absent when every b needs more than `budget` removals.
std::optional<std::pair<Residue, ResidueSequence>> thm_zerofree1_witness(
    const ResidueSequence& a, Count m, Count budget);

}  // namespace zpsum
