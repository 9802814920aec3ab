#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zpsum/budget.hpp"
#include "zpsum/residue.hpp"

namespace zpsum {

struct EGZReport {
  std::int64_t p;
  BigInt total_multisets;
  /// Multisets of size 2p-1 with no p-element zero-sum sub-multiset
  /// (the theorem predicts none). Every entry is oracle re-checked.
  std::vector<ResidueSequence> counterexamples;
};

/// Exhaustive Erdos-Ginzburg-Ziv verification: enumerates all multisets of
/// cardinality 2p-1 over Z_p and checks 0 in Sigma_p. The enumeration
/// count is asserted against the closed form C(3p-2, p-1). Multisets with
/// an element of multiplicity >= p have an immediate zero p-sum (p equal
/// elements) and are classified without building a sequence, which also
/// keeps every constructed sequence inside the m(A) <= p cap.
EGZReport egz_verify(PrimeModulus p,
                     const EnumerationBudget& budget = EnumerationBudget::defaults(),
                     int threads = 1);

struct EGZExtremalReport {
  std::int64_t p;
  BigInt total_multisets;
  /// All p-zero-sum-free multisets of cardinality 2p-2 (oracle-verified).
  std::vector<ResidueSequence> extremal;
  /// Indices into `extremal` that deviate from the predicted two-value
  /// shape {a^[p-1], b^[p-1]}. Deviations are flagged, never suppressed.
  std::vector<std::size_t> shape_deviations;
};

EGZExtremalReport egz_extremal_classify(
    PrimeModulus p,
    const EnumerationBudget& budget = EnumerationBudget::defaults(),
    int threads = 1);

/// The three-case greedy construction from the extremal-classification
/// proof. Input shape: A = {0^[p-k1], 1^[p-k2], a_1, ..., a_l} with
/// k1, k2 >= 1, |A| = 2p-2, and the a_i read as signed representatives
/// outside {0, 1}. Returns a sub-multiset of cardinality exactly p with
/// residue sum 0 (validated before returning), or nullopt when l = 0
/// (A is already extremal) or no case applies.
///
/// Case order follows the proof (large element, then negatives, then
/// positives); within a case, candidates are scanned smallest first and
/// every constructed answer is validated rather than trusted.
std::optional<ResidueSequence> greedy_zero_p_subsequence(
    const ResidueSequence& a);

struct Thm62Report {
  Residue a;
  Residue b;
  Count m_a;
  Count m_b;
  /// |A| - p.
  Count slack;
  std::int64_t f_pp;
};

/// Measurement for the two-high-multiplicities theorem: the pair (a, b)
/// maximizing m_a + m_b in a p-zero-sum-free sequence with
/// p <= |A| <= 2p-2. The constant c_3 is unknown and f(p,p) is vacuous at
/// desk scale, so nothing is asserted. Requires A p-zero-sum-free
/// (oracle-checked).
Thm62Report thm62_structure(const ResidueSequence& a);

}  // namespace zpsum
