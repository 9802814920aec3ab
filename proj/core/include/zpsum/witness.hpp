#pragma once

#include <cstdint>
#include <optional>

#include "zpsum/residue.hpp"
#include "zpsum/sumset.hpp"

namespace zpsum {

// Certificates for the three classification theorems. Searches are
// exhaustive over the dilation b; greedy removal of the largest summand is
// exact per fixed b for minimizing the number of removals, so the reported
// |A-flat| is a true minimum over the (b, greedy) strategy space. The
// theorems bound |A-flat| by c*f(p,m) with unspecified constants, which is
// vacuous at desk scale, so searches take an explicit removal budget and
// report the achieved size instead of asserting the paper bound.

/// Dilation b and exceptional sub-multiset A-flat with
/// sum of b.(A \ A-flat), read as integers in [1, p-1], below p.
struct Thm1Witness {
  Residue b;
  ResidueSequence a_flat;
};

/// Same shape with norms: sum of ||a|| over b.(A \ A-flat) below p.
struct Thm2Witness {
  Residue b;
  ResidueSequence a_flat;
};

/// Linear transform (b, c), exceptional set, and window [l1, l1+window]
/// whose union of l'-sums (signed representatives, integer arithmetic)
/// fits in an interval of length below p.
struct Thm3Witness {
  Residue b;
  Residue c;
  ResidueSequence a_flat;
  Count l1;
  Count window;
};

/// Minimal-removal witness over all b in [1, p-1]; ties prefer the
/// smallest b. Requires A zero-sum-free (checked; violation is an error,
/// distinct from "absent"). Absent only when every b needs more than
/// `budget` removals.
std::optional<Thm1Witness> thm1_witness(const ResidueSequence& a,
                                        Count budget, int threads = 1);

/// Same search with norms in place of integer values. Requires A
/// incomplete (checked).
std::optional<Thm2Witness> thm2_witness(const ResidueSequence& a,
                                        Count budget, int threads = 1);

/// Heuristic certificate search for the l-incompleteness theorem.
///
/// For each b (ascending), the translation c is chosen so the weighted
/// median of b.A maps to 0, with a small local scan around that center;
/// removals follow greedy largest-|signed value| order with bounded
/// backtracking over the top-3 candidates per step; l1 is scanned
/// descending over [max(0, l - 2 f(p,m)), l]. The first valid certificate
/// wins, so the result is deterministic. The window defaults to
/// min(floor((pm)^(3/13)), |A| - l) and is clamped (and the clamp
/// reported via the witness) when removals shrink the sequence.
/// Requires A not l-complete (checked).
std::optional<Thm3Witness> thm3_witness(const ResidueSequence& a, Count l,
                                        std::optional<Count> window,
                                        Count budget, int threads = 1);

/// Recomputes the defining inequality of a witness from scratch; never
/// trusts the searcher. Malformed witnesses (b = 0, A-flat not a
/// sub-multiset, window out of range) are rejected with an exception;
/// a false return means well-formed but invalid.
bool validate(const Thm1Witness& w, const ResidueSequence& a);
bool validate(const Thm2Witness& w, const ResidueSequence& a);
bool validate(const Thm3Witness& w, const ResidueSequence& a);

/// Measurement report for the sharp-error-term theorem on zero-sum-free
/// sets: at the norm-minimizing dilation b, the norm sums over the
/// low half (a < p/2) and high half (a > p/2) of b.A. No assertion is
/// made; the O(sqrt p) constant is unspecified.
struct ZeroFree2Report {
  Residue b;
  std::int64_t low_half_norm_sum;
  std::int64_t high_half_norm_sum;
};

ZeroFree2Report zerofree2_report(const ResidueSequence& a);

}  // namespace zpsum
