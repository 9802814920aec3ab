#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace zpsum {

using Residue = std::int64_t;
using Count = std::int64_t;

/// Deterministic primality test (trial division; desk-scale moduli).
bool is_prime(std::int64_t n) noexcept;

/// A prime modulus p >= 2, validated at construction.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::int64_t p);

  std::int64_t value() const noexcept { return p_; }

  /// Reduce any integer (negatives included) into [0, p).
  Residue reduce(std::int64_t x) const noexcept {
    std::int64_t r = x % p_;
    return r < 0 ? r + p_ : r;
  }

  /// Cyclic distance from x to 0: min(x, p - x). Requires 0 <= x < p.
  std::int64_t norm(Residue x) const;

  /// The unique representative of x in [-(p-1)/2, (p-1)/2].
  std::int64_t signed_rep(Residue x) const;

  /// (a * b) mod p without overflow.
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(
        (static_cast<__int128>(a) * b) % p_);
  }

  /// Multiplicative inverse of b != 0.
  Residue inverse(Residue b) const;

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  std::int64_t p_;
};

/// f(p, m) = floor((p*m)^(6/13) * log2(p)^2).
///
/// Evaluated in floating point with an interval guard: the value is
/// recomputed with relative bounds 1 +/- 1e-12 and, if the floor is
/// ambiguous at the boundary, the smaller candidate is returned.
/// The log base is 2 (the exponent constant is only used for reporting,
/// so the base choice is a calibration, not a correctness issue).
std::int64_t f_control(const PrimeModulus& p, std::int64_t m);

/// A finite multiset of residues mod p, stored as sorted
/// (residue, multiplicity) pairs. Immutable after construction.
///
/// Invariants: every residue lies in [0, p), every multiplicity is >= 1,
/// and the maximum multiplicity m(A) is at most p (violations are
/// construction errors, never silently clamped). The empty sequence is
/// representable; operations state their own emptiness preconditions.
class ResidueSequence {
 public:
  explicit ResidueSequence(PrimeModulus p) : p_(p) {}

  /// Elements may be arbitrary integers; they are reduced mod p.
  ResidueSequence(PrimeModulus p, std::span<const std::int64_t> elements);
  ResidueSequence(PrimeModulus p, std::initializer_list<std::int64_t> elements)
      : ResidueSequence(p, std::span<const std::int64_t>(elements.begin(),
                                                         elements.size())) {}

  static ResidueSequence from_pairs(
      PrimeModulus p, std::span<const std::pair<Residue, Count>> pairs);

  const PrimeModulus& modulus() const noexcept { return p_; }
  bool empty() const noexcept { return entries_.empty(); }

  /// |A|: total number of elements counted with multiplicity.
  Count cardinality() const noexcept;

  /// m(A): the largest multiplicity (0 for the empty sequence).
  Count max_multiplicity() const noexcept;

  Count multiplicity(Residue r) const noexcept;
  bool contains(Residue r) const noexcept { return multiplicity(r) > 0; }

  /// True when every distinct residue occurs exactly once.
  bool is_set() const noexcept { return max_multiplicity() <= 1; }

  /// Sorted (residue, multiplicity) pairs.
  const std::vector<std::pair<Residue, Count>>& entries() const noexcept {
    return entries_;
  }

  /// All elements expanded with multiplicity, ascending.
  std::vector<Residue> flatten() const;

  /// Signed representatives of all elements, ascending, with multiplicity.
  std::vector<std::int64_t> signed_values() const;

  /// Sum of the elements read as integers in [0, p).
  std::int64_t element_sum() const noexcept;

  /// Sum of the norms of the elements.
  std::int64_t norm_sum() const;

  bool contains_submultiset(const ResidueSequence& sub) const;

  /// A \ sub. Throws if sub is not a sub-multiset of A.
  ResidueSequence remove(const ResidueSequence& sub) const;

  /// A disjoint-union B (multiplicities add).
  ResidueSequence unite(const ResidueSequence& other) const;

  friend bool operator==(const ResidueSequence&, const ResidueSequence&) =
      default;

 private:
  void canonicalize(std::vector<std::pair<Residue, Count>> raw);

  PrimeModulus p_;
  std::vector<std::pair<Residue, Count>> entries_;
};

/// b . A; rejects b == 0 (dilation is by a non-zero residue).
ResidueSequence dilate(const ResidueSequence& a, Residue b);

/// A + c: every element shifted by c mod p.
ResidueSequence translate(const ResidueSequence& a, Residue c);

/// True iff the parts form an exact decomposition of a: for every residue,
/// the multiplicities of the parts add up to the multiplicity in a.
/// Throws on modulus mismatch.
bool decompose_check(const ResidueSequence& a,
                     std::span<const ResidueSequence> parts);

}  // namespace zpsum
