#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "zpsum/residue.hpp"

namespace zpsum {

/// Word-packed membership mask over Z_p. Set algebra works on whole
/// 64-bit words with a masked tail.
class SumsetMask {
 public:
  explicit SumsetMask(PrimeModulus p);

  const PrimeModulus& modulus() const noexcept { return p_; }

  bool test(Residue r) const noexcept {
    return (words_[static_cast<std::size_t>(r >> 6)] >> (r & 63)) & 1u;
  }
  void set(Residue r) noexcept {
    words_[static_cast<std::size_t>(r >> 6)] |= std::uint64_t{1} << (r & 63);
  }

  std::int64_t popcount() const noexcept;
  bool any() const noexcept;
  bool full() const noexcept { return popcount() == p_.value(); }

  SumsetMask& operator|=(const SumsetMask& o);
  SumsetMask& operator&=(const SumsetMask& o);

  /// { (x + s) mod p : x in mask }.
  SumsetMask rotated(std::int64_t s) const;

  /// { (b * x) mod p : x in mask }; b must be non-zero.
  SumsetMask dilated(Residue b) const;

  /// Sorted member list.
  std::vector<Residue> residues() const;

  static SumsetMask from_residues(PrimeModulus p,
                                  std::span<const Residue> rs);

  friend bool operator==(const SumsetMask&, const SumsetMask&) = default;

 private:
  PrimeModulus p_;
  std::vector<std::uint64_t> words_;
};

/// Sigma(A): all sums of nonempty sub-multisets of A, mod p.
///
/// Bounded-knapsack reachability: each distinct element contributes
/// O(log m_a) grouped shifts via binary splitting of its multiplicity.
/// Rejects the empty sequence.
SumsetMask sigma(const ResidueSequence& a);

/// Sigma_l(A): sums of sub-multisets of cardinality exactly l, 0 <= l <= |A|.
SumsetMask sigma_l(const ResidueSequence& a, Count l);

/// Union of Sigma_l over the closed window [l_lo, l_hi]; one DP table.
SumsetMask sigma_l_window(const ResidueSequence& a, Count l_lo, Count l_hi);

struct IntRange {
  std::int64_t lo;
  std::int64_t hi;
  std::int64_t length() const noexcept { return hi - lo; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// Exact min/max of l-element sums of a multiset of integers (no modular
/// reduction): lo is the sum of the l smallest values, hi of the l largest.
IntRange lsum_range_int(std::span<const std::int64_t> values, Count l);

struct APWitness {
  Residue start;
  Residue diff;
  std::int64_t length;
  friend bool operator==(const APWitness&, const APWitness&) = default;
};

/// A maximum-length arithmetic progression contained in the mask, found by
/// scanning all differences d in [1, p-1]. Ties are broken by smallest
/// difference, then smallest start, so reports are deterministic.
/// Rejects the empty mask.
APWitness longest_ap(const SumsetMask& mask);

/// True iff X is a K-net: every residue n has some x in X with
/// (n - x) mod p in [0, K]. Equivalently the largest cyclic gap between
/// consecutive members is at most K+1. Rejects empty X.
bool knet_check(const SumsetMask& x, std::int64_t k);
bool knet_check(PrimeModulus p, std::span<const Residue> x, std::int64_t k);

}  // namespace zpsum
