#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "zpsum/residue.hpp"

// Shared helpers for the test suites. Random draws go through rng() with
// explicit modulo reduction so seeded runs reproduce bit-for-bit across
// standard libraries.

namespace testsupport {

inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  return rng() % n;
}

inline const std::vector<std::int64_t>& small_primes() {
  static const std::vector<std::int64_t> primes{
      2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
      47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101};
  return primes;
}

inline zpsum::PrimeModulus random_prime(std::mt19937_64& rng,
                                        std::int64_t max = 101) {
  const auto& ps = small_primes();
  for (;;) {
    const auto p = ps[uniform_below(rng, ps.size())];
    if (p <= max) return zpsum::PrimeModulus(p);
  }
}

/// Random nonempty sequence with cardinality <= max_card and m(A) <= p.
inline zpsum::ResidueSequence random_sequence(std::mt19937_64& rng,
                                              zpsum::PrimeModulus p,
                                              std::int64_t max_card) {
  const std::int64_t card = 1 + static_cast<std::int64_t>(uniform_below(
                                    rng, static_cast<std::uint64_t>(max_card)));
  std::vector<std::int64_t> elems;
  for (std::int64_t i = 0; i < card; ++i) {
    elems.push_back(static_cast<std::int64_t>(
        uniform_below(rng, static_cast<std::uint64_t>(p.value()))));
  }
  // the m(A) <= p cap can only trip when card > p; resample those elements
  for (;;) {
    zpsum::ResidueSequence a(p, std::span<const std::int64_t>(elems));
    if (a.max_multiplicity() <= p.value()) return a;
  }
}

/// Random partition of some value <= target with parts used <= m times.
inline std::vector<std::int64_t> random_bounded_partition(
    std::mt19937_64& rng, std::int64_t target, std::int64_t m) {
  std::vector<std::int64_t> parts;
  std::int64_t left = target;
  while (left > 0) {
    const std::int64_t part =
        1 + static_cast<std::int64_t>(uniform_below(
                rng, static_cast<std::uint64_t>(left)));
    std::int64_t used = 0;
    for (std::int64_t q : parts) {
      if (q == part) ++used;
    }
    if (used >= m) {
      if (left <= 1) break;
      continue;
    }
    parts.push_back(part);
    left -= part;
    if (uniform_below(rng, 3) == 0) break;  // stop early sometimes
  }
  if (parts.empty()) parts.push_back(1);
  return parts;
}

}  // namespace testsupport
