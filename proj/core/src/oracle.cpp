#include "zpsum/oracle.hpp"

#include <stdexcept>

namespace zpsum::oracle {

namespace {

// Recursion over the flattened elements accumulating (sum, picked count);
// visits each of the 2^|A| selections exactly once.
void selections_rec(const std::vector<Residue>& elems, std::size_t i,
                    Residue sum, Count picked, const PrimeModulus& p,
                    std::vector<SumsetMask>& by_count) {
  if (i == elems.size()) {
    by_count[static_cast<std::size_t>(picked)].set(sum);
    return;
  }
  selections_rec(elems, i + 1, sum, picked, p, by_count);
  selections_rec(elems, i + 1, p.reduce(sum + elems[i]), picked + 1, p,
                 by_count);
}

}  // namespace

void all_sums_brute(const ResidueSequence& a, SumsetMask& sig,
                    std::vector<SumsetMask>& by_count) {
  const PrimeModulus& p = a.modulus();
  const std::vector<Residue> elems = a.flatten();
  if (elems.size() > 26) {
    throw std::invalid_argument("all_sums_brute: sequence too long");
  }
  by_count.assign(elems.size() + 1, SumsetMask(p));
  selections_rec(elems, 0, 0, 0, p, by_count);
  sig = SumsetMask(p);
  for (std::size_t c = 1; c < by_count.size(); ++c) sig |= by_count[c];
}

SumsetMask sigma_brute(const ResidueSequence& a) {
  if (a.empty()) throw std::invalid_argument("sigma_brute: empty");
  SumsetMask sig(a.modulus());
  std::vector<SumsetMask> rows;
  all_sums_brute(a, sig, rows);
  return sig;
}

SumsetMask sigma_l_brute(const ResidueSequence& a, Count l) {
  if (l < 0 || l > a.cardinality()) {
    throw std::invalid_argument("sigma_l_brute: l out of range");
  }
  SumsetMask sig(a.modulus());
  std::vector<SumsetMask> rows;
  all_sums_brute(a, sig, rows);
  return rows[static_cast<std::size_t>(l)];
}

namespace {

void partitions_rec(std::int64_t remaining, std::int64_t max_part,
                    std::int64_t m, BigInt& count) {
  if (remaining == 0) {
    ++count;
    return;
  }
  for (std::int64_t part = std::min(remaining, max_part); part >= 1; --part) {
    const std::int64_t max_copies =
        m == 0 ? remaining / part : std::min(m, remaining / part);
    for (std::int64_t c = 1; c <= max_copies; ++c) {
      partitions_rec(remaining - c * part, part - 1, m, count);
    }
  }
}

}  // namespace

BigInt partition_count_enumerated(std::int64_t n, std::int64_t m) {
  if (n < 0) throw std::invalid_argument("partition_count_enumerated: n < 0");
  BigInt count = 0;
  partitions_rec(n, n, m, count);
  return count;
}

BigInt partition_count_odd_parts(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("partition_count_odd_parts: n < 0");
  std::vector<BigInt> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (std::int64_t part = 1; part <= n; part += 2) {
    for (std::int64_t j = part; j <= n; ++j) {
      ways[static_cast<std::size_t>(j)] +=
          ways[static_cast<std::size_t>(j - part)];
    }
  }
  return ways.back();
}

namespace {

void census_rec(const PrimeModulus& p, Count m, Residue from,
                std::vector<std::int64_t>& elems, BruteCensus& acc) {
  if (!elems.empty()) {
    ++acc.total;
    const ResidueSequence a(p, std::span<const std::int64_t>(elems));
    const SumsetMask sig = sigma_brute(a);
    if (!sig.test(0)) ++acc.zero_sum_free;
    if (!sig.full()) ++acc.incomplete;
  }
  for (Residue r = from; r < p.value(); ++r) {
    Count used = 0;
    for (auto it = elems.rbegin(); it != elems.rend() && *it == r; ++it) {
      ++used;
    }
    if (used >= m) continue;
    elems.push_back(r);
    census_rec(p, m, r, elems, acc);
    elems.pop_back();
  }
}

}  // namespace

BruteCensus census_brute(PrimeModulus p, Count m) {
  if (m < 1) throw std::invalid_argument("census_brute: m >= 1");
  BruteCensus acc{0, 0, 0};
  std::vector<std::int64_t> elems;
  census_rec(p, m, 0, elems, acc);
  return acc;
}

bool knet_brute(PrimeModulus p, const std::vector<Residue>& x,
                std::int64_t k) {
  if (x.empty()) throw std::invalid_argument("knet_brute: empty set");
  for (Residue n = 0; n < p.value(); ++n) {
    bool covered = false;
    for (Residue xi : x) {
      if (p.reduce(n - xi) <= k) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace zpsum::oracle
