#include "zpsum/counting.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zpsum/classify.hpp"
#include "zpsum/parallel.hpp"
#include "zpsum/sumset.hpp"

namespace zpsum {

PartitionTable partition_table(std::int64_t n_max, std::int64_t m_bound) {
  if (n_max < 0) throw std::invalid_argument("partition_table: n < 0");
  if (m_bound < 0) throw std::invalid_argument("partition_table: m < 0");
  std::vector<BigInt> ways(static_cast<std::size_t>(n_max) + 1, 0);
  ways[0] = 1;
  for (std::int64_t part = 1; part <= n_max; ++part) {
    if (m_bound == 0) {
      // unbounded: classic ascending update
      for (std::int64_t j = part; j <= n_max; ++j) {
        ways[static_cast<std::size_t>(j)] +=
            ways[static_cast<std::size_t>(j - part)];
      }
    } else {
      // bounded: per-residue-class sliding window of width m_bound+1
      const std::vector<BigInt> old = ways;
      for (std::int64_t r = 0; r < part && r <= n_max; ++r) {
        BigInt window = 0;
        for (std::int64_t j = r; j <= n_max; j += part) {
          window += old[static_cast<std::size_t>(j)];
          const std::int64_t drop = j - (m_bound + 1) * part;
          if (drop >= 0) window -= old[static_cast<std::size_t>(drop)];
          ways[static_cast<std::size_t>(j)] = window;
        }
      }
    }
  }
  return {m_bound, std::move(ways)};
}

BigInt partition_count(std::int64_t n, std::int64_t m_bound) {
  return partition_table(n, m_bound).values.back();
}

double meinardus_exponent(std::int64_t n, std::int64_t m_bound) {
  if (n < 1) throw std::invalid_argument("meinardus_exponent: n < 1");
  const double factor =
      m_bound == 0 ? 1.0
                   : 1.0 - 1.0 / (static_cast<double>(m_bound) + 1.0);
  return std::sqrt(factor * 2.0 / 3.0) * std::numbers::pi *
         std::sqrt(static_cast<double>(n));
}

namespace {

struct CensusCounters {
  BigInt zsf = 0;
  BigInt incomplete = 0;
};

// Extends the running sumset mask by `mult` copies of residue r.
SumsetMask extend_mask(const SumsetMask& mask, Residue r, Count mult,
                       const PrimeModulus& p) {
  SumsetMask out = mask;
  Count left = mult;
  Count group = 1;
  while (left > 0) {
    const Count take = std::min(group, left);
    left -= take;
    group <<= 1;
    const Residue v = p.reduce(r * take);
    out |= out.rotated(v);
    out.set(v);
  }
  return out;
}

void census_rec(const PrimeModulus& p, Count m, Residue r,
                const SumsetMask& mask, bool has_any, CensusCounters& acc) {
  if (has_any && mask.full()) {
    // every extension stays complete: contributes to neither count
    return;
  }
  if (r == p.value()) {
    if (!has_any) return;
    if (!mask.test(0)) ++acc.zsf;
    if (!mask.full()) ++acc.incomplete;
    return;
  }
  census_rec(p, m, r + 1, mask, has_any, acc);
  for (Count c = 1; c <= m; ++c) {
    census_rec(p, m, r + 1, extend_mask(mask, r, c, p), true, acc);
  }
}

}  // namespace

CensusReport census(PrimeModulus p, Count m, const EnumerationBudget& budget,
                    int threads) {
  if (m < 1 || m > p.value()) {
    throw std::invalid_argument("census: require 1 <= m <= p");
  }
  const BigInt predicted = bigint_pow(m + 1, p.value());
  require_budget(predicted, budget, "census");

  // partition the multiset space by the multiplicity of residue 0
  CensusCounters total = indexed_reduce<CensusCounters>(
      m + 1, threads, CensusCounters{},
      [&](std::int64_t m0) {
        CensusCounters acc;
        SumsetMask mask(p);
        bool has_any = false;
        if (m0 > 0) {
          mask.set(0);
          has_any = true;
        }
        census_rec(p, m, 1, mask, has_any, acc);
        return acc;
      },
      [](CensusCounters a, CensusCounters b) {
        a.zsf += b.zsf;
        a.incomplete += b.incomplete;
        return a;
      });

  CensusReport rep{p.value(),        m, total.zsf, total.incomplete, 0.0, 0.0,
                   predicted - 1};
  const double sqrt_p = std::sqrt(static_cast<double>(p.value()));
  if (total.zsf > 0) {
    rep.log_ratio_zsf =
        std::log(total.zsf.convert_to<double>()) / sqrt_p;
  }
  if (total.incomplete > 0) {
    rep.log_ratio_inc =
        std::log(total.incomplete.convert_to<double>()) / sqrt_p;
  }
  return rep;
}

ResidueSequence zsf_from_partition(std::span<const std::int64_t> parts,
                                   PrimeModulus p) {
  std::int64_t sum = 0;
  for (std::int64_t x : parts) {
    if (x < 1 || x > p.value() - 1) {
      throw std::invalid_argument("zsf_from_partition: part out of range");
    }
    sum += x;
  }
  if (parts.empty()) {
    throw std::invalid_argument("zsf_from_partition: empty partition");
  }
  if (sum > p.value() - 1) {
    throw std::invalid_argument("zsf_from_partition: parts sum to >= p");
  }
  return ResidueSequence(p, parts);
}

ResidueSequence incomplete_from_two_partitions(
    std::span<const std::int64_t> parts_pos,
    std::span<const std::int64_t> parts_neg, PrimeModulus p) {
  if (parts_pos.empty() && parts_neg.empty()) {
    throw std::invalid_argument("incomplete_from_two_partitions: empty");
  }
  std::int64_t sum = 0;
  std::vector<std::int64_t> elems;
  for (std::int64_t x : parts_pos) {
    if (x < 1 || x > p.value() - 1) {
      throw std::invalid_argument(
          "incomplete_from_two_partitions: part out of range");
    }
    sum += x;
    elems.push_back(x);
  }
  for (std::int64_t x : parts_neg) {
    if (x < 1 || x > p.value() - 1) {
      throw std::invalid_argument(
          "incomplete_from_two_partitions: part out of range");
    }
    sum += x;
    elems.push_back(-x);
  }
  if (sum > p.value() - 2) {
    throw std::invalid_argument(
        "incomplete_from_two_partitions: norm-sum bound violated");
  }
  ResidueSequence seq(p, std::span<const std::int64_t>(elems));
  if (is_complete(seq)) {
    throw std::logic_error(
        "incomplete_from_two_partitions: oracle rejected the output");
  }
  return seq;
}

}  // namespace zpsum
