#include "zpsum/egz.hpp"

#include <algorithm>
#include <stdexcept>

#include "zpsum/classify.hpp"
#include "zpsum/enumerate.hpp"
#include "zpsum/parallel.hpp"
#include "zpsum/sumset.hpp"

namespace zpsum {

namespace {

// True iff the multiset given by (m_0, mults over residues 1..p-1) has a
// p-element sub-multiset summing to 0. Multiplicity >= p short-circuits:
// p copies of one element sum to 0 mod p.
bool has_zero_p_sum(const PrimeModulus& p, Count m0,
                    const std::vector<std::int64_t>& rest) {
  Count max_mult = m0;
  for (Count c : rest) max_mult = std::max(max_mult, c);
  if (max_mult >= p.value()) return true;
  std::vector<std::pair<Residue, Count>> pairs;
  if (m0 > 0) pairs.emplace_back(0, m0);
  for (std::size_t i = 0; i < rest.size(); ++i) {
    if (rest[i] > 0) pairs.emplace_back(static_cast<Residue>(i) + 1, rest[i]);
  }
  const ResidueSequence a = ResidueSequence::from_pairs(p, pairs);
  return sigma_l(a, p.value()).test(0);
}

ResidueSequence sequence_of(const PrimeModulus& p, Count m0,
                            const std::vector<std::int64_t>& rest) {
  std::vector<std::pair<Residue, Count>> pairs;
  if (m0 > 0) pairs.emplace_back(0, m0);
  for (std::size_t i = 0; i < rest.size(); ++i) {
    if (rest[i] > 0) pairs.emplace_back(static_cast<Residue>(i) + 1, rest[i]);
  }
  return ResidueSequence::from_pairs(p, pairs);
}

struct EnumerationPart {
  BigInt visited = 0;
  std::vector<ResidueSequence> found;
};

// Enumerates all multisets of the given cardinality whose multiplicity of
// residue 0 equals m0, collecting those that are p-zero-sum-free.
EnumerationPart enumerate_part(const PrimeModulus& p, Count size, Count m0) {
  EnumerationPart part;
  for_each_multiplicity_vector(
      p.value() - 1, size - m0, -1, [&](const std::vector<std::int64_t>& v) {
        ++part.visited;
        if (!has_zero_p_sum(p, m0, v)) {
          part.found.push_back(sequence_of(p, m0, v));
        }
      });
  return part;
}

EnumerationPart enumerate_all(const PrimeModulus& p, Count size, int threads) {
  return indexed_reduce<EnumerationPart>(
      size + 1, threads, EnumerationPart{},
      [&](std::int64_t m0) { return enumerate_part(p, size, m0); },
      [](EnumerationPart acc, EnumerationPart cur) {
        acc.visited += cur.visited;
        for (auto& seq : cur.found) acc.found.push_back(std::move(seq));
        return acc;
      });
}

}  // namespace

EGZReport egz_verify(PrimeModulus p, const EnumerationBudget& budget,
                     int threads) {
  const Count size = 2 * p.value() - 1;
  const BigInt expected = binomial(3 * p.value() - 2, p.value() - 1);
  require_budget(expected, budget, "egz_verify");
  EnumerationPart all = enumerate_all(p, size, threads);
  if (all.visited != expected) {
    throw std::logic_error("egz_verify: enumeration does not cover C(3p-2,p-1)");
  }
  // oracle re-check of anything claimed to be a counterexample
  for (const ResidueSequence& a : all.found) {
    if (!is_l_zero_sum_free(a, p.value())) {
      throw std::logic_error("egz_verify: counterexample failed re-validation");
    }
  }
  return {p.value(), all.visited, std::move(all.found)};
}

EGZExtremalReport egz_extremal_classify(PrimeModulus p,
                                        const EnumerationBudget& budget,
                                        int threads) {
  const Count size = 2 * p.value() - 2;
  const BigInt expected = binomial(3 * p.value() - 3, p.value() - 1);
  require_budget(expected, budget, "egz_extremal_classify");
  EnumerationPart all = enumerate_all(p, size, threads);
  if (all.visited != expected) {
    throw std::logic_error(
        "egz_extremal_classify: enumeration does not cover the closed form");
  }
  EGZExtremalReport rep{p.value(), all.visited, {}, {}};
  for (ResidueSequence& a : all.found) {
    if (!is_l_zero_sum_free(a, p.value())) {
      throw std::logic_error(
          "egz_extremal_classify: result failed re-validation");
    }
    rep.extremal.push_back(std::move(a));
  }
  for (std::size_t i = 0; i < rep.extremal.size(); ++i) {
    const auto& entries = rep.extremal[i].entries();
    const bool two_value = entries.size() == 2 &&
                           entries[0].second == p.value() - 1 &&
                           entries[1].second == p.value() - 1;
    if (!two_value) rep.shape_deviations.push_back(i);
  }
  return rep;
}

namespace {

std::optional<ResidueSequence> checked_answer(
    const ResidueSequence& a, Count zeros, Count ones,
    const std::vector<std::int64_t>& signed_extras) {
  const PrimeModulus& p = a.modulus();
  if (zeros < 0 || ones < 0) return std::nullopt;
  std::vector<std::pair<Residue, Count>> pairs;
  if (zeros > 0) pairs.emplace_back(0, zeros);
  if (ones > 0) pairs.emplace_back(1, ones);
  for (std::int64_t v : signed_extras) pairs.emplace_back(p.reduce(v), 1);
  ResidueSequence sub = ResidueSequence::from_pairs(p, pairs);
  if (sub.cardinality() != p.value()) return std::nullopt;
  if (!a.contains_submultiset(sub)) return std::nullopt;
  std::int64_t sum = 0;
  for (const auto& [r, c] : sub.entries()) sum += r * c;
  if (p.reduce(sum) != 0) return std::nullopt;
  return sub;
}

}  // namespace

std::optional<ResidueSequence> greedy_zero_p_subsequence(
    const ResidueSequence& a) {
  const PrimeModulus& p = a.modulus();
  const std::int64_t pv = p.value();
  if (a.cardinality() != 2 * pv - 2) {
    throw std::invalid_argument(
        "greedy_zero_p_subsequence: cardinality must be 2p-2");
  }
  const Count m0 = a.multiplicity(0);
  const Count m1 = a.multiplicity(1);
  const Count k1 = pv - m0;
  const Count k2 = pv - m1;
  if (k1 < 1 || k2 < 1) {
    throw std::invalid_argument(
        "greedy_zero_p_subsequence: shape requires k1, k2 >= 1");
  }
  std::vector<std::int64_t> extras;
  for (const auto& [r, c] : a.entries()) {
    if (r == 0 || r == 1) continue;
    for (Count j = 0; j < c; ++j) extras.push_back(p.signed_rep(r));
  }
  const Count l = static_cast<Count>(extras.size());
  if (l == 0) return std::nullopt;  // A = {0^[p-1], 1^[p-1]} is extremal

  // Case 1: some |a_i| >= p/6. Candidates smallest |value| first.
  std::vector<std::int64_t> big;
  for (std::int64_t v : extras) {
    if (6 * std::llabs(v) >= pv) big.push_back(v);
  }
  std::sort(big.begin(), big.end(), [](std::int64_t x, std::int64_t y) {
    const auto ax = std::llabs(x), ay = std::llabs(y);
    if (ax != ay) return ax < ay;
    return x > y;  // positive branch first
  });
  for (std::int64_t v : big) {
    if (v > 0) {
      if (auto hit = checked_answer(a, v - 1, pv - v, {v})) return hit;
    } else {
      const std::int64_t av = -v;
      if (auto hit = checked_answer(a, pv - av - 1, av, {v})) return hit;
    }
  }

  std::vector<std::int64_t> negatives, positives;
  for (std::int64_t v : extras) {
    (v < 0 ? negatives : positives).push_back(v);
  }
  std::sort(negatives.begin(), negatives.end(),
            [](std::int64_t x, std::int64_t y) { return -x < -y; });
  std::sort(positives.begin(), positives.end());

  // Case 2: enough negatives; greedy smallest-|value| prefix until
  // l1 + |sum| >= k1.
  if (static_cast<Count>(negatives.size()) >= std::max<Count>(1, k1 - 1)) {
    std::int64_t abs_sum = 0;
    std::vector<std::int64_t> picked;
    for (std::int64_t v : negatives) {
      picked.push_back(v);
      abs_sum += -v;
      const Count l1 = static_cast<Count>(picked.size());
      if (l1 + abs_sum >= k1) {
        if (auto hit =
                checked_answer(a, pv - l1 - abs_sum, abs_sum, picked)) {
          return hit;
        }
        break;
      }
    }
  }

  // Case 3: enough positives; smallest-first prefix with sum >= k2.
  if (static_cast<Count>(positives.size()) >= std::min<Count>(l, k2)) {
    std::int64_t sum = 0;
    std::vector<std::int64_t> picked;
    for (std::int64_t v : positives) {
      picked.push_back(v);
      sum += v;
      if (sum >= k2) {
        const Count l2 = static_cast<Count>(picked.size());
        if (auto hit = checked_answer(a, sum - l2, pv - sum, picked)) {
          return hit;
        }
        break;
      }
    }
  }

  return std::nullopt;
}

Thm62Report thm62_structure(const ResidueSequence& a) {
  const PrimeModulus& p = a.modulus();
  const std::int64_t pv = p.value();
  if (a.cardinality() < pv || a.cardinality() > 2 * pv - 2) {
    throw std::invalid_argument("thm62_structure: require p <= |A| <= 2p-2");
  }
  if (!is_l_zero_sum_free(a, pv)) {
    throw std::domain_error("thm62_structure: not p-zero-sum-free");
  }
  // top two multiplicities; ties prefer smaller residues
  std::vector<std::pair<Residue, Count>> entries = a.entries();
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& x, const auto& y) {
                     return x.second > y.second;
                   });
  Thm62Report rep{};
  rep.a = entries[0].first;
  rep.m_a = entries[0].second;
  if (entries.size() > 1) {
    rep.b = entries[1].first;
    rep.m_b = entries[1].second;
  } else {
    rep.b = p.reduce(entries[0].first + 1);
    rep.m_b = 0;
  }
  rep.slack = a.cardinality() - pv;
  rep.f_pp = f_control(p, pv);
  return rep;
}

}  // namespace zpsum
