#include "zpsum/extremal.hpp"

#include <algorithm>
#include <stdexcept>

#include "zpsum/classify.hpp"
#include "zpsum/enumerate.hpp"
#include "zpsum/sumset.hpp"

namespace zpsum {

namespace {

void check_m(const PrimeModulus& p, Count m) {
  if (m < 1 || m > p.value()) {
    throw std::invalid_argument("extremal: require 1 <= m <= p");
  }
}

ResidueSequence symmetric_family(const PrimeModulus& p, std::int64_t n,
                                 Count m, Count k) {
  std::vector<std::pair<Residue, Count>> pairs;
  pairs.emplace_back(0, m);
  for (std::int64_t i = 1; i < n; ++i) {
    pairs.emplace_back(p.reduce(i), m);
    pairs.emplace_back(p.reduce(-i), m);
  }
  if (n >= 1 && k >= 1) {
    pairs.emplace_back(p.reduce(n), k);
    pairs.emplace_back(p.reduce(-n), k);
  }
  return ResidueSequence::from_pairs(p, pairs);
}

}  // namespace

std::int64_t n_of_p(const PrimeModulus& p) {
  std::int64_t n = 1;
  while ((n + 1) * n / 2 < p.value()) ++n;
  return n;
}

ExtremalSpec build_A1(PrimeModulus p, Count m) {
  check_m(p, m);
  std::int64_t best_n = 1;
  Count best_k = 1;
  Count best_card = -1;
  for (std::int64_t n = 1;; ++n) {
    const std::int64_t body = m * n * (n - 1) / 2;
    if (body + n > p.value() - 1) break;  // even k = 1 no longer fits
    for (Count k = 1; k <= m; ++k) {
      if (body + k * n > p.value() - 1) break;
      const Count card = m * (n - 1) + k;
      if (card > best_card) {
        best_card = card;
        best_n = n;
        best_k = k;
      }
    }
  }
  std::vector<std::pair<Residue, Count>> pairs;
  for (std::int64_t i = 1; i < best_n; ++i) pairs.emplace_back(i, m);
  pairs.emplace_back(best_n, best_k);
  ResidueSequence seq = ResidueSequence::from_pairs(p, pairs);
  if (!is_zero_sum_free(seq)) {
    throw std::logic_error("build_A1: oracle rejected the family");
  }
  return {Family::A1, p.value(), m, best_n, best_k, std::nullopt,
          std::move(seq)};
}

ExtremalSpec build_A2(PrimeModulus p, Count m) {
  check_m(p, m);
  std::int64_t best_n = 0;
  Count best_k = 0;
  Count best_card = -1;
  for (std::int64_t n = 1; 2 * n <= p.value() - 1; ++n) {
    const std::int64_t body = m * n * (n - 1);  // 2m(1+...+(n-1))
    if (body + 2 * n > p.value() - 2) break;
    for (Count k = 1; k <= m; ++k) {
      if (body + 2 * k * n > p.value() - 2) break;
      const Count card = (2 * n - 1) * m + 2 * k;
      if (card > best_card || (card == best_card && n > best_n)) {
        best_card = card;
        best_n = n;
        best_k = k;
      }
    }
  }
  if (best_card < 0) {
    // No (n, k) with k >= 1 fits; fall back to zeros only.
    ResidueSequence seq =
        ResidueSequence::from_pairs(p, {{std::pair<Residue, Count>{0, m}}});
    if (is_complete(seq)) {
      throw std::logic_error("build_A2: degenerate family is complete");
    }
    return {Family::A2, p.value(), m, 0, 0, std::nullopt, std::move(seq),
            true};
  }
  ResidueSequence seq = symmetric_family(p, best_n, m, best_k);
  if (is_complete(seq)) {
    throw std::logic_error("build_A2: oracle rejected the family");
  }
  return {Family::A2, p.value(), m, best_n, best_k, std::nullopt,
          std::move(seq)};
}

std::optional<ExtremalSpec> build_A3(PrimeModulus p, Count m, Count l) {
  check_m(p, m);
  if (l < 1) throw std::invalid_argument("build_A3: require l >= 1");
  std::optional<ExtremalSpec> best;
  Count best_card = -1;
  for (std::int64_t n = 1; 2 * n <= p.value() - 1; ++n) {
    bool n_feasible = false;
    for (Count k = 1; k <= m; ++k) {
      ResidueSequence seq = symmetric_family(p, n, m, k);
      const Count card = seq.cardinality();
      if (l > card) {
        n_feasible = true;  // too small for l, but growing n may fix it
        continue;
      }
      const IntRange range = lsum_range_int(seq.signed_values(), l);
      if (range.length() >= p.value()) break;  // larger k only spreads more
      n_feasible = true;
      if (card > best_card) {
        best_card = card;
        best = ExtremalSpec{Family::A3, p.value(), m, n, k, l,
                            std::move(seq)};
      }
    }
    if (!n_feasible) break;
  }
  if (best && is_l_complete(best->sequence, l)) {
    throw std::logic_error("build_A3: oracle rejected the family");
  }
  return best;
}

ZeroFree3Extremal zerofree3_extremal(PrimeModulus p) {
  if (p.value() < 5) {
    throw std::invalid_argument(
        "zerofree3_extremal: the construction needs p >= 5");
  }
  const std::int64_t n = n_of_p(p);
  std::vector<Residue> members{p.reduce(-2), 1};
  for (std::int64_t i = 3; i <= n; ++i) members.push_back(p.reduce(i));
  std::sort(members.begin(), members.end());
  const std::size_t before = members.size();
  members.erase(std::unique(members.begin(), members.end()), members.end());
  const bool collision = members.size() < before;
  const bool special = p.value() == n * (n + 1) / 2 - 1;
  return {std::move(members), n, special, collision};
}

ZeroFree3ScanReport zerofree3_scan(PrimeModulus p,
                                   const EnumerationBudget& budget) {
  const std::int64_t n = n_of_p(p);
  const BigInt predicted = binomial(p.value() - 1, n);
  require_budget(predicted, budget, "zerofree3_scan");
  ZeroFree3ScanReport rep{p.value(), n, predicted, {}};
  for_each_combination(p.value() - 1, n,
                       [&](const std::vector<std::int64_t>& idx) {
                         std::vector<std::int64_t> elems;
                         elems.reserve(idx.size());
                         for (std::int64_t i : idx) elems.push_back(i + 1);
                         ResidueSequence a(
                             p, std::span<const std::int64_t>(elems));
                         if (is_zero_sum_free(a)) {
                           rep.zero_sum_free_sets.push_back(elems);
                         }
                         return true;
                       });
  return rep;
}

std::optional<std::pair<Residue, ResidueSequence>> thm_zerofree1_witness(
    const ResidueSequence& a, Count m, Count budget) {
  const PrimeModulus& p = a.modulus();
  if (a.empty()) {
    throw std::invalid_argument("thm_zerofree1_witness: empty sequence");
  }
  if (a.max_multiplicity() > m) {
    throw std::invalid_argument("thm_zerofree1_witness: m(A) exceeds m");
  }
  if (!is_zero_sum_free(a)) {
    throw std::domain_error("thm_zerofree1_witness: not zero-sum-free");
  }
  const ResidueSequence target = build_A1(p, m).sequence;
  std::optional<std::pair<Residue, ResidueSequence>> best;
  Count best_size = -1;
  for (Residue b = 1; b < p.value(); ++b) {
    // excess of b.A over the A1 multiplicities, pulled back through b
    std::vector<std::pair<Residue, Count>> excess;
    Count total = 0;
    for (const auto& [r, c] : a.entries()) {
      const Residue rb = p.mul(b, r);
      const Count over = c - std::min(c, target.multiplicity(rb));
      if (over > 0) {
        excess.emplace_back(r, over);
        total += over;
      }
    }
    if (best_size < 0 || total < best_size) {
      best_size = total;
      best = {b, ResidueSequence::from_pairs(p, excess)};
      if (total == 0) break;
    }
  }
  if (best_size > budget) return std::nullopt;
  return best;
}

}  // namespace zpsum
