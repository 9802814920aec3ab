#include "zpsum/witness.hpp"

#include <algorithm>
#include <cmath>

#include "zpsum/classify.hpp"
#include "zpsum/parallel.hpp"

namespace zpsum {

namespace {

// One (value, origin) pair of the dilated sequence; `value` is the integer
// the inequality sums (the residue itself for theorem 1, its norm for
// theorem 2) and `origin` the element of A it came from.
struct Summand {
  std::int64_t value;
  Residue origin;
};

struct GreedyResult {
  Count removals;
  ResidueSequence a_flat;
};

// Remove the largest values until the total drops below p. Exact for
// minimizing the removal count; ties between equal values prefer the
// smaller origin so A-flat is lexicographically smallest.
GreedyResult greedy_trim(const PrimeModulus& p, std::vector<Summand> vals) {
  std::sort(vals.begin(), vals.end(), [](const Summand& x, const Summand& y) {
    if (x.value != y.value) return x.value > y.value;
    return x.origin < y.origin;
  });
  std::int64_t total = 0;
  for (const Summand& s : vals) total += s.value;
  std::vector<std::pair<Residue, Count>> removed;
  std::size_t i = 0;
  while (total >= p.value() && i < vals.size()) {
    total -= vals[i].value;
    removed.emplace_back(vals[i].origin, 1);
    ++i;
  }
  return {static_cast<Count>(i),
          ResidueSequence::from_pairs(p, removed)};
}

template <typename ValueFn>
std::optional<std::pair<Residue, GreedyResult>> best_dilation(
    const ResidueSequence& a, Count budget, int threads, ValueFn value_of) {
  const PrimeModulus& p = a.modulus();
  auto trial = [&](Residue b) -> std::pair<Residue, GreedyResult> {
    std::vector<Summand> vals;
    vals.reserve(static_cast<std::size_t>(a.cardinality()));
    for (const auto& [r, c] : a.entries()) {
      const Residue rb = p.mul(b, r);
      for (Count j = 0; j < c; ++j) vals.push_back({value_of(rb), r});
    }
    return {b, greedy_trim(p, std::move(vals))};
  };

  if (threads <= 1) {
    std::optional<std::pair<Residue, GreedyResult>> best;
    for (Residue b = 1; b < p.value(); ++b) {
      auto cur = trial(b);
      if (!best || cur.second.removals < best->second.removals) {
        best = std::move(cur);
        if (best->second.removals == 0) break;  // global minimum
      }
    }
    if (best && best->second.removals <= budget) return best;
    return std::nullopt;
  }

  using Best = std::optional<std::pair<Residue, GreedyResult>>;
  Best best = indexed_reduce<Best>(
      p.value() - 1, threads, std::nullopt,
      [&](std::int64_t i) -> Best { return trial(i + 1); },
      [](Best acc, Best cur) {
        if (!acc || (cur && cur->second.removals < acc->second.removals)) {
          return cur;
        }
        return acc;
      });
  if (best && best->second.removals <= budget) return best;
  return std::nullopt;
}

}  // namespace

std::optional<Thm1Witness> thm1_witness(const ResidueSequence& a,
                                        Count budget, int threads) {
  if (a.empty()) throw std::invalid_argument("thm1_witness: empty sequence");
  if (!is_zero_sum_free(a)) {
    throw std::domain_error("thm1_witness: sequence is not zero-sum-free");
  }
  auto best = best_dilation(a, budget, threads,
                            [](Residue rb) { return rb; });
  if (!best) return std::nullopt;
  return Thm1Witness{best->first, std::move(best->second.a_flat)};
}

std::optional<Thm2Witness> thm2_witness(const ResidueSequence& a,
                                        Count budget, int threads) {
  if (a.empty()) throw std::invalid_argument("thm2_witness: empty sequence");
  if (is_complete(a)) {
    throw std::domain_error("thm2_witness: sequence is complete");
  }
  const PrimeModulus& p = a.modulus();
  auto best = best_dilation(a, budget, threads,
                            [&p](Residue rb) { return p.norm(rb); });
  if (!best) return std::nullopt;
  return Thm2Witness{best->first, std::move(best->second.a_flat)};
}

namespace {

// Interval check for theorem 3: the union of l'-sums over
// [l1, l1 + window] of the signed values must fit in an integer interval
// of length below p. Prefix sums of the sorted values give every l'-range
// in O(1).
bool window_fits(const std::vector<std::int64_t>& sorted_vals,
                 const std::vector<std::int64_t>& prefix, Count l1,
                 Count window, std::int64_t p) {
  const Count q = static_cast<Count>(sorted_vals.size());
  if (l1 < 0 || l1 + window > q) return false;
  std::int64_t lo = 0, hi = 0;
  bool first = true;
  for (Count lp = l1; lp <= l1 + window; ++lp) {
    const std::int64_t sum_lo = prefix[static_cast<std::size_t>(lp)];
    const std::int64_t sum_hi = prefix[static_cast<std::size_t>(q)] -
                                prefix[static_cast<std::size_t>(q - lp)];
    if (first) {
      lo = sum_lo;
      hi = sum_hi;
      first = false;
    } else {
      lo = std::min(lo, sum_lo);
      hi = std::max(hi, sum_hi);
    }
  }
  return hi - lo < p;
}

struct Thm3Search {
  const PrimeModulus& p;
  Count l;
  Count requested_window;
  Count l1_lo;
  Count budget;

  // Searches for (l1, window') making the window condition hold for the
  // multiset `vals` (signed values with origins). l1 runs descending from
  // l; the window is clamped to the remaining cardinality.
  std::optional<std::pair<Count, Count>> find_l1(
      const std::vector<Summand>& vals) const {
    std::vector<std::int64_t> sorted;
    sorted.reserve(vals.size());
    for (const Summand& s : vals) sorted.push_back(s.value);
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::int64_t> prefix(sorted.size() + 1, 0);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      prefix[i + 1] = prefix[i] + sorted[i];
    }
    const Count q = static_cast<Count>(sorted.size());
    for (Count l1 = std::min(l, q); l1 >= l1_lo; --l1) {
      const Count w = std::min(requested_window, q - l1);
      if (window_fits(sorted, prefix, l1, w, p.value())) return {{l1, w}};
      if (l1 == 0) break;
    }
    return std::nullopt;
  }

  // Greedy removal of the largest |signed value| with bounded backtracking
  // over the top-3 distinct candidates per step; depth-first, first
  // success wins.
  std::optional<std::pair<std::vector<Summand>, std::optional<std::pair<Count, Count>>>>
  search_removals(std::vector<Summand> vals, Count depth) const {
    if (auto hit = find_l1(vals)) {
      return {{std::move(vals), hit}};
    }
    if (depth >= budget || vals.empty()) return std::nullopt;
    std::vector<Summand> order = vals;
    std::sort(order.begin(), order.end(),
              [](const Summand& x, const Summand& y) {
                const auto ax = std::llabs(x.value), ay = std::llabs(y.value);
                if (ax != ay) return ax > ay;
                return x.origin < y.origin;
              });
    std::int64_t tried = 0;
    std::int64_t last_value = 0;
    for (const Summand& cand : order) {
      if (tried > 0 && cand.value == last_value) continue;  // distinct values
      if (tried == 3) break;
      ++tried;
      last_value = cand.value;
      std::vector<Summand> rest;
      rest.reserve(vals.size() - 1);
      bool skipped = false;
      for (const Summand& s : vals) {
        if (!skipped && s.value == cand.value && s.origin == cand.origin) {
          skipped = true;
          continue;
        }
        rest.push_back(s);
      }
      if (auto hit = search_removals(std::move(rest), depth + 1)) return hit;
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<Thm3Witness> thm3_witness(const ResidueSequence& a, Count l,
                                        std::optional<Count> window,
                                        Count budget, int threads) {
  if (a.empty()) throw std::invalid_argument("thm3_witness: empty sequence");
  if (l < 1 || l > a.cardinality()) {
    throw std::invalid_argument("thm3_witness: l out of range");
  }
  if (is_l_complete(a, l)) {
    throw std::domain_error("thm3_witness: sequence is l-complete");
  }
  const PrimeModulus& p = a.modulus();
  const Count m = std::max<Count>(1, a.max_multiplicity());
  const Count default_window = std::min<Count>(
      static_cast<Count>(std::pow(double(p.value()) * double(m), 3.0 / 13.0)),
      a.cardinality() - l);
  const Count requested_window =
      window ? std::min(*window, a.cardinality() - l) : default_window;
  if (requested_window < 0) {
    throw std::invalid_argument("thm3_witness: window must be >= 0");
  }
  const Count f = f_control(p, m);
  const Thm3Search search{p, l, requested_window, std::max<Count>(0, l - 2 * f),
                          budget};

  auto try_b = [&](Residue b) -> std::optional<Thm3Witness> {
    // signed values of b.A, with origins
    std::vector<Residue> dilated;
    std::vector<Summand> base;
    base.reserve(static_cast<std::size_t>(a.cardinality()));
    for (const auto& [r, c] : a.entries()) {
      const Residue rb = p.mul(b, r);
      for (Count j = 0; j < c; ++j) {
        dilated.push_back(rb);
        base.push_back({0, r});  // value filled in per c below
      }
    }
    // center: the weighted median of b.A maps to 0
    std::vector<Residue> sorted_dilated = dilated;
    std::sort(sorted_dilated.begin(), sorted_dilated.end());
    const Residue median =
        sorted_dilated[(sorted_dilated.size() - 1) / 2];
    const Residue c0 = p.reduce(-median);
    const Count n = a.cardinality();
    const Count radius = ((p.value() - 1) / 2) * requested_window / n;

    std::vector<Residue> candidates{c0};
    for (Count d = 1; d <= radius; ++d) {
      candidates.push_back(p.reduce(c0 + d));
      candidates.push_back(p.reduce(c0 - d));
    }
    for (Residue c : candidates) {
      std::vector<Summand> vals = base;
      for (std::size_t i = 0; i < dilated.size(); ++i) {
        vals[i].value = p.signed_rep(p.reduce(dilated[i] + c));
      }
      if (auto hit = search.search_removals(std::move(vals), 0)) {
        // recover A-flat: the difference between A and the survivors
        std::vector<std::pair<Residue, Count>> kept;
        for (const Summand& s : hit->first) kept.emplace_back(s.origin, 1);
        ResidueSequence survivors =
            ResidueSequence::from_pairs(p, kept);
        ResidueSequence a_flat = a.remove(survivors);
        auto [l1, w] = *hit->second;
        Thm3Witness witness{b, c, std::move(a_flat), l1, w};
        if (validate(witness, a)) return witness;
      }
    }
    return std::nullopt;
  };

  if (threads <= 1) {
    for (Residue b = 1; b < p.value(); ++b) {
      if (auto w = try_b(b)) return w;
    }
    return std::nullopt;
  }
  using Hit = std::optional<Thm3Witness>;
  return indexed_reduce<Hit>(
      p.value() - 1, threads, std::nullopt,
      [&](std::int64_t i) { return try_b(i + 1); },
      [](Hit acc, Hit cur) { return acc ? acc : cur; });
}

bool validate(const Thm1Witness& w, const ResidueSequence& a) {
  const PrimeModulus& p = a.modulus();
  if (p.reduce(w.b) == 0) {
    throw std::invalid_argument("validate: b must be non-zero");
  }
  if (!a.contains_submultiset(w.a_flat)) {
    throw std::invalid_argument("validate: A-flat is not a sub-multiset");
  }
  const ResidueSequence kept = dilate(a.remove(w.a_flat), w.b);
  return kept.element_sum() < p.value();
}

bool validate(const Thm2Witness& w, const ResidueSequence& a) {
  const PrimeModulus& p = a.modulus();
  if (p.reduce(w.b) == 0) {
    throw std::invalid_argument("validate: b must be non-zero");
  }
  if (!a.contains_submultiset(w.a_flat)) {
    throw std::invalid_argument("validate: A-flat is not a sub-multiset");
  }
  const ResidueSequence kept = dilate(a.remove(w.a_flat), w.b);
  return kept.norm_sum() < p.value();
}

bool validate(const Thm3Witness& w, const ResidueSequence& a) {
  const PrimeModulus& p = a.modulus();
  if (p.reduce(w.b) == 0) {
    throw std::invalid_argument("validate: b must be non-zero");
  }
  if (!a.contains_submultiset(w.a_flat)) {
    throw std::invalid_argument("validate: A-flat is not a sub-multiset");
  }
  const ResidueSequence prime =
      translate(dilate(a.remove(w.a_flat), w.b), w.c);
  const std::vector<std::int64_t> vals = prime.signed_values();
  const Count q = static_cast<Count>(vals.size());
  if (w.l1 < 0 || w.window < 0 || w.l1 + w.window > q) {
    throw std::invalid_argument("validate: window out of range");
  }
  std::int64_t lo = 0, hi = 0;
  bool first = true;
  for (Count lp = w.l1; lp <= w.l1 + w.window; ++lp) {
    const IntRange r = lsum_range_int(vals, lp);
    if (first) {
      lo = r.lo;
      hi = r.hi;
      first = false;
    } else {
      lo = std::min(lo, r.lo);
      hi = std::max(hi, r.hi);
    }
  }
  return hi - lo < p.value();
}

ZeroFree2Report zerofree2_report(const ResidueSequence& a) {
  if (a.empty()) throw std::invalid_argument("zerofree2_report: empty");
  if (!a.is_set()) {
    throw std::invalid_argument("zerofree2_report: input must be a set");
  }
  if (!is_zero_sum_free(a)) {
    throw std::domain_error("zerofree2_report: set is not zero-sum-free");
  }
  const PrimeModulus& p = a.modulus();
  Residue best_b = 1;
  std::int64_t best_total = -1;
  for (Residue b = 1; b < p.value(); ++b) {
    std::int64_t total = 0;
    for (const auto& [r, c] : a.entries()) total += p.norm(p.mul(b, r)) * c;
    if (best_total < 0 || total < best_total) {
      best_total = total;
      best_b = b;
    }
  }
  ZeroFree2Report rep{best_b, 0, 0};
  for (const auto& [r, c] : a.entries()) {
    const Residue rb = p.mul(best_b, r);
    if (2 * rb < p.value()) {
      rep.low_half_norm_sum += p.norm(rb) * c;
    } else {
      rep.high_half_norm_sum += p.norm(rb) * c;
    }
  }
  return rep;
}

}  // namespace zpsum
