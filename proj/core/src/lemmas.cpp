#include "zpsum/lemmas.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "zpsum/sumset.hpp"

namespace zpsum {

namespace {

std::int64_t mod_reduce(std::int64_t x, std::int64_t d) {
  std::int64_t r = x % d;
  return r < 0 ? r + d : r;
}

}  // namespace

std::vector<std::int64_t> zero_subset_mod_D(std::int64_t D,
                                            std::span<const std::int64_t> x) {
  if (D < 1) throw std::invalid_argument("zero_subset_mod_D: D must be >= 1");
  if (static_cast<std::int64_t>(x.size()) != D) {
    throw std::invalid_argument("zero_subset_mod_D: |X| must equal D");
  }
  // first_seen[s] = smallest prefix length with prefix sum s
  std::vector<std::int64_t> first_seen(static_cast<std::size_t>(D), -1);
  first_seen[0] = 0;
  std::int64_t s = 0;
  for (std::int64_t i = 1; i <= D; ++i) {
    s = mod_reduce(s + x[static_cast<std::size_t>(i - 1)], D);
    const std::int64_t j = first_seen[static_cast<std::size_t>(s)];
    if (j >= 0) {
      // block (j, i] sums to 0; j = 0 is the zero-prefix case
      return {x.begin() + j, x.begin() + i};
    }
    first_seen[static_cast<std::size_t>(s)] = i;
  }
  // D+1 prefix sums over D classes always collide
  throw std::logic_error("zero_subset_mod_D: pigeonhole failed");
}

std::vector<std::int64_t> full_sumset_coprime(std::int64_t D,
                                              std::span<const std::int64_t> x,
                                              std::int64_t r) {
  if (D < 1) throw std::invalid_argument("full_sumset_coprime: D >= 1");
  if (static_cast<std::int64_t>(x.size()) != D) {
    throw std::invalid_argument("full_sumset_coprime: |X| must equal D");
  }
  r = mod_reduce(r, D);
  for (std::int64_t v : x) {
    if (std::gcd(mod_reduce(v, D), D) != 1) {
      throw std::invalid_argument("full_sumset_coprime: element " +
                                  std::to_string(v) +
                                  " is not coprime with D");
    }
  }
  // 0/1 knapsack over the D items with back-pointers.
  // from[s] = (item index used to first reach s, previous sum)
  std::vector<std::pair<std::int64_t, std::int64_t>> from(
      static_cast<std::size_t>(D), {-1, -1});
  std::vector<bool> reach(static_cast<std::size_t>(D), false);
  for (std::int64_t i = 0; i < D; ++i) {
    const std::int64_t v = mod_reduce(x[static_cast<std::size_t>(i)], D);
    std::vector<std::int64_t> added;
    for (std::int64_t s = 0; s < D; ++s) {
      if (!reach[static_cast<std::size_t>(s)]) continue;
      const std::int64_t t = mod_reduce(s + v, D);
      if (!reach[static_cast<std::size_t>(t)] &&
          from[static_cast<std::size_t>(t)].first < 0) {
        from[static_cast<std::size_t>(t)] = {i, s};
        added.push_back(t);
      }
    }
    if (!reach[static_cast<std::size_t>(v)] &&
        from[static_cast<std::size_t>(v)].first < 0) {
      from[static_cast<std::size_t>(v)] = {i, -1};  // singleton {x_i}
      added.push_back(v);
    }
    for (std::int64_t t : added) reach[static_cast<std::size_t>(t)] = true;
  }
  if (!reach[static_cast<std::size_t>(r)]) {
    throw std::logic_error(
        "full_sumset_coprime: target unreachable despite preconditions");
  }
  std::vector<std::int64_t> out;
  std::int64_t cur = r;
  while (cur >= 0) {
    const auto [item, prev] = from[static_cast<std::size_t>(cur)];
    out.push_back(x[static_cast<std::size_t>(item)]);
    cur = prev;
  }
  std::sort(out.begin(), out.end());
  return out;
}

CRTRepresentation crt_unit_fractions(std::span<const std::int64_t> d_list,
                                     std::int64_t r) {
  if (d_list.empty()) {
    throw std::invalid_argument("crt_unit_fractions: empty d_list");
  }
  std::vector<std::int64_t> ds(d_list.begin(), d_list.end());
  for (std::int64_t d : ds) {
    if (d < 1) throw std::invalid_argument("crt_unit_fractions: d_i >= 1");
  }
  std::vector<std::int64_t> sorted = ds;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("crt_unit_fractions: d_i must be distinct");
  }
  std::int64_t D = 1;
  for (std::int64_t d : ds) {
    D = std::lcm(D, d);
    if (D > (std::int64_t{1} << 40)) {
      throw std::invalid_argument("crt_unit_fractions: lcm too large");
    }
  }
  if (r < 0 || r >= D) {
    throw std::invalid_argument("crt_unit_fractions: require 0 <= r < D");
  }

  // weights w_i = D / d_i; every prime power of D is cancelled by some
  // d_i, so gcd(w_1, ..., w_n) = 1
  const std::size_t n = ds.size();
  std::vector<std::int64_t> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = D / ds[i];

  // Iterated extended gcd: coefficients x with sum x_i w_i = 1 over Z.
  // Only the coefficients mod D matter for the final a_i, so they are
  // reduced each round to keep intermediates in range; the closing
  // verification is exact.
  std::vector<__int128> coeff(n, 0);
  coeff[0] = 1;
  std::int64_t g = w[0];
  for (std::size_t i = 1; i < n; ++i) {
    // g_new = s*g + t*w[i]
    std::int64_t old_r = g, rr = w[i];
    __int128 old_s = 1, ss = 0;
    while (rr != 0) {
      const std::int64_t q = old_r / rr;
      std::int64_t tmp = old_r - q * rr;
      old_r = rr;
      rr = tmp;
      __int128 stmp = old_s - static_cast<__int128>(q) * ss;
      old_s = ss;
      ss = stmp;
    }
    const __int128 s = old_s;
    const __int128 t =
        (static_cast<__int128>(old_r) - s * g) / w[i];
    for (std::size_t j = 0; j < i; ++j) coeff[j] = (coeff[j] * s) % D;
    coeff[i] = t % D;
    g = old_r;
  }
  if (g != 1) {
    throw std::logic_error("crt_unit_fractions: weight gcd is not 1");
  }

  CRTRepresentation rep{ds, D, r, std::vector<std::int64_t>(n, 0)};
  __int128 check = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const __int128 scaled = coeff[i] * r;
    std::int64_t ai =
        static_cast<std::int64_t>(((scaled % ds[i]) + ds[i]) % ds[i]);
    rep.a_list[i] = ai;
    check += static_cast<__int128>(ai) * w[i];
  }
  if (static_cast<std::int64_t>(((check % D) + D) % D) != r) {
    throw std::logic_error("crt_unit_fractions: verification failed");
  }
  return rep;
}

CRTRepresentation crt_bounded(std::span<const std::int64_t> d_list,
                              std::int64_t D, std::int64_t r) {
  if (d_list.empty()) {
    throw std::invalid_argument("crt_bounded: empty d_list");
  }
  if (D < 1) throw std::invalid_argument("crt_bounded: D >= 1");
  std::vector<std::int64_t> ds(d_list.begin(), d_list.end());
  std::int64_t g = D;
  for (std::int64_t d : ds) {
    if (d < 1) throw std::invalid_argument("crt_bounded: d_i >= 1");
    g = std::gcd(g, d);
  }
  if (g != 1) {
    throw std::invalid_argument("crt_bounded: gcd(d_1, ..., d_n, D) != 1");
  }
  if (r < 0 || r >= D) {
    throw std::invalid_argument("crt_bounded: require 0 <= r < D");
  }

  // BFS from 0; parent edge records which generator was used
  std::vector<std::int64_t> parent_gen(static_cast<std::size_t>(D), -1);
  std::vector<std::int64_t> parent(static_cast<std::size_t>(D), -1);
  std::vector<bool> seen(static_cast<std::size_t>(D), false);
  seen[0] = true;
  std::deque<std::int64_t> queue{0};
  while (!queue.empty() && !seen[static_cast<std::size_t>(r)]) {
    const std::int64_t s = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < ds.size(); ++i) {
      const std::int64_t t = mod_reduce(s + ds[i], D);
      if (!seen[static_cast<std::size_t>(t)]) {
        seen[static_cast<std::size_t>(t)] = true;
        parent[static_cast<std::size_t>(t)] = s;
        parent_gen[static_cast<std::size_t>(t)] = static_cast<std::int64_t>(i);
        queue.push_back(t);
      }
    }
  }
  if (!seen[static_cast<std::size_t>(r)]) {
    throw std::logic_error("crt_bounded: target unreachable despite gcd = 1");
  }
  CRTRepresentation rep{ds, D, r,
                        std::vector<std::int64_t>(ds.size(), 0)};
  std::int64_t cur = r;
  std::int64_t total = 0;
  while (cur != 0) {
    const std::int64_t gi = parent_gen[static_cast<std::size_t>(cur)];
    ++rep.a_list[static_cast<std::size_t>(gi)];
    ++total;
    cur = parent[static_cast<std::size_t>(cur)];
  }
  if (total > D) {
    throw std::logic_error("crt_bounded: path longer than D");
  }
  __int128 check = 0;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    check += static_cast<__int128>(rep.a_list[i]) * ds[i];
  }
  if (static_cast<std::int64_t>(((check % D) + D) % D) != r) {
    throw std::logic_error("crt_bounded: verification failed");
  }
  return rep;
}

OlsonProbeReport olson_lsum_probe(PrimeModulus p,
                                  const EnumerationBudget& budget) {
  const std::int64_t pv = p.value();
  if (pv > 62) {
    throw std::invalid_argument("olson_lsum_probe: p too large for bitmask scan");
  }
  const BigInt predicted = bigint_pow(2, pv);
  require_budget(predicted, budget, "olson_lsum_probe");

  OlsonProbeReport rep{pv, 0.0, {}, 0, predicted};
  bool first = true;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << pv); ++bits) {
    const int size = std::popcount(bits);
    if (size < 2 || size > pv - 1) continue;
    std::vector<std::int64_t> elems;
    for (std::int64_t i = 0; i < pv; ++i) {
      if ((bits >> i) & 1) elems.push_back(i);
    }
    ResidueSequence a(p, std::span<const std::int64_t>(elems));
    const Count l = size / 2;
    const double ratio =
        static_cast<double>(sigma_l(a, l).popcount()) /
        (static_cast<double>(size) * static_cast<double>(size));
    if (first || ratio < rep.min_ratio) {
      first = false;
      rep.min_ratio = ratio;
      rep.argmin_set.assign(elems.begin(), elems.end());
      rep.argmin_l = l;
    }
  }
  return rep;
}

APProbeReport ap_theorem_probe(PrimeModulus p, Count set_size, Count l,
                               std::int64_t d, std::int64_t trials,
                               std::uint64_t seed) {
  const std::int64_t pv = p.value();
  if (set_size < 1 || set_size > pv) {
    throw std::invalid_argument("ap_theorem_probe: set size out of range");
  }
  if (l < 0 || l > set_size) {
    throw std::invalid_argument("ap_theorem_probe: l out of range");
  }
  if (d < 1) throw std::invalid_argument("ap_theorem_probe: d >= 1");

  APProbeReport rep{pv, set_size, l, d, trials, seed, 0, std::nullopt};
  const double denom =
      static_cast<double>(l) *
      std::pow(static_cast<double>(set_size), 1.0 / static_cast<double>(d));
  for (std::int64_t t = 0; t < trials; ++t) {
    // per-trial derived seed, fixed mixing so runs are scheduling-free
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(t) + 1);
    // partial Fisher-Yates with explicit modulo draw (portable across
    // standard libraries, unlike uniform_int_distribution)
    std::vector<std::int64_t> pool(static_cast<std::size_t>(pv));
    for (std::int64_t i = 0; i < pv; ++i) pool[static_cast<std::size_t>(i)] = i;
    for (Count i = 0; i < set_size; ++i) {
      const std::uint64_t j =
          i + rng() % static_cast<std::uint64_t>(pv - i);
      std::swap(pool[static_cast<std::size_t>(i)],
                pool[static_cast<std::size_t>(j)]);
    }
    std::vector<std::int64_t> elems(pool.begin(), pool.begin() + set_size);
    ResidueSequence a(p, std::span<const std::int64_t>(elems));
    const SumsetMask mask = sigma_l(a, l);
    if (mask.full()) {
      ++rep.complete_count;
      continue;
    }
    if (!mask.any()) continue;  // l = 0 over empty window cannot happen; guard
    const APWitness ap = longest_ap(mask);
    const double ratio = static_cast<double>(ap.length) / denom;
    if (!rep.min_ratio || ratio < *rep.min_ratio) rep.min_ratio = ratio;
  }
  return rep;
}

}  // namespace zpsum
