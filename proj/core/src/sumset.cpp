#include "zpsum/sumset.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace zpsum {

namespace {

std::size_t word_count(std::int64_t p) {
  return static_cast<std::size_t>((p + 63) / 64);
}

}  // namespace

SumsetMask::SumsetMask(PrimeModulus p)
    : p_(p), words_(word_count(p.value()), 0) {}

std::int64_t SumsetMask::popcount() const noexcept {
  std::int64_t n = 0;
  for (std::uint64_t w : words_) n += std::popcount(w);
  return n;
}

bool SumsetMask::any() const noexcept {
  for (std::uint64_t w : words_) {
    if (w != 0) return true;
  }
  return false;
}

SumsetMask& SumsetMask::operator|=(const SumsetMask& o) {
  if (!(o.p_ == p_)) throw std::invalid_argument("mask |=: modulus mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

SumsetMask& SumsetMask::operator&=(const SumsetMask& o) {
  if (!(o.p_ == p_)) throw std::invalid_argument("mask &=: modulus mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

SumsetMask SumsetMask::rotated(std::int64_t s) const {
  const std::int64_t p = p_.value();
  s = p_.reduce(s);
  if (s == 0) return *this;
  SumsetMask out(p_);
  const std::size_t nw = words_.size();
  auto shift_or = [&](std::int64_t left_by) {
    // out |= (*this << left_by), truncated to p bits by the caller's mask.
    const std::size_t ws = static_cast<std::size_t>(left_by >> 6);
    const int bs = static_cast<int>(left_by & 63);
    for (std::size_t i = nw; i-- > 0;) {
      if (i < ws) break;
      std::uint64_t v = words_[i - ws] << bs;
      if (bs != 0 && i - ws > 0) v |= words_[i - ws - 1] >> (64 - bs);
      out.words_[i] |= v;
    }
  };
  auto shift_right_or = [&](std::int64_t right_by) {
    const std::size_t ws = static_cast<std::size_t>(right_by >> 6);
    const int bs = static_cast<int>(right_by & 63);
    for (std::size_t i = 0; i < nw; ++i) {
      if (i + ws >= nw) break;
      std::uint64_t v = words_[i + ws] >> bs;
      if (bs != 0 && i + ws + 1 < nw) v |= words_[i + ws + 1] << (64 - bs);
      out.words_[i] |= v;
    }
  };
  shift_or(s);
  shift_right_or(p - s);
  // masked tail: clear bits at positions >= p
  const int tail = static_cast<int>(p & 63);
  if (tail != 0) {
    out.words_.back() &= (std::uint64_t{1} << tail) - 1;
  }
  return out;
}

SumsetMask SumsetMask::dilated(Residue b) const {
  b = p_.reduce(b);
  if (b == 0) throw std::invalid_argument("mask dilated: b must be non-zero");
  SumsetMask out(p_);
  for (Residue r = 0; r < p_.value(); ++r) {
    if (test(r)) out.set(p_.mul(b, r));
  }
  return out;
}

std::vector<Residue> SumsetMask::residues() const {
  std::vector<Residue> out;
  for (Residue r = 0; r < p_.value(); ++r) {
    if (test(r)) out.push_back(r);
  }
  return out;
}

SumsetMask SumsetMask::from_residues(PrimeModulus p,
                                     std::span<const Residue> rs) {
  SumsetMask m(p);
  for (Residue r : rs) m.set(p.reduce(r));
  return m;
}

SumsetMask sigma(const ResidueSequence& a) {
  if (a.empty()) throw std::invalid_argument("sigma: empty sequence");
  const PrimeModulus& p = a.modulus();
  SumsetMask reach(p);
  for (const auto& [r, mult] : a.entries()) {
    // binary splitting: multiplicities 1, 2, 4, ..., remainder
    Count left = mult;
    Count group = 1;
    while (left > 0) {
      const Count take = std::min(group, left);
      left -= take;
      group <<= 1;
      const Residue v = p.reduce(r * take);
      SumsetMask shifted = reach.rotated(v);
      reach |= shifted;
      reach.set(v);
    }
  }
  return reach;
}

namespace {

// Shared DP for sigma_l and sigma_l_window: rows[c] = residues reachable
// as a sum of exactly c elements. The count dimension is capped at l_hi.
std::vector<SumsetMask> count_dp(const ResidueSequence& a, Count l_hi) {
  const PrimeModulus& p = a.modulus();
  std::vector<SumsetMask> rows;
  rows.reserve(static_cast<std::size_t>(l_hi) + 1);
  for (Count c = 0; c <= l_hi; ++c) rows.emplace_back(p);
  rows[0].set(0);
  for (const auto& [r, mult] : a.entries()) {
    for (Count c = l_hi; c >= 1; --c) {
      const Count jmax = std::min<Count>(mult, c);
      for (Count j = 1; j <= jmax; ++j) {
        const SumsetMask& prev = rows[static_cast<std::size_t>(c - j)];
        if (!prev.any()) continue;
        rows[static_cast<std::size_t>(c)] |=
            prev.rotated(p.reduce(r * j));
      }
    }
  }
  return rows;
}

}  // namespace

SumsetMask sigma_l(const ResidueSequence& a, Count l) {
  if (l < 0 || l > a.cardinality()) {
    throw std::invalid_argument("sigma_l: l out of range");
  }
  return count_dp(a, l).back();
}

SumsetMask sigma_l_window(const ResidueSequence& a, Count l_lo, Count l_hi) {
  if (l_lo < 0 || l_lo > l_hi || l_hi > a.cardinality()) {
    throw std::invalid_argument("sigma_l_window: invalid window");
  }
  auto rows = count_dp(a, l_hi);
  SumsetMask out(a.modulus());
  for (Count c = l_lo; c <= l_hi; ++c) {
    out |= rows[static_cast<std::size_t>(c)];
  }
  return out;
}

IntRange lsum_range_int(std::span<const std::int64_t> values, Count l) {
  if (l < 0 || l > static_cast<Count>(values.size())) {
    throw std::invalid_argument("lsum_range_int: l out of range");
  }
  std::vector<std::int64_t> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  std::int64_t lo = 0, hi = 0;
  for (Count i = 0; i < l; ++i) {
    lo += v[static_cast<std::size_t>(i)];
    hi += v[v.size() - 1 - static_cast<std::size_t>(i)];
  }
  return {lo, hi};
}

APWitness longest_ap(const SumsetMask& mask) {
  if (!mask.any()) throw std::invalid_argument("longest_ap: empty mask");
  const std::int64_t p = mask.modulus().value();
  if (mask.full()) return {0, 1, p};

  // Any unset residue lies on the orbit of every difference (p is prime),
  // so each orbit walk can start just past it and never splits a run.
  Residue unset = 0;
  while (mask.test(unset)) ++unset;

  APWitness best{0, 1, 0};
  for (Residue d = 1; d < p; ++d) {
    Residue pos = unset;
    std::int64_t run = 0;
    Residue run_start = 0;
    for (std::int64_t step = 0; step < p; ++step) {
      pos += d;
      if (pos >= p) pos -= p;
      if (mask.test(pos)) {
        if (run == 0) run_start = pos;
        ++run;
        if (run > best.length) {
          best = {run_start, d, run};
        } else if (run == best.length && d == best.diff &&
                   run_start < best.start) {
          best.start = run_start;
        }
      } else {
        run = 0;
      }
    }
  }
  return best;
}

bool knet_check(const SumsetMask& x, std::int64_t k) {
  return knet_check(x.modulus(), x.residues(), k);
}

bool knet_check(PrimeModulus p, std::span<const Residue> x, std::int64_t k) {
  if (x.empty()) throw std::invalid_argument("knet_check: empty set");
  if (k < 0) throw std::invalid_argument("knet_check: K must be >= 0");
  std::vector<Residue> xs(x.begin(), x.end());
  for (Residue& r : xs) r = p.reduce(r);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  // n strictly between consecutive members is only covered by the lower
  // one, so X is a K-net iff every cyclic gap is at most K+1.
  std::int64_t max_gap = 0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    max_gap = std::max(max_gap, xs[i + 1] - xs[i]);
  }
  max_gap = std::max(max_gap, p.value() - xs.back() + xs.front());
  return max_gap - 1 <= k;
}

}  // namespace zpsum
