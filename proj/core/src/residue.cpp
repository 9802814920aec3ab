#include "zpsum/residue.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace zpsum {

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::int64_t p) : p_(p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("PrimeModulus: " + std::to_string(p) +
                                " is not prime");
  }
}

std::int64_t PrimeModulus::norm(Residue x) const {
  if (x < 0 || x >= p_) {
    throw std::invalid_argument("norm: residue out of range");
  }
  return std::min(x, p_ - x);
}

std::int64_t PrimeModulus::signed_rep(Residue x) const {
  if (x < 0 || x >= p_) {
    throw std::invalid_argument("signed_rep: residue out of range");
  }
  return x <= (p_ - 1) / 2 ? x : x - p_;
}

Residue PrimeModulus::inverse(Residue b) const {
  b = reduce(b);
  if (b == 0) {
    throw std::invalid_argument("inverse: 0 has no inverse");
  }
  // extended Euclid on (b, p)
  std::int64_t old_r = b, r = p_;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return reduce(old_s);
}

std::int64_t f_control(const PrimeModulus& p, std::int64_t m) {
  if (m < 1 || m > p.value()) {
    throw std::invalid_argument("f_control: require 1 <= m <= p");
  }
  const double pd = static_cast<double>(p.value());
  const double lg = std::log2(pd);
  const double x = std::pow(pd * static_cast<double>(m), 6.0 / 13.0) * lg * lg;
  const double lo = std::floor(x * (1.0 - 1e-12));
  const double hi = std::floor(x * (1.0 + 1e-12));
  // Ambiguous floor at the boundary: take the smaller value.
  return static_cast<std::int64_t>(lo < hi ? lo : lo);
}

ResidueSequence::ResidueSequence(PrimeModulus p,
                                 std::span<const std::int64_t> elements)
    : p_(p) {
  std::vector<std::pair<Residue, Count>> raw;
  raw.reserve(elements.size());
  for (std::int64_t e : elements) raw.emplace_back(p_.reduce(e), 1);
  canonicalize(std::move(raw));
}

ResidueSequence ResidueSequence::from_pairs(
    PrimeModulus p, std::span<const std::pair<Residue, Count>> pairs) {
  ResidueSequence seq(p);
  std::vector<std::pair<Residue, Count>> raw(pairs.begin(), pairs.end());
  for (auto& [r, c] : raw) {
    if (c < 1) {
      throw std::invalid_argument("ResidueSequence: multiplicity must be >= 1");
    }
    r = p.reduce(r);
  }
  seq.canonicalize(std::move(raw));
  return seq;
}

void ResidueSequence::canonicalize(
    std::vector<std::pair<Residue, Count>> raw) {
  std::map<Residue, Count> merged;
  for (const auto& [r, c] : raw) merged[r] += c;
  entries_.assign(merged.begin(), merged.end());
  for (const auto& [r, c] : entries_) {
    if (c > p_.value()) {
      throw std::invalid_argument(
          "ResidueSequence: multiplicity " + std::to_string(c) +
          " exceeds the modulus " + std::to_string(p_.value()));
    }
  }
}

Count ResidueSequence::cardinality() const noexcept {
  Count n = 0;
  for (const auto& [r, c] : entries_) n += c;
  return n;
}

Count ResidueSequence::max_multiplicity() const noexcept {
  Count m = 0;
  for (const auto& [r, c] : entries_) m = std::max(m, c);
  return m;
}

Count ResidueSequence::multiplicity(Residue r) const noexcept {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), r,
      [](const auto& e, Residue key) { return e.first < key; });
  if (it == entries_.end() || it->first != r) return 0;
  return it->second;
}

std::vector<Residue> ResidueSequence::flatten() const {
  std::vector<Residue> out;
  out.reserve(static_cast<std::size_t>(cardinality()));
  for (const auto& [r, c] : entries_) {
    out.insert(out.end(), static_cast<std::size_t>(c), r);
  }
  return out;
}

std::vector<std::int64_t> ResidueSequence::signed_values() const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(cardinality()));
  for (const auto& [r, c] : entries_) {
    out.insert(out.end(), static_cast<std::size_t>(c), p_.signed_rep(r));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t ResidueSequence::element_sum() const noexcept {
  std::int64_t s = 0;
  for (const auto& [r, c] : entries_) s += r * c;
  return s;
}

std::int64_t ResidueSequence::norm_sum() const {
  std::int64_t s = 0;
  for (const auto& [r, c] : entries_) s += p_.norm(r) * c;
  return s;
}

bool ResidueSequence::contains_submultiset(const ResidueSequence& sub) const {
  if (!(sub.p_ == p_)) return false;
  for (const auto& [r, c] : sub.entries_) {
    if (multiplicity(r) < c) return false;
  }
  return true;
}

ResidueSequence ResidueSequence::remove(const ResidueSequence& sub) const {
  if (!(sub.p_ == p_)) {
    throw std::invalid_argument("remove: modulus mismatch");
  }
  if (!contains_submultiset(sub)) {
    throw std::invalid_argument("remove: not a sub-multiset");
  }
  std::vector<std::pair<Residue, Count>> out;
  out.reserve(entries_.size());
  for (const auto& [r, c] : entries_) {
    const Count left = c - sub.multiplicity(r);
    if (left > 0) out.emplace_back(r, left);
  }
  ResidueSequence res(p_);
  res.entries_ = std::move(out);
  return res;
}

ResidueSequence ResidueSequence::unite(const ResidueSequence& other) const {
  if (!(other.p_ == p_)) {
    throw std::invalid_argument("unite: modulus mismatch");
  }
  std::vector<std::pair<Residue, Count>> raw = entries_;
  raw.insert(raw.end(), other.entries_.begin(), other.entries_.end());
  ResidueSequence res(p_);
  res.canonicalize(std::move(raw));
  return res;
}

ResidueSequence dilate(const ResidueSequence& a, Residue b) {
  const PrimeModulus& p = a.modulus();
  if (p.reduce(b) == 0) {
    throw std::invalid_argument("dilate: b must be a non-zero residue");
  }
  std::vector<std::pair<Residue, Count>> pairs;
  pairs.reserve(a.entries().size());
  for (const auto& [r, c] : a.entries()) {
    pairs.emplace_back(p.mul(p.reduce(b), r), c);
  }
  return ResidueSequence::from_pairs(p, pairs);
}

ResidueSequence translate(const ResidueSequence& a, Residue c) {
  const PrimeModulus& p = a.modulus();
  std::vector<std::pair<Residue, Count>> pairs;
  pairs.reserve(a.entries().size());
  for (const auto& [r, m] : a.entries()) {
    pairs.emplace_back(p.reduce(r + c), m);
  }
  return ResidueSequence::from_pairs(p, pairs);
}

bool decompose_check(const ResidueSequence& a,
                     std::span<const ResidueSequence> parts) {
  for (const auto& part : parts) {
    if (!(part.modulus() == a.modulus())) {
      throw std::invalid_argument("decompose_check: modulus mismatch");
    }
  }
  for (Residue r = 0; r < a.modulus().value(); ++r) {
    Count total = 0;
    for (const auto& part : parts) total += part.multiplicity(r);
    if (total != a.multiplicity(r)) return false;
  }
  return true;
}

}  // namespace zpsum
