#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace zpsum {

/// Visits every k-subset of {0, ..., n-1} in lexicographic order.
/// fn receives the subset as a sorted index vector; returning false
/// stops the enumeration early.
template <typename Fn>
void for_each_combination(std::int64_t n, std::int64_t k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<std::int64_t> idx(static_cast<std::size_t>(k));
  for (std::int64_t i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    if (!fn(static_cast<const std::vector<std::int64_t>&>(idx))) return;
    // advance
    std::int64_t i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (std::int64_t j = i + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

/// Visits every multiplicity vector (m_0, ..., m_{slots-1}) with
/// 0 <= m_i <= cap summing to exactly `total`, odometer order.
/// A negative cap means "no per-slot bound beyond total".
template <typename Fn>
void for_each_multiplicity_vector(std::int64_t slots, std::int64_t total,
                                  std::int64_t cap, Fn&& fn) {
  std::vector<std::int64_t> mults(static_cast<std::size_t>(slots), 0);
  const std::int64_t bound = cap < 0 ? total : cap;
  auto rec = [&](auto&& self, std::int64_t slot, std::int64_t left) -> void {
    if (slot == slots - 1) {
      if (left <= bound) {
        mults[static_cast<std::size_t>(slot)] = left;
        fn(static_cast<const std::vector<std::int64_t>&>(mults));
      }
      return;
    }
    const std::int64_t hi = std::min(bound, left);
    for (std::int64_t c = 0; c <= hi; ++c) {
      mults[static_cast<std::size_t>(slot)] = c;
      self(self, slot + 1, left - c);
    }
  };
  if (slots <= 0) return;
  rec(rec, 0, total);
}

}  // namespace zpsum
