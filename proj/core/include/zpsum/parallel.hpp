#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace zpsum {

/// Evaluates part(i) for i in [0, parts) and folds the results in index
/// order: acc = merge(acc, result_0), then result_1, ... The fold order is
/// fixed, so the outcome is independent of worker scheduling as long as
/// merge is a function of its arguments only.
template <typename Result, typename PartFn, typename MergeFn>
Result indexed_reduce(std::int64_t parts, int threads, Result init,
                      PartFn&& part, MergeFn&& merge) {
  if (parts <= 0) return init;
  if (threads <= 1 || parts == 1) {
    Result acc = std::move(init);
    for (std::int64_t i = 0; i < parts; ++i) {
      acc = merge(std::move(acc), part(i));
    }
    return acc;
  }

  std::vector<std::optional<Result>> slots(static_cast<std::size_t>(parts));
  std::atomic<std::int64_t> next{0};
  const int workers =
      static_cast<int>(std::min<std::int64_t>(threads, parts));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::int64_t i = next.fetch_add(1);
        if (i >= parts || failed.load()) return;
        try {
          slots[static_cast<std::size_t>(i)] = part(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failed.load()) std::rethrow_exception(error);

  Result acc = std::move(init);
  for (auto& slot : slots) {
    acc = merge(std::move(acc), std::move(*slot));
  }
  return acc;
}

}  // namespace zpsum
