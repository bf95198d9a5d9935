#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace irrlab {

/// Worker count: IRRLAB_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
inline unsigned worker_count() {
  if (const char* env = std::getenv("IRRLAB_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, count) into contiguous chunks, folds each chunk into its own
/// accumulator on a worker thread, then merges the partial results left to
/// right. `body(begin, end, acc)` must only touch `acc`; with an associative
/// `merge(into, from)` the result does not depend on the worker count.
template <typename Acc, typename Body, typename Merge>
Acc parallel_reduce(std::uint64_t count, const Acc& init, Body body, Merge merge) {
  const std::uint64_t workers = std::min<std::uint64_t>(worker_count(), std::max<std::uint64_t>(count, 1));
  const std::uint64_t chunks = std::min<std::uint64_t>(count, workers * 4);
  if (chunks <= 1) {
    Acc acc = init;
    if (count) body(std::uint64_t{0}, count, acc);
    return acc;
  }
  std::vector<Acc> partial(chunks, init);
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::uint64_t c = w; c < chunks; c += workers) {
        const std::uint64_t begin = count * c / chunks;
        const std::uint64_t end = count * (c + 1) / chunks;
        body(begin, end, partial[c]);
      }
    });
  }
  pool.clear();
  Acc result = std::move(partial.front());
  for (std::uint64_t c = 1; c < chunks; ++c) merge(result, partial[c]);
  return result;
}

}  // namespace irrlab
