#pragma once
// Chunked data parallelism with results that do not depend on the worker count:
// the index range is cut into a fixed number of chunks and partial results are
// combined in chunk order.

#include "hen/config.hpp"

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hen {

inline constexpr std::uint64_t default_chunks = 256;

/// Runs body(chunk_begin, chunk_end, chunk_id) over [0, n) split into at most `chunks` pieces.
template <typename Body>
void parallel_chunks(std::uint64_t n, Body&& body, std::uint64_t chunks = default_chunks) {
  if (n == 0) return;
  chunks = std::min(chunks, n);
  auto range = [&](std::uint64_t c) {
    return std::pair{n * c / chunks, n * (c + 1) / chunks};
  };
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(worker_count(), chunks));
  if (workers <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) {
      auto [b, e] = range(c);
      body(b, e, c);
    }
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::uint64_t c = next.fetch_add(1);
        if (c >= chunks) return;
        try {
          auto [b, e] = range(c);
          body(b, e, c);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next.store(chunks);
        }
      }
    });
  }
  pool.clear();
  if (error) std::rethrow_exception(error);
}

/// Deterministic reduction: per-chunk partials combined pairwise in chunk order.
template <typename T, typename ChunkFn>
T parallel_reduce(std::uint64_t n, T zero, ChunkFn&& chunk_fn, std::uint64_t chunks = default_chunks) {
  if (n == 0) return zero;
  chunks = std::min(chunks, n);
  std::vector<T> partial(chunks, zero);
  parallel_chunks(
      n, [&](std::uint64_t b, std::uint64_t e, std::uint64_t c) { partial[c] = chunk_fn(b, e); }, chunks);
  while (partial.size() > 1) {
    std::vector<T> next;
    next.reserve((partial.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < partial.size(); i += 2) next.push_back(partial[i] + partial[i + 1]);
    if (partial.size() % 2) next.push_back(partial.back());
    partial.swap(next);
  }
  return partial.front();
}

}  // namespace hen
