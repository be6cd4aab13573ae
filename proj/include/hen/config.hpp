#pragma once
// Process-wide guardrails: tensor storage budget, enumeration work budget, worker count.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>

namespace hen {

struct Limits {
  std::uint64_t tensor_entries = std::uint64_t{1} << 27;
  std::uint64_t work_steps = std::uint64_t{1} << 36;
  unsigned threads = 0;  // 0 = hardware concurrency
};

namespace detail {
inline Limits initial_limits() {
  Limits l;
  if (const char* env = std::getenv("HE_TENSOR_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) l.tensor_entries = v;
  }
  return l;
}
inline Limits& mutable_limits() {
  static Limits l = initial_limits();
  return l;
}
}  // namespace detail

/// Current limits. Set once at startup (CLI flags); treat as read-only afterwards.
inline const Limits& limits() { return detail::mutable_limits(); }
inline void set_tensor_budget(std::uint64_t entries) { detail::mutable_limits().tensor_entries = entries; }
inline void set_work_budget(std::uint64_t steps) { detail::mutable_limits().work_steps = steps; }
inline void set_threads(unsigned n) { detail::mutable_limits().threads = n; }

inline unsigned worker_count() {
  const unsigned t = limits().threads;
  if (t) return t;
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Saturating product used for budget arithmetic.
inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

inline std::uint64_t sat_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

}  // namespace hen
