#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace rescue {

// Parse failure for instance files; token_index is the 0-based ordinal of the
// offending whitespace-separated token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t token_index)
      : std::runtime_error(msg), token_index(token_index) {}
  std::size_t token_index;
};

class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SimplexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown by the search when a deadline expires; the driver catches it and
// reports the best bound found so far.
class TimeLimitReached : public std::runtime_error {
 public:
  TimeLimitReached() : std::runtime_error("time limit reached") {}
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

// Unbiased uniform integer in [lo, hi] from raw 64-bit draws.  Rejection
// sampling instead of std::uniform_int_distribution keeps generated streams
// identical across standard libraries, so seeded tests stay portable.
template <typename Rng>
std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());  // full 64-bit range
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % span;
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return lo + static_cast<std::int64_t>(v % span);
}

// Monotonic deadline wrapper; zero budget means "no limit".
struct Deadline {
  std::chrono::steady_clock::time_point at{};
  bool active = false;

  static Deadline after_ms(std::int64_t ms) {
    Deadline d;
    if (ms > 0) {
      d.at = std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
      d.active = true;
    }
    return d;
  }
  bool expired() const {
    return active && std::chrono::steady_clock::now() >= at;
  }
  void check() const {
    if (expired()) throw TimeLimitReached();
  }
};

}  // namespace rescue
