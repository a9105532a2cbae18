#pragma once

#include <chrono>
#include <optional>

namespace semiglue {

// Cooperative cancellation point for long computations. Algorithms call
// check() in their main loops; an expired deadline raises ResourceError.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  explicit Deadline(std::chrono::milliseconds budget) : at_(Clock::now() + budget) {}

  static Deadline none() { return {}; }
  // Reads SEMIGLUE_DEADLINE_MS; unset or non-positive means no deadline.
  static Deadline from_environment();

  bool expired() const { return at_ && Clock::now() >= *at_; }
  void check(const char* where) const;

 private:
  std::optional<Clock::time_point> at_;
};

// Worker thread count for parallel stages; SEMIGLUE_THREADS overrides the
// hardware default.
unsigned default_thread_count();

}  // namespace semiglue
