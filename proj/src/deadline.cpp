#include "semiglue/deadline.hpp"

#include <cstdlib>
#include <string>
#include <thread>

#include "semiglue/errors.hpp"

namespace semiglue {

namespace {

long long read_env_integer(const char* name) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return 0;
  try {
    return std::stoll(raw);
  } catch (const std::exception&) {
    return 0;
  }
}

}  // namespace

Deadline Deadline::from_environment() {
  const long long ms = read_env_integer("SEMIGLUE_DEADLINE_MS");
  if (ms <= 0) return none();
  return Deadline(std::chrono::milliseconds(ms));
}

void Deadline::check(const char* where) const {
  if (expired()) throw ResourceError(std::string("deadline exceeded in ") + where);
}

unsigned default_thread_count() {
  const long long n = read_env_integer("SEMIGLUE_THREADS");
  if (n > 0) return static_cast<unsigned>(n);
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace semiglue
