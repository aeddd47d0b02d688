#pragma once

#include <atomic>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace quivar {

// Bad user input (CLI exit 2).
struct BadInput : std::runtime_error {
  explicit BadInput(const std::string& msg) : std::runtime_error(msg) {}
};

// A search hit a configured cap; the result is neither true nor false (CLI exit 3).
struct Inconclusive : std::runtime_error {
  explicit Inconclusive(const std::string& msg) : std::runtime_error(msg) {}
};

// A checked statement failed on a concrete instance (CLI exit 1).
struct PropertyViolation : std::runtime_error {
  explicit PropertyViolation(const std::string& msg) : std::runtime_error(msg) {}
};

// Set by the SIGINT handler; long-running loops poll it and bail out with Inconclusive.
extern std::atomic<bool> interrupted;

inline void check_interrupt() {
  if (interrupted.load(std::memory_order_relaxed))
    throw Inconclusive("interrupted (partial progress discarded)");
}

// Worker cap: min(QUIVAR_THREADS, hardware_concurrency), at least 1.
int worker_count();

// Deterministic parallel map: results land in their input slot regardless of scheduling.
// body(i) must not touch shared mutable state.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace quivar
