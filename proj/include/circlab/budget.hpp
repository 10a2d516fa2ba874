#pragma once

#include <chrono>
#include <stdexcept>

namespace circlab {

struct budget_exhausted : std::runtime_error {
  budget_exhausted() : std::runtime_error("time budget exhausted") {}
};

// Cooperative wall-clock budget. Long-running sweeps poll expired() (or call
// check() in serial paths) and cut the run short with a partial result.
class Budget {
 public:
  Budget() : limited_(false) {}
  explicit Budget(double seconds)
      : limited_(seconds > 0),
        deadline_(std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(seconds > 0 ? seconds : 0))) {}

  bool limited() const { return limited_; }

  bool expired() const {
    return limited_ && std::chrono::steady_clock::now() >= deadline_;
  }

  void check() const {
    if (expired()) throw budget_exhausted{};
  }

 private:
  bool limited_;
  std::chrono::steady_clock::time_point deadline_{};
};

}  // namespace circlab
