#pragma once

#include <chrono>
#include <cstddef>

namespace cni {

/// Limits for one Groebner computation. A zero value disables the limit.
struct ResourceBudget {
  std::chrono::milliseconds wall_clock{20000};
  /// Reduction steps (one leading-term cancellation each).
  std::size_t max_steps = 0;
};

/// Tracks a running computation against its budget; tick() throws
/// ResourceExhausted once a limit is passed.
class BudgetGuard {
 public:
  explicit BudgetGuard(const ResourceBudget& budget);

  void tick();
  std::size_t steps() const { return steps_; }

 private:
  ResourceBudget budget_;
  std::chrono::steady_clock::time_point deadline_;
  std::size_t steps_ = 0;
};

}  // namespace cni
