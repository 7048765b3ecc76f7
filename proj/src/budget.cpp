#include "cni/budget.hpp"

#include "cni/errors.hpp"

namespace cni {

BudgetGuard::BudgetGuard(const ResourceBudget& budget)
    : budget_(budget), deadline_(std::chrono::steady_clock::now() + budget.wall_clock) {}

void BudgetGuard::tick() {
  ++steps_;
  if (budget_.max_steps != 0 && steps_ > budget_.max_steps)
    throw ResourceExhausted("step budget of " + std::to_string(budget_.max_steps) + " exceeded");
  if (budget_.wall_clock.count() > 0 && std::chrono::steady_clock::now() > deadline_)
    throw ResourceExhausted("wall-clock budget of " + std::to_string(budget_.wall_clock.count()) +
                            " ms exceeded");
}

}  // namespace cni
