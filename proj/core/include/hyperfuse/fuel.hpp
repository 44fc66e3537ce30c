#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>

namespace hyperfuse {

// Thrown when an evaluation runs out of coroutine hand-offs. Divergent
// computations (run of a lifted successor, say) surface as this error
// instead of hanging.
class FuelExhausted : public std::runtime_error {
 public:
  FuelExhausted() : std::runtime_error("step budget exhausted") {}
};

// Requested number of coroutine hand-offs for one evaluation.
struct StepBudget {
  std::int64_t hand_offs = 1'000'000;
};

// Live countdown shared by every closure spawned during one evaluation.
// Copies share the counter, so a deferred continuation that escapes the
// evaluation keeps a valid (dead) counter rather than a dangling reference.
class FuelMeter {
 public:
  explicit FuelMeter(StepBudget budget)
      : remaining_(std::make_shared<std::int64_t>(budget.hand_offs)) {}

  void consume() const {
    if (*remaining_ <= 0) throw FuelExhausted{};
    --*remaining_;
  }

  std::int64_t remaining() const { return *remaining_; }

 private:
  std::shared_ptr<std::int64_t> remaining_;
};

}  // namespace hyperfuse
