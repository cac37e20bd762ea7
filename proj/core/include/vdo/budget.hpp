#pragma once

#include <cstdint>

#include "vdo/errors.hpp"

namespace vdo {

// Function-evaluation budget. charge() accounts exactly one evaluation and
// refuses to run past the maximum, so used() can never exceed max().
class Budget {
 public:
  explicit Budget(std::uint64_t max_fes) : max_(max_fes) {}

  std::uint64_t used() const { return used_; }
  std::uint64_t max() const { return max_; }
  std::uint64_t remaining() const { return max_ - used_; }
  bool exhausted() const { return used_ >= max_; }

  // Fraction of the budget consumed, in [0, 1].
  double fraction() const {
    return max_ == 0 ? 1.0
                     : static_cast<double>(used_) / static_cast<double>(max_);
  }

  void charge() {
    if (used_ >= max_) throw BudgetExhausted("evaluation budget exhausted");
    ++used_;
  }

 private:
  std::uint64_t used_ = 0;
  std::uint64_t max_;
};

}  // namespace vdo
