#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "vdo/population.hpp"

namespace vdo {

// One convergence-curve sample, taken at the end of an iteration.
struct CurvePoint {
  std::uint64_t iteration;
  std::uint64_t fes;
  double best_f;
};

struct RunResult {
  std::vector<double> best_x;
  double best_f = 0.0;
  std::vector<CurvePoint> curve;  // best-so-far per iteration, never increases
  std::uint64_t fes_used = 0;
  std::vector<double> eval_log;   // best-so-far per evaluation, if requested
};

struct RunOptions {
  // Record best-so-far after every single evaluation into RunResult::eval_log.
  bool dense_log = false;
  // Called at the end of each iteration with the iteration index (1-based)
  // and the current population.
  std::function<void(std::uint64_t, const Population&)> observer;
};

}  // namespace vdo
