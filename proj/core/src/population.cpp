#include "vdo/population.hpp"

namespace vdo {

void Population::note_evaluation(std::span<const double> x, double f) {
  if (!best_f_ || f < *best_f_) {
    best_f_ = f;
    best_x_.assign(x.begin(), x.end());
  }
}

}  // namespace vdo
