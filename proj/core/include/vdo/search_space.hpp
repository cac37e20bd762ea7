#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace vdo {

// Rectangular search domain. Dimensions flagged in integer_mask are
// restricted to integer multiples of their grid step; all other dimensions
// are continuous. Empty integer_mask/grid mean all-continuous with step 1.
struct SearchSpace {
  std::vector<double> lb;
  std::vector<double> ub;
  std::vector<std::uint8_t> integer_mask;
  std::vector<double> grid;

  std::size_t dim() const { return lb.size(); }
  double width(std::size_t j) const { return ub[j] - lb[j]; }

  static SearchSpace box(std::size_t dim, double lo, double hi);

  // Throws ConfigError unless sizes agree, lb <= ub elementwise and every
  // grid step is positive.
  void validate() const;

  bool contains(std::span<const double> x) const;

  // Projects x into the box. Integer-masked dimensions are snapped to the
  // nearest grid multiple (anchored at zero) and clamped again, so bounds
  // for masked dimensions should themselves sit on the grid.
  std::vector<double> clamp(std::span<const double> x) const;
  void clamp_in_place(std::vector<double>& x) const;
};

}  // namespace vdo
