#include "vdo/search_space.hpp"

#include <cmath>
#include <string>

#include "vdo/errors.hpp"

namespace vdo {

SearchSpace SearchSpace::box(std::size_t dim, double lo, double hi) {
  SearchSpace s;
  s.lb.assign(dim, lo);
  s.ub.assign(dim, hi);
  return s;
}

void SearchSpace::validate() const {
  if (lb.empty()) throw ConfigError("search space needs at least one dimension");
  if (lb.size() != ub.size())
    throw ConfigError("search space bound vectors differ in length");
  if (!integer_mask.empty() && integer_mask.size() != lb.size())
    throw ConfigError("integer_mask length does not match dimension");
  if (!grid.empty() && grid.size() != lb.size())
    throw ConfigError("grid length does not match dimension");
  for (std::size_t j = 0; j < lb.size(); ++j) {
    if (!(lb[j] <= ub[j]))
      throw ConfigError("bound " + std::to_string(j) + " is empty: lb must not exceed ub");
    if (!std::isfinite(lb[j]) || !std::isfinite(ub[j]))
      throw ConfigError("bounds must be finite");
    if (!grid.empty() && !(grid[j] > 0.0))
      throw ConfigError("grid steps must be positive");
  }
}

bool SearchSpace::contains(std::span<const double> x) const {
  if (x.size() != lb.size()) return false;
  for (std::size_t j = 0; j < lb.size(); ++j)
    if (x[j] < lb[j] || x[j] > ub[j]) return false;
  return true;
}

void SearchSpace::clamp_in_place(std::vector<double>& x) const {
  for (std::size_t j = 0; j < lb.size(); ++j) {
    double v = std::min(std::max(x[j], lb[j]), ub[j]);
    if (!integer_mask.empty() && integer_mask[j]) {
      const double step = grid.empty() ? 1.0 : grid[j];
      v = std::round(v / step) * step;
      v = std::min(std::max(v, lb[j]), ub[j]);
    }
    x[j] = v;
  }
}

std::vector<double> SearchSpace::clamp(std::span<const double> x) const {
  std::vector<double> out(x.begin(), x.end());
  clamp_in_place(out);
  return out;
}

}  // namespace vdo
