#include "vdo/problem.hpp"

#include <cmath>

namespace vdo {

double penalize(double raw, std::span<const double> g, const PenaltyPolicy& policy) {
  double sum = 0.0;
  for (double gk : g)
    if (gk > 0.0) sum += std::pow(gk, policy.exponent);
  return sum == 0.0 ? raw : raw + policy.coeff * sum;
}

double Problem::value(std::span<const double> x) const {
  const double f = objective(x);
  if (!constraints) return f;
  const std::vector<double> g = constraints(x);
  return penalize(f, g, penalty);
}

Population init_population(const SearchSpace& space, std::size_t n, RngStream& rng) {
  space.validate();
  const std::size_t d = space.dim();
  Population pop(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& x = pop[i].x;
    x.resize(d);
    for (std::size_t j = 0; j < d; ++j)
      x[j] = space.lb[j] + rng.uniform() * space.width(j);
    space.clamp_in_place(x);
  }
  return pop;
}

double evaluate(Individual& ind, const Problem& problem, Budget& budget,
                Population& pop) {
  budget.charge();
  const double f = problem.value(ind.x);
  ind.fitness = f;
  pop.note_evaluation(ind.x, f);
  return f;
}

}  // namespace vdo
