#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vdo/budget.hpp"
#include "vdo/population.hpp"
#include "vdo/rng.hpp"
#include "vdo/search_space.hpp"

namespace vdo {

// Static exterior penalty: value = objective + coeff * sum(max(0, g_k)^exponent).
// Feasible points (all g_k <= 0) are returned bit-exactly unchanged.
struct PenaltyPolicy {
  double coeff = 1e11;
  double exponent = 2.0;
};

using ObjectiveFn = std::function<double(std::span<const double>)>;
using ConstraintsFn = std::function<std::vector<double>(std::span<const double>)>;

// A box-constrained objective plus optional inequality constraints in
// g(x) <= 0 form. Optimizers see the penalized value; the raw objective and
// constraint values stay accessible for reporting.
struct Problem {
  std::string name;
  SearchSpace space;
  ObjectiveFn objective;
  ConstraintsFn constraints;  // null for unconstrained problems
  PenaltyPolicy penalty;
  std::optional<double> best_known;
  std::vector<double> best_known_x;

  double raw(std::span<const double> x) const { return objective(x); }
  std::vector<double> violations(std::span<const double> x) const {
    return constraints ? constraints(x) : std::vector<double>{};
  }
  double value(std::span<const double> x) const;
};

double penalize(double raw, std::span<const double> g, const PenaltyPolicy& policy);

// Uniform samples x = lb + u * (ub - lb), clamped/snapped into the space.
// Member i consumes dim consecutive uniforms, i = 0 first. No evaluations.
Population init_population(const SearchSpace& space, std::size_t n, RngStream& rng);

// Evaluates ind at its current position: charges the budget first (throwing
// BudgetExhausted with no evaluation performed if it is spent), stores the
// penalized fitness and updates the population best.
double evaluate(Individual& ind, const Problem& problem, Budget& budget,
                Population& pop);

}  // namespace vdo
