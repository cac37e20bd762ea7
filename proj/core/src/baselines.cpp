#include "vdo/baselines.hpp"

#include <algorithm>
#include <cmath>

namespace vdo {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw ConfigError(what);
}

}  // namespace

void PsoParams::validate() const {
  require(c1 >= 0.0 && c2 >= 0.0, "acceleration coefficients must be non-negative");
  require(inertia_start >= 0.0 && inertia_end >= 0.0, "inertia must be non-negative");
  require(velocity_clamp > 0.0, "velocity_clamp must be positive");
}

RunResult pso_optimize(const Problem& problem, std::size_t n,
                       std::uint64_t max_fes, const PsoParams& params,
                       std::uint64_t seed, const RunOptions& options) {
  params.validate();
  problem.space.validate();
  require(n >= 2, "population must have at least 2 members");
  require(max_fes >= n, "budget must cover the initial population");

  const SearchSpace& space = problem.space;
  const std::size_t d = space.dim();
  RngStream rng(seed);
  Budget budget(max_fes);
  Population pop = init_population(space, n, rng);

  RunResult out;
  if (options.dense_log) out.eval_log.reserve(max_fes);
  for (auto& ind : pop.members()) {
    evaluate(ind, problem, budget, pop);
    if (options.dense_log) out.eval_log.push_back(pop.best_f());
  }

  std::vector<std::vector<double>> vel(n, std::vector<double>(d, 0.0));
  std::vector<std::vector<double>> pbest_x(n);
  std::vector<double> pbest_f(n);
  for (std::size_t i = 0; i < n; ++i) {
    pbest_x[i] = pop[i].x;
    pbest_f[i] = *pop[i].fitness;
  }
  std::vector<double> vmax(d);
  for (std::size_t j = 0; j < d; ++j)
    vmax[j] = params.velocity_clamp * space.width(j);

  std::uint64_t iteration = 0;
  while (!budget.exhausted()) {
    ++iteration;
    const double w = params.inertia_start +
                     (params.inertia_end - params.inertia_start) *
                         budget.fraction();
    for (std::size_t i = 0; i < n && !budget.exhausted(); ++i) {
      auto& x = pop[i].x;
      for (std::size_t j = 0; j < d; ++j) {
        const double r1 = rng.uniform();
        const double r2 = rng.uniform();
        double v = w * vel[i][j] + params.c1 * r1 * (pbest_x[i][j] - x[j]) +
                   params.c2 * r2 * (pop.best_x()[j] - x[j]);
        v = std::clamp(v, -vmax[j], vmax[j]);
        vel[i][j] = v;
        x[j] += v;
      }
      space.clamp_in_place(x);
      const double f = evaluate(pop[i], problem, budget, pop);
      if (options.dense_log) out.eval_log.push_back(pop.best_f());
      if (f < pbest_f[i]) {
        pbest_f[i] = f;
        pbest_x[i] = x;
      }
    }
    out.curve.push_back({iteration, budget.used(), pop.best_f()});
    if (options.observer) options.observer(iteration, pop);
  }

  if (out.curve.empty())
    out.curve.push_back({0, budget.used(), pop.best_f()});
  out.best_x = pop.best_x();
  out.best_f = pop.best_f();
  out.fes_used = budget.used();
  return out;
}

void GaParams::validate() const {
  require(crossover_prob >= 0.0 && crossover_prob <= 1.0,
          "crossover_prob must lie in [0, 1]");
  require(mutation_prob >= 0.0 && mutation_prob <= 1.0,
          "mutation_prob must lie in [0, 1]");
  require(tournament >= 1, "tournament size must be at least 1");
  require(blend_alpha >= 0.0, "blend_alpha must be non-negative");
  require(mutation_sigma > 0.0, "mutation_sigma must be positive");
}

RunResult ga_optimize(const Problem& problem, std::size_t n,
                      std::uint64_t max_fes, const GaParams& params,
                      std::uint64_t seed, const RunOptions& options) {
  params.validate();
  problem.space.validate();
  require(n >= 2, "population must have at least 2 members");
  require(max_fes >= n, "budget must cover the initial population");
  require(params.elites < n, "elite count must stay below the population size");

  const SearchSpace& space = problem.space;
  const std::size_t d = space.dim();
  RngStream rng(seed);
  Budget budget(max_fes);
  Population pop = init_population(space, n, rng);

  RunResult out;
  if (options.dense_log) out.eval_log.reserve(max_fes);
  for (auto& ind : pop.members()) {
    evaluate(ind, problem, budget, pop);
    if (options.dense_log) out.eval_log.push_back(pop.best_f());
  }

  auto tournament = [&]() {
    std::size_t winner = static_cast<std::size_t>(rng.uniform_index(n));
    for (std::size_t t = 1; t < params.tournament; ++t) {
      const std::size_t c = static_cast<std::size_t>(rng.uniform_index(n));
      if (*pop[c].fitness < *pop[winner].fitness) winner = c;
    }
    return winner;
  };

  // Member indices ordered by fitness, used to pick the elites.
  auto elite_indices = [&]() {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return *pop[a].fitness < *pop[b].fitness;
    });
    idx.resize(params.elites);
    return idx;
  };

  std::uint64_t iteration = 0;
  while (!budget.exhausted()) {
    ++iteration;
    std::vector<Individual> next;
    next.reserve(n);
    for (std::size_t e : elite_indices()) next.push_back(pop[e]);

    while (next.size() < n && !budget.exhausted()) {
      const std::size_t p1 = tournament();
      const std::size_t p2 = tournament();
      std::vector<double> child = pop[p1].x;
      if (rng.uniform() < params.crossover_prob) {
        for (std::size_t j = 0; j < d; ++j) {
          const double lo = std::min(pop[p1].x[j], pop[p2].x[j]);
          const double hi = std::max(pop[p1].x[j], pop[p2].x[j]);
          const double spread = hi - lo;
          child[j] = rng.uniform(lo - params.blend_alpha * spread,
                                 hi + params.blend_alpha * spread);
        }
      }
      for (std::size_t j = 0; j < d; ++j)
        if (rng.uniform() < params.mutation_prob)
          child[j] += rng.normal() * params.mutation_sigma * space.width(j);
      space.clamp_in_place(child);

      Individual offspring{std::move(child), std::nullopt};
      evaluate(offspring, problem, budget, pop);
      if (options.dense_log) out.eval_log.push_back(pop.best_f());
      next.push_back(std::move(offspring));
    }
    if (next.size() == n) pop.members() = std::move(next);
    out.curve.push_back({iteration, budget.used(), pop.best_f()});
    if (options.observer) options.observer(iteration, pop);
  }

  if (out.curve.empty())
    out.curve.push_back({0, budget.used(), pop.best_f()});
  out.best_x = pop.best_x();
  out.best_f = pop.best_f();
  out.fes_used = budget.used();
  return out;
}

RunResult random_search(const Problem& problem, std::uint64_t max_fes,
                        std::uint64_t seed, std::size_t curve_stride,
                        const RunOptions& options) {
  problem.space.validate();
  require(max_fes >= 1, "budget must allow at least one evaluation");
  if (curve_stride == 0) curve_stride = 1;

  const SearchSpace& space = problem.space;
  const std::size_t d = space.dim();
  RngStream rng(seed);
  Budget budget(max_fes);
  Population pop(1);
  pop[0].x.resize(d);

  RunResult out;
  if (options.dense_log) out.eval_log.reserve(max_fes);
  std::uint64_t iteration = 0;
  while (!budget.exhausted()) {
    auto& x = pop[0].x;
    for (std::size_t j = 0; j < d; ++j)
      x[j] = space.lb[j] + rng.uniform() * space.width(j);
    space.clamp_in_place(x);
    evaluate(pop[0], problem, budget, pop);
    if (options.dense_log) out.eval_log.push_back(pop.best_f());
    if (budget.used() % curve_stride == 0 || budget.exhausted()) {
      ++iteration;
      out.curve.push_back({iteration, budget.used(), pop.best_f()});
      if (options.observer) options.observer(iteration, pop);
    }
  }

  out.best_x = pop.best_x();
  out.best_f = pop.best_f();
  out.fes_used = budget.used();
  return out;
}

}  // namespace vdo
