#include "vdo/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace vdo {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

bool prob_ok(double p) { return p >= 0.0 && p <= 1.0; }

}  // namespace

void VdoParams::validate() const {
  require(divide_num >= 1, "divide_num must be at least 1");
  require(tropism_min >= 0.0 && tropism_max <= 1.0 &&
              tropism_min <= tropism_max,
          "tropism intensity range must satisfy 0 <= min <= max <= 1");
  require(w0 > 0.0, "w0 must be positive");
  require(prob_ok(act_prob), "act_prob must lie in [0, 1]");
  require(prob_ok(flip_prob), "flip_prob must lie in [0, 1]");
  require(prob_ok(p_bud), "p_bud must lie in [0, 1]");
  require(prob_ok(p_levy), "p_levy must lie in [0, 1]");
  require(prob_ok(p_de), "p_de must lie in [0, 1]");
  require(latency_depth >= 1, "latency_depth must be at least 1");
  require(eta > 0.0, "eta must be positive");
  require(levy_beta > 0.0 && levy_beta <= 2.0,
          "levy_beta must lie in (0, 2]");
  require(de_f >= 0.0, "de_f must be non-negative");
  require(prob_ok(de_cr), "de_cr must lie in [0, 1]");
  require(r0_eps > 0.0 && r0_eps < 0.5, "r0_eps must lie in (0, 0.5)");
}

LatencyArchive::LatencyArchive(std::size_t n, std::size_t dim,
                               std::size_t depth)
    : n_(n),
      dim_(dim),
      depth_(depth),
      positions_(n * depth * dim, 0.0),
      costs_(n * depth, 0.0),
      filled_(n * depth, 0) {
  require(depth >= 1, "archive depth must be at least 1");
}

void LatencyArchive::record(std::size_t i, std::span<const double> x,
                            double f) {
  const std::size_t cell = i * depth_ + slot_;
  std::copy(x.begin(), x.end(), positions_.begin() + cell * dim_);
  costs_[cell] = f;
  filled_[cell] = 1;
}

void LatencyArchive::end_iteration() { ++slot_; }

void reactivate(Population& pop, const LatencyArchive& archive) {
  for (std::size_t i = 0; i < pop.size(); ++i) {
    std::size_t best_slot = archive.depth();
    for (std::size_t s = 0; s < archive.depth(); ++s) {
      if (!archive.filled(i, s)) continue;
      if (best_slot == archive.depth() ||
          archive.cost(i, s) < archive.cost(i, best_slot))
        best_slot = s;
    }
    if (best_slot == archive.depth()) continue;
    const auto x = archive.position(i, best_slot);
    pop[i].x.assign(x.begin(), x.end());
    pop[i].fitness = archive.cost(i, best_slot);
  }
}

std::vector<std::size_t> tropism_filter(const Population& pop,
                                        std::span<const double> best_x,
                                        const VdoParams& params,
                                        RngStream& rng, TropismTrace* trace) {
  const std::size_t d = best_x.size();
  const std::size_t n = pop.size();
  std::size_t k = d / params.divide_num;
  k = std::clamp<std::size_t>(k, 1, d);

  const std::vector<std::size_t> receptors = rng.permutation(d);
  std::vector<std::size_t> current(n);
  for (std::size_t i = 0; i < n; ++i) current[i] = i;

  for (std::size_t stage = 0; stage < k; ++stage) {
    const std::size_t r = receptors[stage];
    std::vector<std::size_t> kept;
    for (std::size_t i : current)
      if (pop[i].x[r] > best_x[r]) kept.push_back(i);
    const bool complement = kept.size() * 2 < current.size();
    if (trace)
      trace->stages.push_back({r, current.size(), kept.size(), complement});
    if (complement) {
      std::vector<std::size_t> rest;
      for (std::size_t i : current)
        if (pop[i].x[r] <= best_x[r]) rest.push_back(i);
      current = std::move(rest);
    } else {
      current = std::move(kept);
    }
  }
  if (current.empty()) {
    current.resize(n);
    for (std::size_t i = 0; i < n; ++i) current[i] = i;
  }
  return current;
}

std::vector<double> tropism_step(std::span<const double> x,
                                 std::span<const double> best_x,
                                 const SearchSpace& space,
                                 const VdoParams& params, RngStream& rng) {
  const std::size_t d = x.size();
  const double t = rng.uniform(params.tropism_min, params.tropism_max);
  std::vector<double> out(x.begin(), x.end());
  for (std::size_t j = 0; j < d; ++j) {
    const double coin = rng.uniform();
    const double xi = rng.uniform();
    const double step = coin < t ? xi * (best_x[j] - x[j])
                                 : (xi - 0.5) * space.width(j) * t;
    out[j] = x[j] + params.eta * step;
  }
  space.clamp_in_place(out);
  return out;
}

std::vector<double> mean_gradient(const Population& pop,
                                  std::span<const std::size_t> survivors,
                                  std::span<const double> best_x) {
  const std::size_t d = best_x.size();
  std::vector<double> g(d, 0.0);
  if (survivors.empty()) return g;
  for (std::size_t i : survivors)
    for (std::size_t j = 0; j < d; ++j) g[j] += best_x[j] - pop[i].x[j];
  const double inv = 1.0 / static_cast<double>(survivors.size());
  for (double& v : g) v *= inv;
  return g;
}

double burst_factor(std::uint64_t fes, std::uint64_t max_fes) {
  require(max_fes > 0, "max_fes must be positive");
  const double t =
      static_cast<double>(fes) / static_cast<double>(max_fes);
  if (t <= 0.0) return 1.0;
  if (t >= 1.0) return 0.0;
  return std::pow(1.0 - t, 2.0 * t);
}

double replication_strength(double w0, double beta_t) { return w0 * beta_t; }

double step_early(double rho, double beta_t, double xi, double xi_prime) {
  return rho * (xi - 0.5) * beta_t *
         std::sin(2.0 * std::numbers::pi * xi_prime);
}

double step_early(double rho, double beta_t, RngStream& rng) {
  const double xi = rng.uniform();
  const double xi_prime = rng.uniform();
  return step_early(rho, beta_t, xi, xi_prime);
}

double step_late(double rho, double beta_t, double r0, double xi) {
  const double envelope =
      1.0 + 0.5 * (1.0 + std::tanh(r0 / std::sqrt(1.0 - r0 * r0))) * beta_t;
  return 0.1 * rho * (xi - 0.5) * beta_t * envelope;
}

double step_late(double rho, double beta_t, double r0, RngStream& rng) {
  return step_late(rho, beta_t, r0, rng.uniform());
}

BurstContext make_burst_context(const Population& pop,
                                std::span<const std::size_t> survivors,
                                std::span<const double> best_x,
                                const Budget& budget, std::size_t n,
                                const VdoParams& params) {
  BurstContext ctx;
  ctx.delta_g = mean_gradient(pop, survivors, best_x);
  ctx.beta_t = burst_factor(budget.used(), budget.max());
  ctx.rho = replication_strength(params.w0, ctx.beta_t);
  const double ratio =
      static_cast<double>(survivors.size()) / static_cast<double>(n);
  ctx.r0 = std::clamp(ratio, params.r0_eps, 1.0 - params.r0_eps);
  return ctx;
}

std::vector<double> burst_update(std::span<const double> x,
                                 const BurstContext& ctx,
                                 const SearchSpace& space,
                                 const VdoParams& params, RngStream& rng) {
  const bool early = rng.uniform() < 0.5;
  const double s = early ? step_early(ctx.rho, ctx.beta_t, rng)
                         : step_late(ctx.rho, ctx.beta_t, ctx.r0, rng);
  std::vector<double> out(x.begin(), x.end());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const bool active = rng.uniform() < params.act_prob;
    const double sign = rng.uniform() < params.flip_prob ? -1.0 : 1.0;
    if (active) out[j] = x[j] + s * sign * ctx.delta_g[j];
  }
  space.clamp_in_place(out);
  return out;
}

std::vector<double> budding_update(std::span<const double> x,
                                   const BurstContext& ctx,
                                   const SearchSpace& space,
                                   const VdoParams& params, RngStream& rng) {
  const bool early = rng.uniform() < 0.5;
  std::vector<double> out(x.begin(), x.end());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double s = early ? step_early(ctx.rho, ctx.beta_t, rng)
                           : step_late(ctx.rho, ctx.beta_t, ctx.r0, rng);
    out[j] = x[j] + s * ctx.delta_g[j];
  }
  space.clamp_in_place(out);
  return out;
}

std::vector<double> fusion_jump(std::span<const double> x,
                                std::span<const double> best_x,
                                const BurstContext& ctx,
                                const SearchSpace& space, RngStream& rng) {
  std::vector<double> out(x.begin(), x.end());
  if (rng.uniform() < 0.5) {
    const std::size_t r =
        static_cast<std::size_t>(rng.uniform_index(x.size()));
    const double xi = rng.uniform();
    out[r] = best_x[r] + 0.1 * (xi - 0.5) * ctx.beta_t * ctx.delta_g[r];
  } else {
    const double alpha = static_cast<double>(rng.uniform_index(2));
    for (std::size_t j = 0; j < x.size(); ++j)
      out[j] = (1.0 - alpha) * x[j] + alpha * best_x[j];
  }
  space.clamp_in_place(out);
  return out;
}

double levy_sigma(double beta) {
  require(beta > 0.0 && beta < 2.0,
          "levy tail index must lie in (0, 2); 2 degenerates the scale");
  const double num =
      std::tgamma(1.0 + beta) * std::sin(std::numbers::pi * beta / 2.0);
  const double den = std::tgamma((1.0 + beta) / 2.0) * beta *
                     std::pow(2.0, (beta - 1.0) / 2.0);
  return std::pow(num / den, 1.0 / beta);
}

std::vector<double> levy_vector(std::size_t dim, double beta, RngStream& rng) {
  const double sigma = levy_sigma(beta);
  std::vector<double> out(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const double u = rng.normal() * sigma;
    double v = rng.normal();
    while (v == 0.0) v = rng.normal();
    out[j] = u / std::pow(std::fabs(v), 1.0 / beta);
  }
  return out;
}

std::vector<double> levy_reinfection(std::span<const double> x,
                                     std::span<const double> best_x,
                                     const SearchSpace& space,
                                     const VdoParams& params, RngStream& rng) {
  const std::vector<double> l = levy_vector(x.size(), params.levy_beta, rng);
  std::vector<double> out(x.begin(), x.end());
  for (std::size_t j = 0; j < x.size(); ++j)
    out[j] = x[j] + l[j] * (best_x[j] - x[j]);
  space.clamp_in_place(out);
  return out;
}

std::vector<double> de_recombination(const Population& pop, std::size_t i,
                                     const SearchSpace& space,
                                     const VdoParams& params, RngStream& rng) {
  const std::size_t n = pop.size();
  if (n < 4) return pop[i].x;
  const std::size_t d = pop[i].x.size();

  auto draw_distinct = [&](std::initializer_list<std::size_t> taken) {
    std::size_t v;
    do {
      v = static_cast<std::size_t>(rng.uniform_index(n));
    } while (std::find(taken.begin(), taken.end(), v) != taken.end());
    return v;
  };
  const std::size_t a = draw_distinct({i});
  const std::size_t b = draw_distinct({i, a});
  const std::size_t c = draw_distinct({i, a, b});
  const std::size_t j_rand =
      static_cast<std::size_t>(rng.uniform_index(d));

  std::vector<double> trial = pop[i].x;
  for (std::size_t j = 0; j < d; ++j) {
    const double coin = rng.uniform();
    if (coin < params.de_cr || j == j_rand)
      trial[j] = pop[a].x[j] + params.de_f * (pop[b].x[j] - pop[c].x[j]);
  }
  space.clamp_in_place(trial);
  return trial;
}

RunResult optimize(const Problem& problem, std::size_t n,
                   std::uint64_t max_fes, const VdoParams& params,
                   std::uint64_t seed, const RunOptions& options) {
  params.validate();
  problem.space.validate();
  require(n >= 2, "population must have at least 2 members");
  require(max_fes >= n, "budget must cover the initial population");
  require(!(params.p_levy > 0.0 && params.levy_beta >= 2.0),
          "levy_beta must stay below 2 when p_levy is positive");

  const std::size_t d = problem.space.dim();
  RngStream rng(seed);
  Budget budget(max_fes);
  Population pop = init_population(problem.space, n, rng);

  RunResult out;
  if (options.dense_log) out.eval_log.reserve(max_fes);
  for (auto& ind : pop.members()) {
    evaluate(ind, problem, budget, pop);
    if (options.dense_log) out.eval_log.push_back(pop.best_f());
  }

  LatencyArchive archive(n, d, params.latency_depth);
  std::uint64_t iteration = 0;
  while (!budget.exhausted()) {
    ++iteration;

    const std::vector<std::size_t> survivors =
        tropism_filter(pop, pop.best_x(), params, rng);
    std::vector<std::vector<double>> seeded(n);
    for (std::size_t i : survivors)
      seeded[i] =
          tropism_step(pop[i].x, pop.best_x(), problem.space, params, rng);

    const BurstContext ctx =
        make_burst_context(pop, survivors, pop.best_x(), budget, n, params);

    for (std::size_t i = 0; i < n && !budget.exhausted(); ++i) {
      std::vector<double> cand = burst_update(
          seeded[i].empty() ? pop[i].x : seeded[i], ctx, problem.space,
          params, rng);
      if (rng.uniform() < params.p_bud)
        cand = fusion_jump(cand, pop.best_x(), ctx, problem.space, rng);
      else
        cand = budding_update(cand, ctx, problem.space, params, rng);
      if (rng.uniform() < params.p_levy)
        cand = levy_reinfection(cand, pop.best_x(), problem.space, params, rng);
      if (n >= 4 && rng.uniform() < params.p_de)
        cand = de_recombination(pop, i, problem.space, params, rng);

      Individual trial{std::move(cand), std::nullopt};
      const double f = evaluate(trial, problem, budget, pop);
      if (options.dense_log) out.eval_log.push_back(pop.best_f());
      archive.record(i, trial.x, f);
      if (!pop[i].fitness || f < *pop[i].fitness) pop[i] = std::move(trial);
    }

    archive.end_iteration();
    if (archive.reactivation_due()) {
      reactivate(pop, archive);
      archive.reset_cycle();
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

}  // namespace vdo
