#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vdo/problem.hpp"
#include "vdo/run_result.hpp"

namespace vdo {

// Virus diffusion optimizer: a population method whose iteration mirrors a
// lytic infection cycle. Receptor-based tropism filtering selects survivors,
// whose receptor-guided step seeds the candidate they are judged against
// this iteration; a burst phase steps every member along the mean pull
// toward the incumbent best with decaying strength; diffusion moves (budding
// or membrane fusion), an occasional heavy-tailed reinfection jump and an
// occasional differential recombination perturb the candidate before its one
// evaluation per iteration; a rolling latency archive periodically restores
// each member to its best recent state.
struct VdoParams {
  std::size_t divide_num = 4;      // receptors k = clamp(floor(dim / divide_num), 1, dim)
  double tropism_min = 0.1;        // intensity range for the tropism step
  double tropism_max = 0.5;
  double w0 = 1.0;                 // base replication strength
  double act_prob = 0.5;           // per-dimension burst activation gate
  double flip_prob = 0.2;          // per-dimension sign flip in the burst step
  double p_bud = 0.3;              // fusion jump instead of budding
  double p_levy = 0.1;             // heavy-tailed reinfection move
  double p_de = 0.2;               // differential recombination of the candidate
  std::size_t latency_depth = 10;  // iterations between reactivations
  double eta = 1.0;                // tropism step size
  double levy_beta = 1.5;          // tail index, in (0, 2); exactly 2 is rejected
  double de_f = 0.5;               // differential weight
  double de_cr = 0.9;              // crossover rate
  double r0_eps = 1e-3;            // clamp margin for the survivor ratio

  void validate() const;  // throws ConfigError on out-of-range values
};

// Shared per-iteration state for the burst and diffusion moves.
struct BurstContext {
  std::vector<double> delta_g;  // mean of (best_x - x_i) over survivors
  double beta_t = 1.0;          // decay factor in [0, 1]
  double rho = 1.0;             // w0 * beta_t
  double r0 = 0.5;              // survivor ratio clamped into [r0_eps, 1 - r0_eps]
};

// Rolling per-individual archive of the last depth() evaluated states. The
// write slot advances once per iteration; after the last slot the caller
// reactivates the population and starts a new cycle.
class LatencyArchive {
 public:
  LatencyArchive(std::size_t n, std::size_t dim, std::size_t depth);

  std::size_t size() const { return n_; }
  std::size_t depth() const { return depth_; }
  std::size_t slot() const { return slot_; }  // current write slot, 0-based

  // Stores (x, f) for individual i in the current slot.
  void record(std::size_t i, std::span<const double> x, double f);

  // Advances the write slot at the end of an iteration.
  void end_iteration();

  // True once every slot of a cycle has been written to.
  bool reactivation_due() const { return slot_ >= depth_; }

  // Restarts the cycle at slot 0 after a reactivation.
  void reset_cycle() { slot_ = 0; }

  bool filled(std::size_t i, std::size_t s) const { return filled_[i * depth_ + s]; }
  double cost(std::size_t i, std::size_t s) const { return costs_[i * depth_ + s]; }
  std::span<const double> position(std::size_t i, std::size_t s) const {
    return {positions_.data() + (i * depth_ + s) * dim_, dim_};
  }

 private:
  std::size_t n_, dim_, depth_;
  std::size_t slot_ = 0;
  std::vector<double> positions_;
  std::vector<double> costs_;
  std::vector<std::uint8_t> filled_;
};

// Restores every member to its archived state with the lowest cost, ties
// broken by the lowest slot index. Members with no archived state are left
// alone. The population best is not touched; an archived state can never
// beat it because every archived state was itself an evaluation.
void reactivate(Population& pop, const LatencyArchive& archive);

// --- iteration building blocks -------------------------------------------
//
// Each operation documents the exact draws it consumes so that seeded runs
// can be replayed: the stream state after a call depends only on the state
// before it and the listed draws.

// Diagnostics for tropism_filter, recorded per receptor stage.
struct TropismTrace {
  struct Stage {
    std::size_t receptor;
    std::size_t prev_size;
    std::size_t kept_size;   // survivors of the strict comparison
    bool complemented;       // kept set was under half and got replaced
  };
  std::vector<Stage> stages;
};

// Survivor selection. Draws one permutation of the dimensions, then keeps,
// per receptor, the members exceeding the best on that coordinate; a kept
// set smaller than half its predecessor is replaced by its complement. The
// result is never empty (the full index set is the fallback).
std::vector<std::size_t> tropism_filter(const Population& pop,
                                        std::span<const double> best_x,
                                        const VdoParams& params, RngStream& rng,
                                        TropismTrace* trace = nullptr);

// Receptor-guided move of one survivor. Draws the intensity t in
// [tropism_min, tropism_max], then per dimension one branch coin and one xi:
// with probability t the dimension moves xi * (best - x) toward the best,
// otherwise it is perturbed by (xi - 0.5) * width * t. Returns
// clamp(x + eta * step).
std::vector<double> tropism_step(std::span<const double> x,
                                 std::span<const double> best_x,
                                 const SearchSpace& space,
                                 const VdoParams& params, RngStream& rng);

// Mean pull toward the incumbent best over the given members.
std::vector<double> mean_gradient(const Population& pop,
                                  std::span<const std::size_t> survivors,
                                  std::span<const double> best_x);

// Decay factor (1 - fes/max_fes)^(2 fes/max_fes), with 0^0 = 1. Equals 1 at
// the start, 0 when the budget is spent, and never increases in between.
double burst_factor(std::uint64_t fes, std::uint64_t max_fes);

double replication_strength(double w0, double beta_t);

// Early-phase step rho * (xi - 0.5) * beta_t * sin(2 pi xi').
double step_early(double rho, double beta_t, double xi, double xi_prime);
// Draws xi then xi'.
double step_early(double rho, double beta_t, RngStream& rng);

// Late-phase step 0.1 * rho * (xi - 0.5) * beta_t *
// (1 + 0.5 * (1 + tanh(r0 / sqrt(1 - r0^2))) * beta_t).
double step_late(double rho, double beta_t, double r0, double xi);
// Draws xi.
double step_late(double rho, double beta_t, double r0, RngStream& rng);

// Assembles the iteration context: mean gradient over survivors, decay from
// the consumed budget, replication strength and the clamped survivor ratio.
BurstContext make_burst_context(const Population& pop,
                                std::span<const std::size_t> survivors,
                                std::span<const double> best_x,
                                const Budget& budget, std::size_t n,
                                const VdoParams& params);

// Scalar-step move x + s * m_j * sign_j * delta_g. Draws one mode coin
// (under 0.5 picks the early step), the step's own draws, then per dimension
// an activation coin and a flip coin (both always consumed). Clamped.
std::vector<double> burst_update(std::span<const double> x,
                                 const BurstContext& ctx,
                                 const SearchSpace& space,
                                 const VdoParams& params, RngStream& rng);

// Budding: x + s_step (.) delta_g with a fresh step per dimension, all of
// the mode picked by one leading coin (under 0.5 early). Clamped.
std::vector<double> budding_update(std::span<const double> x,
                                   const BurstContext& ctx,
                                   const SearchSpace& space,
                                   const VdoParams& params, RngStream& rng);

// Fusion: one branch coin; under 0.5 a single-dimension jump (draws the
// dimension then xi) to best[r] + 0.1 * (xi - 0.5) * beta_t * delta_g[r],
// otherwise an all-or-nothing blend with alpha drawn from {0, 1}. Clamped.
std::vector<double> fusion_jump(std::span<const double> x,
                                std::span<const double> best_x,
                                const BurstContext& ctx,
                                const SearchSpace& space, RngStream& rng);

// Mantegna scale sigma_u for the heavy-tailed step; beta must lie in (0, 2),
// exactly 2 makes the construction degenerate and raises ConfigError.
double levy_sigma(double beta);

// Heavy-tailed vector: entry = sigma_u * u / |v|^(1/beta) with u, v standard
// normal (two normals = four uniforms per dimension; a zero v is redrawn).
std::vector<double> levy_vector(std::size_t dim, double beta, RngStream& rng);

// clamp(x + L (.) (best_x - x)) with L ~ levy_vector(dim, levy_beta).
std::vector<double> levy_reinfection(std::span<const double> x,
                                     std::span<const double> best_x,
                                     const SearchSpace& space,
                                     const VdoParams& params, RngStream& rng);

// rand/1/bin recombination of population members around target i: distinct
// a, b, c != i (each drawn by rejection), mutant x_a + de_f * (x_b - x_c),
// then binomial crossover against member i with one guaranteed dimension
// j_rand (one coin per dimension, always consumed). Returns the clamped
// trial. Fewer than four members: returns member i unchanged.
std::vector<double> de_recombination(const Population& pop, std::size_t i,
                                     const SearchSpace& space,
                                     const VdoParams& params, RngStream& rng);

// Full run. Requires n >= 2 and max_fes >= n; stops at exactly max_fes
// evaluations. One curve sample per iteration (at least one overall).
RunResult optimize(const Problem& problem, std::size_t n,
                   std::uint64_t max_fes, const VdoParams& params,
                   std::uint64_t seed, const RunOptions& options = {});

}  // namespace vdo
