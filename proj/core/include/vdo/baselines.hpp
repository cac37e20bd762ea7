#pragma once

#include <cstdint>

#include "vdo/problem.hpp"
#include "vdo/run_result.hpp"

namespace vdo {

// Global-best particle swarm. Inertia decays linearly over the consumed
// budget; velocities start at zero and are clamped per dimension to
// velocity_clamp * (ub - lb). Two fresh uniforms per dimension per update.
struct PsoParams {
  double c1 = 2.0;
  double c2 = 2.0;
  double inertia_start = 0.9;
  double inertia_end = 0.4;
  double velocity_clamp = 0.2;  // fraction of each dimension's range

  void validate() const;
};

RunResult pso_optimize(const Problem& problem, std::size_t n,
                       std::uint64_t max_fes, const PsoParams& params,
                       std::uint64_t seed, const RunOptions& options = {});

// Generational real-coded genetic algorithm: size-3 tournaments (drawn with
// replacement), blend crossover, per-gene gaussian mutation with sigma
// mutation_sigma * (ub - lb), and elites carried over unevaluated.
struct GaParams {
  double crossover_prob = 0.8;
  double mutation_prob = 0.05;  // per gene
  std::size_t tournament = 3;
  double blend_alpha = 0.5;
  double mutation_sigma = 0.1;  // fraction of each dimension's range
  std::size_t elites = 1;

  void validate() const;
};

RunResult ga_optimize(const Problem& problem, std::size_t n,
                      std::uint64_t max_fes, const GaParams& params,
                      std::uint64_t seed, const RunOptions& options = {});

// Uniform random sampling over the space. curve_stride groups evaluations
// into iterations for the convergence curve (one sample per stride, plus a
// final sample when the budget ends mid-stride).
RunResult random_search(const Problem& problem, std::uint64_t max_fes,
                        std::uint64_t seed, std::size_t curve_stride = 1,
                        const RunOptions& options = {});

}  // namespace vdo
