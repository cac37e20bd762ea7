#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "vdo/analytic.hpp"
#include "vdo/baselines.hpp"
#include "vdo/errors.hpp"
#include "vdo/registry.hpp"

using vdo::ConfigError;
using vdo::GaParams;
using vdo::Problem;
using vdo::PsoParams;
using vdo::RunResult;
using vdo::RunSpec;

namespace {

bool non_increasing(const std::vector<vdo::CurvePoint>& curve) {
  for (std::size_t k = 1; k < curve.size(); ++k)
    if (curve[k].best_f > curve[k - 1].best_f) return false;
  return true;
}

}  // namespace

TEST_CASE("every optimizer honors budget, bounds, seeds and monotone curves") {
  const Problem sphere = vdo::sphere(4);
  const Problem flat = vdo::constant(4, 7.0);

  for (const std::string& name : vdo::optimizer_names()) {
    CAPTURE(name);
    RunSpec spec;
    spec.population = 12;
    spec.max_fes = 450;
    spec.seed = 31;

    const RunResult a = vdo::run_optimizer(name, sphere, spec);
    CHECK(a.fes_used == 450);
    REQUIRE_FALSE(a.curve.empty());
    CHECK(a.curve.back().fes == 450);
    CHECK(sphere.space.contains(a.best_x));
    CHECK(non_increasing(a.curve));

    const RunResult b = vdo::run_optimizer(name, sphere, spec);
    CHECK(a.best_f == b.best_f);
    CHECK(a.best_x == b.best_x);
    REQUIRE(a.curve.size() == b.curve.size());
    for (std::size_t k = 0; k < a.curve.size(); ++k)
      CHECK(a.curve[k].best_f == b.curve[k].best_f);

    spec.seed = 32;
    const RunResult c = vdo::run_optimizer(name, sphere, spec);
    CHECK(a.best_f != c.best_f);

    const RunResult d = vdo::run_optimizer(name, flat, spec);
    CHECK(d.best_f == 7.0);
    for (const vdo::CurvePoint& pt : d.curve) CHECK(pt.best_f == 7.0);
  }
}

TEST_CASE("particle swarm parameter validation") {
  PsoParams p;
  CHECK(p.c1 == 2.0);
  CHECK(p.c2 == 2.0);
  CHECK(p.inertia_start == 0.9);
  CHECK(p.inertia_end == 0.4);
  CHECK(p.velocity_clamp == 0.2);
  CHECK_NOTHROW(p.validate());

  p.velocity_clamp = 0.0;
  CHECK_THROWS_AS(p.validate(), ConfigError);
  p.velocity_clamp = 0.2;
  p.c1 = -1.0;
  CHECK_THROWS_AS(p.validate(), ConfigError);
}

TEST_CASE("particle swarm guards its setup") {
  const Problem p = vdo::sphere(3);
  CHECK_THROWS_AS(vdo::pso_optimize(p, 1, 100, PsoParams{}, 1), ConfigError);
  CHECK_THROWS_AS(vdo::pso_optimize(p, 10, 5, PsoParams{}, 1), ConfigError);
}

TEST_CASE("particle swarm crushes a low-dimensional sphere") {
  const Problem p = vdo::sphere(2);
  const RunResult swarm = vdo::pso_optimize(p, 30, 10000, PsoParams{}, 3);
  CHECK(swarm.best_f < 1e-6);

  const RunResult blind = vdo::random_search(p, 10000, 3, 30);
  CHECK(blind.best_f > swarm.best_f * 1e4);
}

TEST_CASE("genetic algorithm parameter validation") {
  GaParams p;
  CHECK(p.crossover_prob == 0.8);
  CHECK(p.mutation_prob == 0.05);
  CHECK(p.tournament == 3);
  CHECK(p.blend_alpha == 0.5);
  CHECK(p.mutation_sigma == 0.1);
  CHECK(p.elites == 1);
  CHECK_NOTHROW(p.validate());

  p.tournament = 0;
  CHECK_THROWS_AS(p.validate(), ConfigError);
  p.tournament = 3;
  p.mutation_sigma = 0.0;
  CHECK_THROWS_AS(p.validate(), ConfigError);
  p.mutation_sigma = 0.1;
  p.crossover_prob = 1.5;
  CHECK_THROWS_AS(p.validate(), ConfigError);
}

TEST_CASE("genetic algorithm guards its setup") {
  const Problem p = vdo::sphere(3);
  CHECK_THROWS_AS(vdo::ga_optimize(p, 1, 100, GaParams{}, 1), ConfigError);
  CHECK_THROWS_AS(vdo::ga_optimize(p, 10, 5, GaParams{}, 1), ConfigError);
  GaParams crowded;
  crowded.elites = 10;
  CHECK_THROWS_AS(vdo::ga_optimize(p, 10, 100, crowded, 1), ConfigError);
}

TEST_CASE("genetic algorithm without variation cannot improve on its start") {
  GaParams frozen;
  frozen.crossover_prob = 0.0;
  frozen.mutation_prob = 0.0;

  const Problem p = vdo::rastrigin(4);
  const RunResult init_only = vdo::ga_optimize(p, 16, 16, frozen, 8);
  const RunResult longer = vdo::ga_optimize(p, 16, 480, frozen, 8);
  CHECK(longer.best_f == init_only.best_f);
}

TEST_CASE("random search groups curve points by stride") {
  const Problem p = vdo::sphere(2);

  const RunResult strided = vdo::random_search(p, 17, 4, 5);
  CHECK(strided.fes_used == 17);
  REQUIRE(strided.curve.size() == 4);
  CHECK(strided.curve[0].fes == 5);
  CHECK(strided.curve[1].fes == 10);
  CHECK(strided.curve[2].fes == 15);
  CHECK(strided.curve[3].fes == 17);  // the leftover group closes the curve
  CHECK(strided.curve[3].iteration == 4);

  const RunResult dense = vdo::random_search(p, 17, 4, 1);
  CHECK(dense.curve.size() == 17);
  const RunResult defaulted = vdo::random_search(p, 17, 4, 0);
  CHECK(defaulted.curve.size() == 17);  // stride zero falls back to one

  CHECK_THROWS_AS(vdo::random_search(p, 0, 4, 1), ConfigError);
}

TEST_CASE("registry resolves parameter maps and rejects strays") {
  const vdo::ParamMap vdo_full = vdo::resolve_params("vdo", {{"w0", 2.0}});
  CHECK(vdo_full.at("w0") == 2.0);
  CHECK(vdo_full.at("divide_num") == 4.0);
  CHECK(vdo_full.size() == 15);

  const vdo::ParamMap pso_full = vdo::resolve_params("pso", {});
  CHECK(pso_full.at("c1") == 2.0);
  CHECK(pso_full.size() == 5);

  const vdo::ParamMap ga_full = vdo::resolve_params("ga", {});
  CHECK(ga_full.at("tournament") == 3.0);
  CHECK(ga_full.size() == 6);

  CHECK(vdo::resolve_params("random", {}).empty());

  CHECK_THROWS_AS(vdo::resolve_params("vdo", {{"bogus", 1.0}}), ConfigError);
  CHECK_THROWS_AS(vdo::resolve_params("random", {{"w0", 1.0}}), ConfigError);
  CHECK_THROWS_AS(vdo::resolve_params("simulated_annealing", {}), ConfigError);
  CHECK_THROWS_AS(vdo::resolve_vdo_params({{"divide_num", 2.5}}), ConfigError);
  CHECK_THROWS_AS(vdo::resolve_vdo_params({{"latency_depth", -3.0}}),
                  ConfigError);
  CHECK_THROWS_AS(vdo::resolve_vdo_params({{"w0", -1.0}}), ConfigError);
}

TEST_CASE("registry builds problems from spec strings") {
  CHECK(vdo::make_problem("sphere").name == "sphere:10");  // default dimension
  CHECK(vdo::make_problem("sphere:5").space.dim() == 5);
  CHECK(vdo::make_problem("pvd").name == "pvd");
  CHECK(vdo::make_problem("pvd_discrete").name == "pvd_discrete");
  CHECK(vdo::make_problem("ttd").name == "ttd");
  CHECK(vdo::make_problem("wbd").name == "wbd");
  CHECK(vdo::make_problem("constant:4")
            .objective(std::vector<double>(4, 0.3)) == 7.0);

  CHECK_THROWS_AS(vdo::make_problem("pvd:3"), ConfigError);
  CHECK_THROWS_AS(vdo::make_problem("sphere:0"), ConfigError);
  CHECK_THROWS_AS(vdo::make_problem("sphere:ten"), ConfigError);
  CHECK_THROWS_AS(vdo::make_problem("sphere:2:3"), ConfigError);
  CHECK_THROWS_AS(vdo::make_problem("simplex"), ConfigError);

  CHECK_THROWS_AS(vdo::run_optimizer("annealer", vdo::sphere(2), RunSpec{}),
                  ConfigError);

  const std::vector<std::string> optimizers = vdo::optimizer_names();
  CHECK(optimizers ==
        std::vector<std::string>{"vdo", "pso", "ga", "random"});
  const std::vector<std::string> problems = vdo::problem_names();
  CHECK(std::find(problems.begin(), problems.end(), "pvd") != problems.end());
  CHECK(std::find(problems.begin(), problems.end(), "cec2017:<id>:<dim>") !=
        problems.end());
}
