#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "vdo/baselines.hpp"
#include "vdo/optimizer.hpp"
#include "vdo/problem.hpp"

namespace vdo {

// Numeric parameter overrides keyed by field name, e.g. {"p_levy", 0.2}.
// Unknown keys raise ConfigError; integer-valued fields reject fractions.
using ParamMap = std::map<std::string, double>;

VdoParams resolve_vdo_params(const ParamMap& overrides);
PsoParams resolve_pso_params(const ParamMap& overrides);
GaParams resolve_ga_params(const ParamMap& overrides);

ParamMap to_param_map(const VdoParams& p);
ParamMap to_param_map(const PsoParams& p);
ParamMap to_param_map(const GaParams& p);

// Fully resolved parameter map for a registered optimizer (defaults plus
// overrides); "random" has no parameters.
ParamMap resolve_params(const std::string& optimizer, const ParamMap& overrides);

struct ProblemOptions {
  std::filesystem::path cec_dir;  // required for cec problem specs
};

// Resolves a problem spec string:
//   "pvd", "pvd_discrete", "ttd", "wbd"      fixed-dimension designs
//   "sphere", "sphere:30", ...               analytic functions, default dim 10
//   "constant", "constant:5"                 constant smoke-test objective
//   "cec2017:<id>:<dim>", "cec2022:..."      shifted/rotated bundles
Problem make_problem(const std::string& spec, const ProblemOptions& options = {});

// Registered names; analytic entries take an optional ":dim" suffix and the
// cec suites are listed as patterns.
std::vector<std::string> problem_names();

struct RunSpec {
  std::size_t population = 50;
  std::uint64_t max_fes = 20000;
  std::uint64_t seed = 0;
  ParamMap params;
  RunOptions options;
};

// Dispatches to the registered optimizer: "vdo", "pso", "ga" or "random"
// (which samples uniformly and uses population as its curve stride).
RunResult run_optimizer(const std::string& name, const Problem& problem,
                        const RunSpec& spec);

std::vector<std::string> optimizer_names();

}  // namespace vdo
