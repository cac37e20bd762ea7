#include "vdo/registry.hpp"

#include <charconv>
#include <cmath>
#include <functional>

#include "vdo/analytic.hpp"
#include "vdo/cec.hpp"
#include "vdo/engineering.hpp"

namespace vdo {

namespace {

double take(ParamMap& m, const std::string& key, double fallback) {
  const auto it = m.find(key);
  if (it == m.end()) return fallback;
  const double v = it->second;
  m.erase(it);
  return v;
}

std::size_t take_count(ParamMap& m, const std::string& key,
                       std::size_t fallback) {
  const auto it = m.find(key);
  if (it == m.end()) return fallback;
  const double v = it->second;
  m.erase(it);
  if (v < 0.0 || v != std::floor(v))
    throw ConfigError("parameter '" + key + "' must be a non-negative integer");
  return static_cast<std::size_t>(v);
}

void reject_leftovers(const ParamMap& m, const std::string& optimizer) {
  if (m.empty()) return;
  throw ConfigError("unknown " + optimizer + " parameter '" +
                    m.begin()->first + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::size_t parse_count(const std::string& token, const std::string& what) {
  std::size_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value == 0)
    throw ConfigError("invalid " + what + " '" + token + "'");
  return value;
}

}  // namespace

VdoParams resolve_vdo_params(const ParamMap& overrides) {
  ParamMap m = overrides;
  VdoParams p;
  p.divide_num = take_count(m, "divide_num", p.divide_num);
  p.tropism_min = take(m, "tropism_min", p.tropism_min);
  p.tropism_max = take(m, "tropism_max", p.tropism_max);
  p.w0 = take(m, "w0", p.w0);
  p.act_prob = take(m, "act_prob", p.act_prob);
  p.flip_prob = take(m, "flip_prob", p.flip_prob);
  p.p_bud = take(m, "p_bud", p.p_bud);
  p.p_levy = take(m, "p_levy", p.p_levy);
  p.p_de = take(m, "p_de", p.p_de);
  p.latency_depth = take_count(m, "latency_depth", p.latency_depth);
  p.eta = take(m, "eta", p.eta);
  p.levy_beta = take(m, "levy_beta", p.levy_beta);
  p.de_f = take(m, "de_f", p.de_f);
  p.de_cr = take(m, "de_cr", p.de_cr);
  p.r0_eps = take(m, "r0_eps", p.r0_eps);
  reject_leftovers(m, "vdo");
  p.validate();
  return p;
}

PsoParams resolve_pso_params(const ParamMap& overrides) {
  ParamMap m = overrides;
  PsoParams p;
  p.c1 = take(m, "c1", p.c1);
  p.c2 = take(m, "c2", p.c2);
  p.inertia_start = take(m, "inertia_start", p.inertia_start);
  p.inertia_end = take(m, "inertia_end", p.inertia_end);
  p.velocity_clamp = take(m, "velocity_clamp", p.velocity_clamp);
  reject_leftovers(m, "pso");
  p.validate();
  return p;
}

GaParams resolve_ga_params(const ParamMap& overrides) {
  ParamMap m = overrides;
  GaParams p;
  p.crossover_prob = take(m, "crossover_prob", p.crossover_prob);
  p.mutation_prob = take(m, "mutation_prob", p.mutation_prob);
  p.tournament = take_count(m, "tournament", p.tournament);
  p.blend_alpha = take(m, "blend_alpha", p.blend_alpha);
  p.mutation_sigma = take(m, "mutation_sigma", p.mutation_sigma);
  p.elites = take_count(m, "elites", p.elites);
  reject_leftovers(m, "ga");
  p.validate();
  return p;
}

ParamMap to_param_map(const VdoParams& p) {
  return {{"divide_num", static_cast<double>(p.divide_num)},
          {"tropism_min", p.tropism_min},
          {"tropism_max", p.tropism_max},
          {"w0", p.w0},
          {"act_prob", p.act_prob},
          {"flip_prob", p.flip_prob},
          {"p_bud", p.p_bud},
          {"p_levy", p.p_levy},
          {"p_de", p.p_de},
          {"latency_depth", static_cast<double>(p.latency_depth)},
          {"eta", p.eta},
          {"levy_beta", p.levy_beta},
          {"de_f", p.de_f},
          {"de_cr", p.de_cr},
          {"r0_eps", p.r0_eps}};
}

ParamMap to_param_map(const PsoParams& p) {
  return {{"c1", p.c1},
          {"c2", p.c2},
          {"inertia_start", p.inertia_start},
          {"inertia_end", p.inertia_end},
          {"velocity_clamp", p.velocity_clamp}};
}

ParamMap to_param_map(const GaParams& p) {
  return {{"crossover_prob", p.crossover_prob},
          {"mutation_prob", p.mutation_prob},
          {"tournament", static_cast<double>(p.tournament)},
          {"blend_alpha", p.blend_alpha},
          {"mutation_sigma", p.mutation_sigma},
          {"elites", static_cast<double>(p.elites)}};
}

ParamMap resolve_params(const std::string& optimizer, const ParamMap& overrides) {
  if (optimizer == "vdo") return to_param_map(resolve_vdo_params(overrides));
  if (optimizer == "pso") return to_param_map(resolve_pso_params(overrides));
  if (optimizer == "ga") return to_param_map(resolve_ga_params(overrides));
  if (optimizer == "random") {
    reject_leftovers(overrides, "random");
    return {};
  }
  throw ConfigError("unknown optimizer '" + optimizer + "'");
}

Problem make_problem(const std::string& spec, const ProblemOptions& options) {
  const std::vector<std::string> parts = split(spec, ':');
  const std::string& name = parts[0];

  if (name == "cec2017" || name == "cec2022") {
    if (parts.size() != 3)
      throw ConfigError("cec problems use the form " + name + ":<id>:<dim>");
    if (options.cec_dir.empty())
      throw ConfigError("cec problems need a data directory (cec_dir)");
    const std::size_t id = parse_count(parts[1], "function id");
    const std::size_t dim = parse_count(parts[2], "dimension");
    return load_cec_problem(options.cec_dir, name, static_cast<int>(id), dim);
  }

  if (name == "pvd" || name == "pvd_discrete" || name == "ttd" ||
      name == "wbd") {
    if (parts.size() != 1)
      throw ConfigError("problem '" + name + "' has a fixed dimension");
    if (name == "pvd") return pvd();
    if (name == "pvd_discrete") return pvd_discrete();
    if (name == "ttd") return ttd();
    return wbd();
  }

  if (parts.size() > 2)
    throw ConfigError("bad problem spec '" + spec + "'");
  const std::size_t dim =
      parts.size() == 2 ? parse_count(parts[1], "dimension") : 10;

  static const std::map<std::string, std::function<Problem(std::size_t)>>
      analytic{{"sphere", sphere},
               {"rosenbrock", rosenbrock},
               {"rastrigin", rastrigin},
               {"ackley", ackley},
               {"griewank", griewank},
               {"zakharov", zakharov},
               {"levy", levy},
               {"bent_cigar", bent_cigar},
               {"schwefel", schwefel},
               {"constant", [](std::size_t d) { return constant(d, 7.0); }}};
  const auto it = analytic.find(name);
  if (it == analytic.end())
    throw ConfigError("unknown problem '" + name + "'");
  return it->second(dim);
}

std::vector<std::string> problem_names() {
  return {"sphere[:dim]",   "rosenbrock[:dim]", "rastrigin[:dim]",
          "ackley[:dim]",   "griewank[:dim]",   "zakharov[:dim]",
          "levy[:dim]",     "bent_cigar[:dim]", "schwefel[:dim]",
          "constant[:dim]", "pvd",              "pvd_discrete",
          "ttd",            "wbd",              "cec2017:<id>:<dim>",
          "cec2022:<id>:<dim>"};
}

RunResult run_optimizer(const std::string& name, const Problem& problem,
                        const RunSpec& spec) {
  if (name == "vdo") {
    return optimize(problem, spec.population, spec.max_fes,
                    resolve_vdo_params(spec.params), spec.seed, spec.options);
  }
  if (name == "pso") {
    return pso_optimize(problem, spec.population, spec.max_fes,
                        resolve_pso_params(spec.params), spec.seed,
                        spec.options);
  }
  if (name == "ga") {
    return ga_optimize(problem, spec.population, spec.max_fes,
                       resolve_ga_params(spec.params), spec.seed,
                       spec.options);
  }
  if (name == "random") {
    reject_leftovers(spec.params, "random");
    return random_search(problem, spec.max_fes, spec.seed, spec.population,
                         spec.options);
  }
  throw ConfigError("unknown optimizer '" + name + "'");
}

std::vector<std::string> optimizer_names() {
  return {"vdo", "pso", "ga", "random"};
}

}  // namespace vdo
