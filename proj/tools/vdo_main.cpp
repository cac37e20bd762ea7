#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vdo/harness.hpp"

namespace {

// --param entries look like "<optimizer>.<key>=<value>" and override one
// numeric parameter of one optimizer in the experiment.
void apply_param_override(vdo::ExperimentConfig& cfg, const std::string& raw) {
  const std::size_t dot = raw.find('.');
  const std::size_t eq = raw.find('=');
  if (dot == std::string::npos || eq == std::string::npos || eq < dot)
    throw vdo::ConfigError("--param expects <optimizer>.<key>=<value>, got '" +
                           raw + "'");
  const std::string opt = raw.substr(0, dot);
  const std::string key = raw.substr(dot + 1, eq - dot - 1);
  const std::string value = raw.substr(eq + 1);
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (value.empty() || end != value.c_str() + value.size())
    throw vdo::ConfigError("--param value '" + value + "' is not a number");
  bool found = false;
  for (auto& spec : cfg.optimizers)
    if (spec.name == opt) {
      spec.params[key] = v;
      found = true;
    }
  if (!found)
    throw vdo::ConfigError("--param names optimizer '" + opt +
                           "' which is not in this experiment");
}

int run_command(const vdo::ExperimentConfig& cfg) {
  const vdo::ExperimentResult result = vdo::run_and_emit(cfg);
  std::cout << "wrote " << (cfg.out_dir / "summary.csv").string() << " ("
            << result.records.size() << " runs)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"metaheuristic experiment runner"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run an experiment and emit results");
  std::string config_path;
  std::vector<std::string> problems;
  std::vector<std::string> optimizers;
  std::vector<std::string> params;
  std::uint64_t runs = 0, max_fes = 0, base_seed = 0;
  std::size_t population = 0, threads = 0;
  bool dense_log = false;
  std::string cec_dir, out_dir;
  run->add_option("-c,--config", config_path, "experiment config JSON");
  run->add_option("-p,--problem", problems,
                  "problem spec, repeatable (replaces the config list)");
  run->add_option("-O,--algo,--optimizer", optimizers,
                  "optimizer name, repeatable (replaces the config list)");
  run->add_option("--param", params,
                  "parameter override as <optimizer>.<key>=<value>");
  run->add_option("-r,--runs", runs, "independent runs per pair");
  run->add_option("-n,--pop,--population", population, "population size");
  run->add_option("-f,--max-fes", max_fes, "evaluation budget per run");
  run->add_option("-s,--seed", base_seed, "base seed; run r uses seed+r");
  run->add_option("-t,--threads", threads, "worker threads (0 = hardware)");
  run->add_flag("--dense-log", dense_log, "also emit per-evaluation logs");
  run->add_option("--cec-dir", cec_dir, "directory holding cec data files");
  run->add_option("-o,--out", out_dir, "output directory");

  auto* list = app.add_subcommand("list", "list problems and optimizers");
  bool list_problems = false, list_optimizers = false;
  list->add_flag("--problems", list_problems, "only problem specs");
  list->add_flag("--optimizers", list_optimizers, "only optimizer names");

  auto* rank = app.add_subcommand("rank", "recompute summary.csv ranks");
  std::string summary_path;
  bool rank_write = false;
  rank->add_option("summary", summary_path, "summary.csv to rerank")
      ->required();
  rank->add_flag("-w,--write", rank_write, "rewrite the file in place");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) {
      vdo::ExperimentConfig cfg;
      if (!config_path.empty()) cfg = vdo::load_config(config_path);
      if (!problems.empty()) cfg.problems = problems;
      if (!optimizers.empty()) {
        cfg.optimizers.clear();
        for (const auto& name : optimizers)
          cfg.optimizers.push_back({name, {}});
      }
      if (run->count("--runs")) cfg.runs = runs;
      if (run->count("--population")) cfg.population = population;
      if (run->count("--max-fes")) cfg.max_fes = max_fes;
      if (run->count("--seed")) cfg.base_seed = base_seed;
      if (run->count("--threads")) cfg.threads = threads;
      if (run->count("--dense-log")) cfg.dense_log = dense_log;
      if (run->count("--cec-dir")) cfg.cec_dir = cec_dir;
      if (run->count("--out")) cfg.out_dir = out_dir;
      for (const auto& raw : params) apply_param_override(cfg, raw);
      return run_command(cfg);
    }
    if (list->parsed()) {
      const bool both = list_problems == list_optimizers;
      if (both || list_problems) {
        std::cout << "problems:\n";
        for (const auto& name : vdo::problem_names())
          std::cout << "  " << name << '\n';
      }
      if (both || list_optimizers) {
        std::cout << "optimizers:\n";
        for (const auto& name : vdo::optimizer_names())
          std::cout << "  " << name << '\n';
      }
      return 0;
    }
    if (rank->parsed()) {
      const std::string reranked = vdo::rerank_summary_csv(summary_path);
      if (rank_write) {
        std::ofstream out(summary_path, std::ios::binary);
        if (!out) throw vdo::IoError("cannot rewrite " + summary_path);
        out << reranked;
      } else {
        std::cout << reranked;
      }
      return 0;
    }
  } catch (const vdo::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const vdo::DataFormatError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return 3;
  } catch (const vdo::UnsupportedFunction& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return 3;
  } catch (const vdo::IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
