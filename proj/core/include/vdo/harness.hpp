#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "vdo/registry.hpp"

namespace vdo {

struct OptimizerSpec {
  std::string name;
  ParamMap params;  // overrides; the emitted config echoes the full set
};

// A batch of seeded runs: every problem crossed with every optimizer, run
// `runs` times with seeds base_seed + run_index (run r of every pair shares
// a seed). Runs execute on a thread pool; results are aggregated in a fixed
// order so outputs never depend on scheduling.
struct ExperimentConfig {
  std::vector<std::string> problems;
  std::vector<OptimizerSpec> optimizers;
  std::uint64_t runs = 10;
  std::size_t population = 50;
  std::uint64_t max_fes = 20000;
  std::uint64_t base_seed = 1;
  std::size_t threads = 0;  // 0 picks the hardware concurrency
  bool dense_log = false;
  std::filesystem::path cec_dir;
  std::filesystem::path out_dir = "results";

  void validate() const;
};

// Reads a config from JSON. Optimizer entries are either plain names or
// {"name": ..., "params": {...}} objects; unknown keys are rejected.
ExperimentConfig load_config(const std::filesystem::path& json_file);

struct RunRecord {
  std::string problem;
  std::string optimizer;
  std::uint64_t run_index = 0;
  std::uint64_t seed = 0;
  RunResult result;
};

struct Stats {
  double mean = 0.0;
  double variance = 0.0;  // population convention, divides by the count
  double stddev = 0.0;
  double best = 0.0;
  double worst = 0.0;
};

Stats compute_stats(std::span<const double> values);

enum class TiePolicy {
  // Tied values share the smallest rank of their group and the following
  // rank numbers are skipped: [1, 1, 2] ranks as [1, 1, 3].
  SharedMin,
  // Every value gets a distinct consecutive rank; within a tied group the
  // later-listed value takes the better rank: [1, 1, 2] ranks as [2, 1, 3].
  Ordinal,
};

// Ranks values 1 = best. ascending ranks small values best; flip it for
// scores where larger is better.
std::vector<int> rank(std::span<const double> values, bool ascending = true,
                      TiePolicy ties = TiePolicy::SharedMin);

struct SummaryRow {
  std::string problem;
  std::string optimizer;
  Stats stats;    // over the final best_f of each run
  int rank_m = 0; // rank of the mean among optimizers on this problem
  int rank_v = 0; // rank of the variance among optimizers on this problem
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<RunRecord> records;    // sorted by (problem, optimizer, run)
  std::vector<SummaryRow> summary;   // sorted by (problem, optimizer)
};

ExperimentResult run_experiment(const ExperimentConfig& config);

// Writes summary.csv, curves/<problem>_<optimizer>_<run>.csv, optional
// curves_dense/ logs and config.json into out_dir. Two calls with the same
// result produce byte-identical files.
void emit_outputs(const ExperimentResult& result,
                  const std::filesystem::path& out_dir);

// run_experiment followed by emit_outputs into config.out_dir.
ExperimentResult run_and_emit(const ExperimentConfig& config);

// Recomputes the rank columns of an emitted summary.csv from its mean and
// variance columns and returns the re-ranked CSV text.
std::string rerank_summary_csv(const std::filesystem::path& summary_csv);

// Shortest decimal text that parses back to exactly the same double.
std::string format_double(double v);

}  // namespace vdo
