#include "vdo/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include <json.hpp>

namespace vdo {

namespace {

using nlohmann::json;

std::string sanitize(const std::string& name) {
  std::string out = name;
  for (char& c : out)
    if (c == ':' || c == '/' || c == '\\') c = '-';
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw IoError("failed writing " + path.string());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

double parse_double(const std::string& token) {
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (end != token.c_str() + token.size())
    throw DataFormatError("bad numeric field '" + token + "'");
  return v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(',', start);
    if (pos == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

void ExperimentConfig::validate() const {
  if (problems.empty()) throw ConfigError("config lists no problems");
  if (optimizers.empty()) throw ConfigError("config lists no optimizers");
  if (runs == 0) throw ConfigError("runs must be at least 1");
  if (population < 2) throw ConfigError("population must be at least 2");
  if (max_fes < population)
    throw ConfigError("max_fes must cover the initial population");
  for (const auto& o : optimizers) resolve_params(o.name, o.params);
}

ExperimentConfig load_config(const std::filesystem::path& json_file) {
  json j;
  try {
    j = json::parse(read_file(json_file));
  } catch (const json::parse_error& e) {
    throw ConfigError("cannot parse " + json_file.string() + ": " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config root must be a JSON object");

  ExperimentConfig cfg;
  auto consume = [&](const char* key) {
    json v;
    if (auto it = j.find(key); it != j.end()) {
      v = *it;
      j.erase(it);
    }
    return v;
  };

  if (json v = consume("problems"); !v.is_null())
    cfg.problems = v.get<std::vector<std::string>>();
  if (json v = consume("optimizers"); !v.is_null()) {
    for (const auto& entry : v) {
      OptimizerSpec spec;
      if (entry.is_string()) {
        spec.name = entry.get<std::string>();
      } else if (entry.is_object()) {
        spec.name = entry.at("name").get<std::string>();
        if (entry.contains("params"))
          for (const auto& [k, val] : entry.at("params").items())
            spec.params[k] = val.get<double>();
        for (const auto& [k, val] : entry.items())
          if (k != "name" && k != "params")
            throw ConfigError("unknown optimizer entry key '" + k + "'");
      } else {
        throw ConfigError("optimizer entries must be names or objects");
      }
      cfg.optimizers.push_back(std::move(spec));
    }
  }
  if (json v = consume("runs"); !v.is_null()) cfg.runs = v.get<std::uint64_t>();
  if (json v = consume("population"); !v.is_null())
    cfg.population = v.get<std::size_t>();
  if (json v = consume("max_fes"); !v.is_null())
    cfg.max_fes = v.get<std::uint64_t>();
  if (json v = consume("base_seed"); !v.is_null())
    cfg.base_seed = v.get<std::uint64_t>();
  if (json v = consume("threads"); !v.is_null())
    cfg.threads = v.get<std::size_t>();
  if (json v = consume("dense_log"); !v.is_null())
    cfg.dense_log = v.get<bool>();
  if (json v = consume("cec_dir"); !v.is_null())
    cfg.cec_dir = v.get<std::string>();
  if (json v = consume("out_dir"); !v.is_null())
    cfg.out_dir = v.get<std::string>();
  if (!j.empty())
    throw ConfigError("unknown config key '" + j.begin().key() + "'");
  cfg.validate();
  return cfg;
}

Stats compute_stats(std::span<const double> values) {
  if (values.empty()) throw ConfigError("stats need at least one value");
  Stats s;
  s.best = values[0];
  s.worst = values[0];
  double sum = 0.0;
  for (double v : values) {
    sum += v;
    s.best = std::min(s.best, v);
    s.worst = std::max(s.worst, v);
  }
  const double n = static_cast<double>(values.size());
  s.mean = sum / n;
  double acc = 0.0;
  for (double v : values) acc += (v - s.mean) * (v - s.mean);
  s.variance = acc / n;
  s.stddev = std::sqrt(s.variance);
  return s;
}

std::vector<int> rank(std::span<const double> values, bool ascending,
                      TiePolicy ties) {
  const std::size_t k = values.size();
  std::vector<int> out(k, 0);
  if (ties == TiePolicy::SharedMin) {
    for (std::size_t i = 0; i < k; ++i) {
      int better = 0;
      for (std::size_t j = 0; j < k; ++j) {
        const bool beats =
            ascending ? values[j] < values[i] : values[j] > values[i];
        if (beats) ++better;
      }
      out[i] = better + 1;
    }
    return out;
  }
  // Ordinal: stable sort from worst to best, then count down; a tied group
  // keeps input order, so its later-listed member lands closer to the end
  // and receives the better rank.
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return ascending ? values[a] > values[b] : values[a] < values[b];
  });
  for (std::size_t pos = 0; pos < k; ++pos)
    out[idx[pos]] = static_cast<int>(k - pos);
  return out;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();

  struct Task {
    std::size_t problem_idx;
    std::size_t optimizer_idx;
    std::uint64_t run_index;
  };

  ProblemOptions popts;
  popts.cec_dir = config.cec_dir;
  std::vector<Problem> problems;
  problems.reserve(config.problems.size());
  for (const auto& spec : config.problems)
    problems.push_back(make_problem(spec, popts));

  std::vector<Task> tasks;
  tasks.reserve(problems.size() * config.optimizers.size() * config.runs);
  for (std::size_t p = 0; p < problems.size(); ++p)
    for (std::size_t o = 0; o < config.optimizers.size(); ++o)
      for (std::uint64_t r = 0; r < config.runs; ++r)
        tasks.push_back({p, o, r});

  std::vector<RunRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&]() {
    while (true) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size() || failed.load()) return;
      const Task& task = tasks[t];
      const OptimizerSpec& opt = config.optimizers[task.optimizer_idx];
      RunSpec spec;
      spec.population = config.population;
      spec.max_fes = config.max_fes;
      spec.seed = config.base_seed + task.run_index;
      spec.params = opt.params;
      spec.options.dense_log = config.dense_log;
      try {
        RunRecord rec;
        rec.problem = problems[task.problem_idx].name;
        rec.optimizer = opt.name;
        rec.run_index = task.run_index;
        rec.seed = spec.seed;
        rec.result = run_optimizer(opt.name, problems[task.problem_idx], spec);
        records[t] = std::move(rec);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };

  std::size_t n_threads = config.threads;
  if (n_threads == 0) {
    n_threads = std::thread::hardware_concurrency();
    if (n_threads == 0) n_threads = 1;
  }
  n_threads = std::min(n_threads, tasks.size());
  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  for (std::size_t i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);

  std::sort(records.begin(), records.end(),
            [](const RunRecord& a, const RunRecord& b) {
              return std::tie(a.problem, a.optimizer, a.run_index) <
                     std::tie(b.problem, b.optimizer, b.run_index);
            });

  // Summary rows per (problem, optimizer), then ranks within each problem.
  ExperimentResult result;
  result.config = config;
  result.records = std::move(records);

  for (std::size_t i = 0; i < result.records.size();) {
    std::size_t j = i;
    std::vector<double> finals;
    while (j < result.records.size() &&
           result.records[j].problem == result.records[i].problem &&
           result.records[j].optimizer == result.records[i].optimizer) {
      finals.push_back(result.records[j].result.best_f);
      ++j;
    }
    SummaryRow row;
    row.problem = result.records[i].problem;
    row.optimizer = result.records[i].optimizer;
    row.stats = compute_stats(finals);
    result.summary.push_back(std::move(row));
    i = j;
  }

  for (std::size_t i = 0; i < result.summary.size();) {
    std::size_t j = i;
    std::vector<double> means, variances;
    while (j < result.summary.size() &&
           result.summary[j].problem == result.summary[i].problem) {
      means.push_back(result.summary[j].stats.mean);
      variances.push_back(result.summary[j].stats.variance);
      ++j;
    }
    const std::vector<int> rm = rank(means);
    const std::vector<int> rv = rank(variances);
    for (std::size_t k = i; k < j; ++k) {
      result.summary[k].rank_m = rm[k - i];
      result.summary[k].rank_v = rv[k - i];
    }
    i = j;
  }
  return result;
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

namespace {

json config_echo(const ExperimentConfig& config) {
  json optimizers = json::array();
  for (const auto& o : config.optimizers) {
    json entry;
    entry["name"] = o.name;
    entry["params"] = resolve_params(o.name, o.params);
    optimizers.push_back(entry);
  }
  json j;
  j["problems"] = config.problems;
  j["optimizers"] = optimizers;
  j["runs"] = config.runs;
  j["population"] = config.population;
  j["max_fes"] = config.max_fes;
  j["base_seed"] = config.base_seed;
  j["threads"] = config.threads;
  j["dense_log"] = config.dense_log;
  j["cec_dir"] = config.cec_dir.string();
  j["out_dir"] = config.out_dir.string();
  j["seed_rule"] = "base_seed + run_index";
  j["variance_convention"] = "population";
  return j;
}

}  // namespace

void emit_outputs(const ExperimentResult& result,
                  const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir / "curves", ec);
  if (ec) throw IoError("cannot create " + (out_dir / "curves").string());
  if (result.config.dense_log) {
    std::filesystem::create_directories(out_dir / "curves_dense", ec);
    if (ec)
      throw IoError("cannot create " + (out_dir / "curves_dense").string());
  }

  std::string summary = "problem,optimizer,mean,variance,std,best,worst,rank_m,rank_v\n";
  for (const auto& row : result.summary) {
    summary += row.problem + ',' + row.optimizer + ',' +
               format_double(row.stats.mean) + ',' +
               format_double(row.stats.variance) + ',' +
               format_double(row.stats.stddev) + ',' +
               format_double(row.stats.best) + ',' +
               format_double(row.stats.worst) + ',' +
               std::to_string(row.rank_m) + ',' + std::to_string(row.rank_v) +
               '\n';
  }
  write_file(out_dir / "summary.csv", summary);

  for (const auto& rec : result.records) {
    const std::string stem = sanitize(rec.problem) + "_" +
                             sanitize(rec.optimizer) + "_" +
                             std::to_string(rec.run_index);
    std::string curve = "iteration,fes,best_f\n";
    for (const auto& pt : rec.result.curve)
      curve += std::to_string(pt.iteration) + ',' + std::to_string(pt.fes) +
               ',' + format_double(pt.best_f) + '\n';
    write_file(out_dir / "curves" / (stem + ".csv"), curve);

    if (result.config.dense_log) {
      std::string dense = "fes,best_f\n";
      for (std::size_t e = 0; e < rec.result.eval_log.size(); ++e)
        dense += std::to_string(e + 1) + ',' +
                 format_double(rec.result.eval_log[e]) + '\n';
      write_file(out_dir / "curves_dense" / (stem + ".csv"), dense);
    }
  }

  write_file(out_dir / "config.json", config_echo(result.config).dump(2) + "\n");
}

ExperimentResult run_and_emit(const ExperimentConfig& config) {
  ExperimentResult result = run_experiment(config);
  emit_outputs(result, config.out_dir);
  return result;
}

std::string rerank_summary_csv(const std::filesystem::path& summary_csv) {
  const std::string text = read_file(summary_csv);
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header))
    throw DataFormatError(summary_csv.string() + " is empty");
  const std::vector<std::string> cols = split_csv_line(header);
  const auto col = [&](const std::string& name) {
    const auto it = std::find(cols.begin(), cols.end(), name);
    if (it == cols.end())
      throw DataFormatError(summary_csv.string() + " lacks column '" + name +
                            "'");
    return static_cast<std::size_t>(it - cols.begin());
  };
  const std::size_t c_problem = col("problem");
  const std::size_t c_mean = col("mean");
  const std::size_t c_variance = col("variance");
  const std::size_t c_rank_m = col("rank_m");
  const std::size_t c_rank_v = col("rank_v");

  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != cols.size())
      throw DataFormatError(summary_csv.string() +
                            ": row has the wrong field count");
    rows.push_back(std::move(fields));
  }

  for (std::size_t i = 0; i < rows.size();) {
    std::size_t j = i;
    std::vector<double> means, variances;
    while (j < rows.size() && rows[j][c_problem] == rows[i][c_problem]) {
      means.push_back(parse_double(rows[j][c_mean]));
      variances.push_back(parse_double(rows[j][c_variance]));
      ++j;
    }
    const std::vector<int> rm = rank(means);
    const std::vector<int> rv = rank(variances);
    for (std::size_t k = i; k < j; ++k) {
      rows[k][c_rank_m] = std::to_string(rm[k - i]);
      rows[k][c_rank_v] = std::to_string(rv[k - i]);
    }
    i = j;
  }

  std::string out = header + '\n';
  for (const auto& fields : rows) {
    for (std::size_t f = 0; f < fields.size(); ++f) {
      out += fields[f];
      out += f + 1 < fields.size() ? ',' : '\n';
    }
  }
  return out;
}

}  // namespace vdo
