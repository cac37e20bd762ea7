#include "vdo/cec.hpp"

#include <fstream>
#include <sstream>

#include "vdo/analytic.hpp"
#include "vdo/errors.hpp"

namespace vdo {

namespace {

struct BaseEntry {
  double (*value)(std::span<const double>);
  double bias;
  const char* name;
};

BaseEntry base_for(const std::string& suite, int id) {
  if (suite == "cec2017") {
    switch (id) {
      case 1: return {bent_cigar_value, 100.0, "bent_cigar"};
      case 3: return {zakharov_value, 300.0, "zakharov"};
      case 4: return {rosenbrock_value, 400.0, "rosenbrock"};
      case 5: return {rastrigin_value, 500.0, "rastrigin"};
      case 9: return {levy_value, 900.0, "levy"};
      case 10: return {schwefel_value, 1000.0, "schwefel"};
      default: break;
    }
  } else if (suite == "cec2022") {
    switch (id) {
      case 1: return {zakharov_value, 300.0, "zakharov"};
      case 2: return {rosenbrock_value, 400.0, "rosenbrock"};
      case 5: return {levy_value, 900.0, "levy"};
      default: break;
    }
  } else {
    throw ConfigError("unknown benchmark suite '" + suite +
                      "' (expected cec2017 or cec2022)");
  }
  throw UnsupportedFunction(suite + " f" + std::to_string(id) +
                            " has no supported base function");
}

std::vector<double> read_reals(const std::filesystem::path& file,
                               std::size_t expected, const std::string& shape) {
  std::ifstream in(file);
  if (!in)
    throw DataFormatError("missing data file " + file.string() +
                          "; expected " + shape);
  std::vector<double> values;
  double v = 0.0;
  while (in >> v) values.push_back(v);
  if (!in.eof()) {
    std::string token;
    in.clear();
    in >> token;
    throw DataFormatError("non-numeric token '" + token + "' in " +
                          file.string() + "; expected " + shape);
  }
  if (values.size() != expected)
    throw DataFormatError(file.string() + " holds " +
                          std::to_string(values.size()) + " values; expected " +
                          shape);
  return values;
}

}  // namespace

CecDataBundle load_cec_bundle(const std::filesystem::path& dir,
                              const std::string& suite, int function_id,
                              std::size_t dim) {
  if (dim == 0) throw ConfigError("benchmark dimension must be positive");
  base_for(suite, function_id);  // reject unsupported ids before any I/O

  const std::string stem =
      suite + "_f" + std::to_string(function_id) + "_";
  const std::string d = std::to_string(dim) + "d.txt";

  CecDataBundle bundle;
  bundle.suite = suite;
  bundle.function_id = function_id;
  bundle.dim = dim;
  bundle.bias = base_for(suite, function_id).bias;
  bundle.shift = read_reals(dir / (stem + "shift_" + d), dim,
                            "one row of " + std::to_string(dim) + " reals");
  const std::vector<double> flat =
      read_reals(dir / (stem + "rot_" + d), dim * dim,
                 std::to_string(dim) + " rows of " + std::to_string(dim) +
                     " reals");
  bundle.rotation.assign(dim, std::vector<double>(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      bundle.rotation[i][j] = flat[i * dim + j];
  return bundle;
}

Problem make_cec_problem(const CecDataBundle& bundle) {
  const BaseEntry base = base_for(bundle.suite, bundle.function_id);
  if (bundle.shift.size() != bundle.dim ||
      bundle.rotation.size() != bundle.dim)
    throw ConfigError("bundle data does not match its declared dimension");

  Problem p;
  p.name = bundle.suite + ":" + std::to_string(bundle.function_id) + ":" +
           std::to_string(bundle.dim);
  p.space = SearchSpace::box(bundle.dim, -100.0, 100.0);
  const std::vector<double> shift = bundle.shift;
  const std::vector<std::vector<double>> rot = bundle.rotation;
  const double bias = bundle.bias;
  auto value = base.value;
  p.objective = [shift, rot, bias, value](std::span<const double> x) {
    const std::size_t d = shift.size();
    std::vector<double> y(d), z(d);
    for (std::size_t j = 0; j < d; ++j) y[j] = x[j] - shift[j];
    for (std::size_t i = 0; i < d; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < d; ++j) acc += rot[i][j] * y[j];
      z[i] = acc;
    }
    return value(z) + bias;
  };
  return p;
}

Problem load_cec_problem(const std::filesystem::path& dir,
                         const std::string& suite, int function_id,
                         std::size_t dim) {
  return make_cec_problem(load_cec_bundle(dir, suite, function_id, dim));
}

}  // namespace vdo
