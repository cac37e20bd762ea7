#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "vdo/problem.hpp"

namespace vdo {

// Shift/rotation data for one shifted-rotated benchmark instance, composed
// as f(x) = base(M (x - o)) + bias over the box [-100, 100]^dim.
//
// Bundles are plain whitespace-separated text files under one directory:
//   <suite>_f<id>_shift_<dim>d.txt   one row of dim reals (the shift o)
//   <suite>_f<id>_rot_<dim>d.txt    dim rows of dim reals (the matrix M)
//
// Supported (suite, id) pairs and their base functions / bias:
//   cec2017: 1 bent_cigar/100, 3 zakharov/300, 4 rosenbrock/400,
//            5 rastrigin/500, 9 levy/900, 10 schwefel/1000
//   cec2022: 1 zakharov/300, 2 rosenbrock/400, 5 levy/900
// Any other id raises UnsupportedFunction.
struct CecDataBundle {
  std::string suite;
  int function_id = 0;
  std::size_t dim = 0;
  std::vector<double> shift;
  std::vector<std::vector<double>> rotation;
  double bias = 0.0;
};

CecDataBundle load_cec_bundle(const std::filesystem::path& dir,
                              const std::string& suite, int function_id,
                              std::size_t dim);

Problem make_cec_problem(const CecDataBundle& bundle);

Problem load_cec_problem(const std::filesystem::path& dir,
                         const std::string& suite, int function_id,
                         std::size_t dim);

}  // namespace vdo
