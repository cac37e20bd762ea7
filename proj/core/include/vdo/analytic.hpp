#pragma once

#include <span>
#include <vector>

#include "vdo/problem.hpp"

namespace vdo {

// Raw kernels for the analytic benchmark functions. All minimize to 0 at
// the conventional optimum except schwefel, whose textbook constant leaves a
// residual of order 1e-5 per dimension.
double sphere_value(std::span<const double> x);
double rosenbrock_value(std::span<const double> x);
double rastrigin_value(std::span<const double> x);
double ackley_value(std::span<const double> x);
double griewank_value(std::span<const double> x);
double zakharov_value(std::span<const double> x);
double levy_value(std::span<const double> x);
double bent_cigar_value(std::span<const double> x);
double schwefel_value(std::span<const double> x);

// Problem wrappers with their conventional box bounds.
Problem sphere(std::size_t dim);       // [-100, 100]
Problem rosenbrock(std::size_t dim);   // [-30, 30]
Problem rastrigin(std::size_t dim);    // [-5.12, 5.12]
Problem ackley(std::size_t dim);       // [-32.768, 32.768]
Problem griewank(std::size_t dim);     // [-600, 600]
Problem zakharov(std::size_t dim);     // [-5, 10]
Problem levy(std::size_t dim);         // [-10, 10]
Problem bent_cigar(std::size_t dim);   // [-100, 100]
Problem schwefel(std::size_t dim);     // [-500, 500]

// Constant objective, useful for smoke tests.
Problem constant(std::size_t dim, double value);

// Every analytic problem above at the given dimension.
std::vector<Problem> analytic_suite(std::size_t dim);

}  // namespace vdo
