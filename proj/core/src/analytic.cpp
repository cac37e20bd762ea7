#include "vdo/analytic.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace vdo {

namespace {

constexpr double kPi = std::numbers::pi;

Problem wrap(const std::string& name, std::size_t dim, double lo, double hi,
             ObjectiveFn fn, std::vector<double> best_x) {
  Problem p;
  p.name = name + ":" + std::to_string(dim);
  p.space = SearchSpace::box(dim, lo, hi);
  p.objective = std::move(fn);
  p.best_known_x = std::move(best_x);
  if (!p.best_known_x.empty()) p.best_known = 0.0;
  return p;
}

}  // namespace

double sphere_value(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

double rosenbrock_value(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i + 1] - x[i] * x[i];
    const double b = 1.0 - x[i];
    s += 100.0 * a * a + b * b;
  }
  return s;
}

double rastrigin_value(std::span<const double> x) {
  double s = 10.0 * static_cast<double>(x.size());
  for (double v : x) s += v * v - 10.0 * std::cos(2.0 * kPi * v);
  return s;
}

double ackley_value(std::span<const double> x) {
  const double d = static_cast<double>(x.size());
  double sq = 0.0, cs = 0.0;
  for (double v : x) {
    sq += v * v;
    cs += std::cos(2.0 * kPi * v);
  }
  return -20.0 * std::exp(-0.2 * std::sqrt(sq / d)) - std::exp(cs / d) +
         20.0 + std::numbers::e;
}

double griewank_value(std::span<const double> x) {
  double sum = 0.0, prod = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += x[i] * x[i] / 4000.0;
    prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return sum - prod + 1.0;
}

double zakharov_value(std::span<const double> x) {
  double sq = 0.0, lin = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sq += x[i] * x[i];
    lin += 0.5 * static_cast<double>(i + 1) * x[i];
  }
  return sq + lin * lin + lin * lin * lin * lin;
}

double levy_value(std::span<const double> x) {
  const std::size_t d = x.size();
  auto w = [&](std::size_t i) { return 1.0 + (x[i] - 1.0) / 4.0; };
  const double s1 = std::sin(kPi * w(0));
  double s = s1 * s1;
  for (std::size_t i = 0; i + 1 < d; ++i) {
    const double wi = w(i);
    const double t = std::sin(kPi * wi + 1.0);
    s += (wi - 1.0) * (wi - 1.0) * (1.0 + 10.0 * t * t);
  }
  const double wd = w(d - 1);
  const double t = std::sin(2.0 * kPi * wd);
  return s + (wd - 1.0) * (wd - 1.0) * (1.0 + t * t);
}

double bent_cigar_value(std::span<const double> x) {
  if (x.empty()) return 0.0;
  double s = x[0] * x[0];
  for (std::size_t i = 1; i < x.size(); ++i) s += 1e6 * x[i] * x[i];
  return s;
}

double schwefel_value(std::span<const double> x) {
  double s = 418.9829 * static_cast<double>(x.size());
  for (double v : x) s -= v * std::sin(std::sqrt(std::fabs(v)));
  return s;
}

Problem sphere(std::size_t dim) {
  return wrap("sphere", dim, -100.0, 100.0, sphere_value,
              std::vector<double>(dim, 0.0));
}

Problem rosenbrock(std::size_t dim) {
  return wrap("rosenbrock", dim, -30.0, 30.0, rosenbrock_value,
              std::vector<double>(dim, 1.0));
}

Problem rastrigin(std::size_t dim) {
  return wrap("rastrigin", dim, -5.12, 5.12, rastrigin_value,
              std::vector<double>(dim, 0.0));
}

Problem ackley(std::size_t dim) {
  return wrap("ackley", dim, -32.768, 32.768, ackley_value,
              std::vector<double>(dim, 0.0));
}

Problem griewank(std::size_t dim) {
  return wrap("griewank", dim, -600.0, 600.0, griewank_value,
              std::vector<double>(dim, 0.0));
}

Problem zakharov(std::size_t dim) {
  return wrap("zakharov", dim, -5.0, 10.0, zakharov_value,
              std::vector<double>(dim, 0.0));
}

Problem levy(std::size_t dim) {
  return wrap("levy", dim, -10.0, 10.0, levy_value,
              std::vector<double>(dim, 1.0));
}

Problem bent_cigar(std::size_t dim) {
  return wrap("bent_cigar", dim, -100.0, 100.0, bent_cigar_value,
              std::vector<double>(dim, 0.0));
}

Problem schwefel(std::size_t dim) {
  Problem p = wrap("schwefel", dim, -500.0, 500.0, schwefel_value, {});
  return p;
}

Problem constant(std::size_t dim, double value) {
  Problem p;
  p.name = "constant:" + std::to_string(dim);
  p.space = SearchSpace::box(dim, -1.0, 1.0);
  p.objective = [value](std::span<const double>) { return value; };
  p.best_known = value;
  return p;
}

std::vector<Problem> analytic_suite(std::size_t dim) {
  std::vector<Problem> suite;
  suite.push_back(sphere(dim));
  suite.push_back(rosenbrock(dim));
  suite.push_back(rastrigin(dim));
  suite.push_back(ackley(dim));
  suite.push_back(griewank(dim));
  suite.push_back(zakharov(dim));
  suite.push_back(levy(dim));
  suite.push_back(bent_cigar(dim));
  suite.push_back(schwefel(dim));
  return suite;
}

}  // namespace vdo
