#include "vdo/engineering.hpp"

#include <cmath>
#include <numbers>

namespace vdo {

namespace {

constexpr double kPi = std::numbers::pi;

// Stand-in for a constraint whose denominator collapsed.
constexpr double kMaxViolation = 1e30;

double guarded(double g) { return std::isfinite(g) ? g : kMaxViolation; }

Problem wrap_engineering(const char* name, SearchSpace space,
                         ConstrainedEval (*eval)(std::span<const double>)) {
  Problem p;
  p.name = name;
  p.space = std::move(space);
  p.objective = [eval](std::span<const double> x) { return eval(x).objective; };
  p.constraints = [eval](std::span<const double> x) { return eval(x).g; };
  return p;
}

}  // namespace

ConstrainedEval pvd_eval(std::span<const double> x) {
  const double z1 = x[0], z2 = x[1], x3 = x[2], x4 = x[3];
  ConstrainedEval out;
  out.objective = 1.7781 * z2 * x3 * x3 + 0.6224 * z1 * x3 * x4 +
                  3.1661 * z1 * z1 * x4 + 19.84 * z1 * z1 * x3;
  out.g = {
      0.0193 * x3 - z1,
      0.00954 * x3 - z2,
      x4 - 240.0,
      1296000.0 - kPi * x3 * x3 * x4 - (4.0 / 3.0) * kPi * x3 * x3 * x3,
  };
  return out;
}

Problem pvd() {
  SearchSpace s;
  s.lb = {0.0625, 0.0625, 10.0, 10.0};
  s.ub = {6.1875, 6.1875, 200.0, 200.0};
  return wrap_engineering("pvd", std::move(s), pvd_eval);
}

Problem pvd_discrete() {
  Problem p = pvd();
  p.name = "pvd_discrete";
  p.space.integer_mask = {1, 1, 0, 0};
  p.space.grid = {0.0625, 0.0625, 1.0, 1.0};
  return p;
}

ConstrainedEval ttd_eval(std::span<const double> x) {
  constexpr double H = 100.0, P = 2.0, sigma = 2.0;
  const double x1 = x[0], x2 = x[1];
  ConstrainedEval out;
  out.objective = (2.0 * std::sqrt(2.0) * x1 + x2) * H;
  const double d12 = std::sqrt(2.0) * x1 * x1 + 2.0 * x1 * x2;
  const double d3 = x1 + std::sqrt(2.0) * x2;
  const double g1 = d12 > 0.0
                        ? (std::sqrt(2.0) * x1 + x2) / d12 * P - sigma
                        : kMaxViolation;
  const double g2 = d12 > 0.0 ? x2 / d12 * P - sigma : kMaxViolation;
  const double g3 = d3 > 0.0 ? P / d3 - sigma : kMaxViolation;
  out.g = {guarded(g1), guarded(g2), guarded(g3)};
  return out;
}

Problem ttd() {
  SearchSpace s;
  s.lb = {1e-6, 1e-6};
  s.ub = {1.0, 1.0};
  return wrap_engineering("ttd", std::move(s), ttd_eval);
}

ConstrainedEval wbd_eval(std::span<const double> x) {
  constexpr double P = 6000.0, L = 14.0, E = 30e6, G = 12e6;
  constexpr double tau_max = 13600.0, sigma_max = 30000.0, delta_max = 0.25;
  const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3];

  const double tau_p = P / std::sqrt(2.0 * x1 * x2);
  const double m = P * (L + x2 / 2.0);
  const double r = std::sqrt(x2 * x2 / 4.0 + (x1 + x3) * (x1 + x3) / 4.0);
  const double j =
      2.0 * (std::sqrt(2.0 * x1 * x2) *
             (x2 * x2 / 12.0 + (x1 + x3) * (x1 + x3) / 4.0));
  const double tau_pp = m * r / j;
  const double tau = std::sqrt(tau_p * tau_p +
                               2.0 * tau_p * tau_pp * x2 / (2.0 * r) +
                               tau_pp * tau_pp);
  const double sigma = 6.0 * P * L / (x4 * x3 * x3);
  const double delta = 4.0 * P * L * L * L / (E * x3 * x3 * x3 * x4);
  const double p_c =
      4.013 * E * std::sqrt(x3 * x3 * std::pow(x4, 6) / 36.0) / (L * L) *
      (1.0 - x3 / (2.0 * L) * std::sqrt(E / (4.0 * G)));

  ConstrainedEval out;
  out.objective = 1.10471 * x1 * x1 * x2 + 0.04811 * x3 * x4 * (14.0 + x2);
  out.g = {
      guarded(tau - tau_max),
      guarded(sigma - sigma_max),
      x1 - x4,
      0.10471 * x1 * x1 + 0.04811 * x3 * x4 * (14.0 + x2) - 5.0,
      0.125 - x1,
      guarded(delta - delta_max),
      guarded(P - p_c),
  };
  return out;
}

Problem wbd() {
  SearchSpace s;
  s.lb = {0.1, 0.1, 0.1, 0.1};
  s.ub = {2.0, 10.0, 10.0, 2.0};
  return wrap_engineering("wbd", std::move(s), wbd_eval);
}

}  // namespace vdo
