#pragma once

#include <span>

#include "vdo/problem.hpp"

namespace vdo {

// Raw objective and constraint values (g <= 0 feasible) for a design point.
struct ConstrainedEval {
  double objective;
  std::vector<double> g;
};

// Pressure vessel design. x = (shell thickness, head thickness, inner
// radius, shell length); thicknesses in [0.0625, 6.1875], radius and length
// in [10, 200]. Four constraints: two minimum-thickness rules, the length
// cap and the minimum enclosed volume.
ConstrainedEval pvd_eval(std::span<const double> x);
Problem pvd();
// Same problem with the thicknesses restricted to multiples of 0.0625.
Problem pvd_discrete();

// Three-bar truss sizing. x = (outer bar area, middle bar area), both in
// [1e-6, 1]. Three stress constraints; degenerate denominators are treated
// as maximal violations.
ConstrainedEval ttd_eval(std::span<const double> x);
Problem ttd();

// Welded beam design. x = (weld thickness, weld length, beam height, beam
// thickness). Seven constraints: shear stress, bending stress, weld/beam
// thickness ordering, cost cap, minimum weld thickness, deflection and
// buckling load.
ConstrainedEval wbd_eval(std::span<const double> x);
Problem wbd();

}  // namespace vdo
