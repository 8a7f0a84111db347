#ifndef DICKMAN_POLYLOG_HPP
#define DICKMAN_POLYLOG_HPP

#include "dickman/precision.hpp"
#include "dickman/real.hpp"

namespace dickman {

// Standard polylogarithm Li_k(x) for weights 1..4 at real x <= 1 (x < 1 for
// weight 1), extended below -1 by inversion for weights 2 and 3.
// |result - Li_k(x)| < 10^(-target_digits).
//
// Region dispatch:
//   |x| <= 0.8            direct power series
//   0.8 < x < 1           expansion about 1 in u = log x (zeta coefficients)
//   x = 1                 zeta(k) for k >= 2
//   -1.25 <= x < -0.8     expansion about -1 in u = log(-x) (eta coefficients)
//   x < -1.25             inversion to -1/x (weights 2 and 3 only)
Real li(int weight, const Real& x, const PrecisionContext& ctx);

// Residual of the weight-3 inversion  Li_3(-y) - Li_3(-1/y) =
// -(1/6)log^3 y - (pi^2/6) log y  for y > 1, with the left side evaluated by
// the series about -1 (independent of the inversion code path) whenever
// log y < pi, so the check is not vacuous.
Real li3_inversion_check(const Real& y, const PrecisionContext& ctx);

}  // namespace dickman

#endif
