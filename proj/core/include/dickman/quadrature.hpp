#ifndef DICKMAN_QUADRATURE_HPP
#define DICKMAN_QUADRATURE_HPP

#include <functional>

#include "dickman/precision.hpp"
#include "dickman/real.hpp"

namespace dickman {

struct QuadratureResult {
  Real value;
  Real error_estimate;  // |difference of the last two refinement levels|
  int levels_used = 0;
  long evaluations = 0;
};

struct QuadratureOptions {
  int level_cap = 12;
  int min_levels = 3;
  // extra decimal digits of agreement demanded beyond target_digits
  // (defaults to the context guard).
  int extra_digits = -1;
};

using Integrand = std::function<Real(const Real&)>;

// Tanh-sinh (double-exponential) quadrature of f over (a, b). f must be
// finite on the open interval; integrable log-power endpoint singularities
// are fine. Refinement stops once successive levels agree to
// 10^(-(target_digits+guard)) relative to the running value (with an absolute
// floor for integrals that are genuinely zero); hitting the level cap first
// raises NonConvergenceError carrying the best estimate. A non-finite sample
// raises EvaluationError with the offending abscissa.
QuadratureResult integrate(const Integrand& f, const Real& a, const Real& b,
                           const PrecisionContext& ctx,
                           const QuadratureOptions& opt = {});

// Integral of f over [a, b] with 0 < a < b computed as
// Integral f(e^u) e^u du over [log a, log b]; tames poly(log x)/x integrands.
QuadratureResult integrate_logspace(const Integrand& f, const Real& a,
                                    const Real& b, const PrecisionContext& ctx,
                                    const QuadratureOptions& opt = {});

}  // namespace dickman

#endif
