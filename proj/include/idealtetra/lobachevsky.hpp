#pragma once

namespace idealtetra {

// Lobachevsky function
//
//   L(theta) = -int_0^theta log|2 sin t| dt,
//
// odd and pi-periodic. Fast evaluator with absolute error below 1e-12:
// the argument is reduced to [0, pi/2] by the symmetries and the integrand
// singularity is split off analytically,
//
//   L(x) = x - x log(2x) + sum_{n>=1} zeta(2n)/(n(2n+1)) x^(2n+1)/pi^(2n),
//
// which converges geometrically with ratio (x/pi)^2 <= 1/4.
double lobachevsky(double theta);

// Independent oracle: direct numerical integration of the defining
// integral using tanh-sinh quadrature on subintervals split at multiples
// of pi, so the logarithmic singularities sit at endpoints only. Returns
// the integral within abs_tol; ToleranceUnreachable when abs_tol < 1e-14
// or refinement fails to converge.
double lobachevsky_quadrature(double theta, double abs_tol);

}  // namespace idealtetra
