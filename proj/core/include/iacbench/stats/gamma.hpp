#pragma once

namespace iacbench::stats {

// Regularized upper incomplete gamma function Q(a, x) = Γ(a, x) / Γ(a).
// Series expansion for x < a + 1, Lentz continued fraction otherwise.
// Absolute error is below 1e-12 over the chi-squared range used here.
double regularized_gamma_q(double a, double x);

// Upper-tail probability of the chi-squared distribution with one degree of
// freedom: P(X >= x) = Q(1/2, x/2).
double chi_squared_sf_1df(double x);

} // namespace iacbench::stats
