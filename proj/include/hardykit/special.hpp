#pragma once

namespace hardykit {

/// Riemann zeta for p > 1: direct sum to K = 1e5 plus Euler-Maclaurin tail.
double zeta(double p);

double log_gamma(double x);
double log_beta(double a, double b);

}  // namespace hardykit
