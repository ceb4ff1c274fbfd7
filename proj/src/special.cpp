#include "hardykit/special.hpp"

#include <cmath>

#include "hardykit/error.hpp"

namespace hardykit {

double zeta(double p) {
  if (!(p > 1.0)) throw Error(ErrorCode::BadExponent, "zeta needs p > 1");
  constexpr int K = 100000;
  // Smallest terms first keeps the rounding error near one ulp of the result.
  double s = 0.0;
  for (int k = K - 1; k >= 1; --k) s += std::pow(static_cast<double>(k), -p);
  const double kk = K;
  const double tail = std::pow(kk, 1.0 - p) / (p - 1.0) + 0.5 * std::pow(kk, -p) +
                      p * std::pow(kk, -p - 1.0) / 12.0;
  return s + tail;
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw Error(ErrorCode::OutOfRange, "log_gamma needs x > 0");
  return std::lgamma(x);
}

double log_beta(double a, double b) { return log_gamma(a) + log_gamma(b) - log_gamma(a + b); }

}  // namespace hardykit
