#include <cmath>

#include "hardykit/kernels.hpp"

namespace hardykit::kernels::serial {

void inclusive_scan(std::span<const double> in, std::span<double> out) {
  double run = 0.0;
  for (std::size_t i = 0; i < in.size(); ++i) {
    run += in[i];
    out[i] = run;
  }
}

void reverse_scan(std::span<const double> in, std::span<double> out) {
  double run = 0.0;
  for (std::size_t i = in.size(); i-- > 0;) {
    run += in[i];
    out[i] = run;
  }
}

double sum(std::span<const double> in) {
  double s = 0.0;
  for (double x : in) s += x;
  return s;
}

double weighted_power_sum(std::span<const double> v, std::span<const double> w, double p) {
  double s = 0.0;
  if (p == 1.0) {
    for (std::size_t i = 0; i < v.size(); ++i) s += w[i] * std::abs(v[i]);
  } else if (p == 2.0) {
    for (std::size_t i = 0; i < v.size(); ++i) s += w[i] * v[i] * v[i];
  } else {
    for (std::size_t i = 0; i < v.size(); ++i) s += w[i] * std::pow(std::abs(v[i]), p);
  }
  return s;
}

}  // namespace hardykit::kernels::serial
