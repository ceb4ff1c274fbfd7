#pragma once

#include <cstddef>
#include <span>

// Scan and reduction kernels behind every operator. The serial versions are
// the reference; the OpenMP versions split the input into fixed-size blocks so
// the result depends only on the input, never on the thread count.
namespace hardykit::kernels {

inline constexpr std::size_t kBlock = 4096;
// Below this length the OpenMP entry points run the serial code.
inline constexpr std::size_t kParallelMin = std::size_t{1} << 15;

namespace serial {
// out[i] = in[0] + ... + in[i]
void inclusive_scan(std::span<const double> in, std::span<double> out);
// out[i] = in[i] + ... + in[n-1]
void reverse_scan(std::span<const double> in, std::span<double> out);
double sum(std::span<const double> in);
// sum of w[i] * |v[i]|^p
double weighted_power_sum(std::span<const double> v, std::span<const double> w, double p);
}  // namespace serial

namespace omp {
void inclusive_scan(std::span<const double> in, std::span<double> out);
void reverse_scan(std::span<const double> in, std::span<double> out);
double sum(std::span<const double> in);
double weighted_power_sum(std::span<const double> v, std::span<const double> w, double p);
}  // namespace omp

using omp::inclusive_scan;
using omp::reverse_scan;
using omp::sum;
using omp::weighted_power_sum;

}  // namespace hardykit::kernels
