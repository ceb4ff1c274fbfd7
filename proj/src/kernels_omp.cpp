#include <algorithm>
#include <vector>

#include "hardykit/kernels.hpp"

namespace hardykit::kernels::omp {

namespace {

std::size_t block_count(std::size_t n) { return (n + kBlock - 1) / kBlock; }

// Per-block partial results, computed in parallel and combined serially in
// block order.
template <class F>
std::vector<double> block_partials(std::size_t n, F&& per_block) {
  const auto nb = static_cast<long>(block_count(n));
  std::vector<double> partial(static_cast<std::size_t>(nb));
#pragma omp parallel for schedule(static)
  for (long b = 0; b < nb; ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
    const std::size_t hi = std::min(n, lo + kBlock);
    partial[static_cast<std::size_t>(b)] = per_block(lo, hi);
  }
  return partial;
}

}  // namespace

void inclusive_scan(std::span<const double> in, std::span<double> out) {
  const std::size_t n = in.size();
  if (n < kParallelMin) {
    serial::inclusive_scan(in, out);
    return;
  }
  // Pass 1: local scans. Pass 2: add the carried-in offset of earlier blocks.
  auto totals = block_partials(n, [&](std::size_t lo, std::size_t hi) {
    serial::inclusive_scan(in.subspan(lo, hi - lo), out.subspan(lo, hi - lo));
    return out[hi - 1];
  });
  std::vector<double> offset(totals.size(), 0.0);
  for (std::size_t b = 1; b < totals.size(); ++b) offset[b] = offset[b - 1] + totals[b - 1];
  const auto nb = static_cast<long>(totals.size());
#pragma omp parallel for schedule(static)
  for (long b = 1; b < nb; ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
    const std::size_t hi = std::min(n, lo + kBlock);
    const double off = offset[static_cast<std::size_t>(b)];
    for (std::size_t i = lo; i < hi; ++i) out[i] += off;
  }
}

void reverse_scan(std::span<const double> in, std::span<double> out) {
  const std::size_t n = in.size();
  if (n < kParallelMin) {
    serial::reverse_scan(in, out);
    return;
  }
  auto totals = block_partials(n, [&](std::size_t lo, std::size_t hi) {
    serial::reverse_scan(in.subspan(lo, hi - lo), out.subspan(lo, hi - lo));
    return out[lo];
  });
  const std::size_t nb = totals.size();
  std::vector<double> offset(nb, 0.0);
  for (std::size_t b = nb - 1; b-- > 0;) offset[b] = offset[b + 1] + totals[b + 1];
#pragma omp parallel for schedule(static)
  for (long b = 0; b < static_cast<long>(nb) - 1; ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
    const std::size_t hi = std::min(n, lo + kBlock);
    const double off = offset[static_cast<std::size_t>(b)];
    for (std::size_t i = lo; i < hi; ++i) out[i] += off;
  }
}

double sum(std::span<const double> in) {
  if (in.size() < kParallelMin) return serial::sum(in);
  const auto partial = block_partials(in.size(), [&](std::size_t lo, std::size_t hi) {
    return serial::sum(in.subspan(lo, hi - lo));
  });
  return serial::sum(partial);
}

double weighted_power_sum(std::span<const double> v, std::span<const double> w, double p) {
  if (v.size() < kParallelMin) return serial::weighted_power_sum(v, w, p);
  const auto partial = block_partials(v.size(), [&](std::size_t lo, std::size_t hi) {
    return serial::weighted_power_sum(v.subspan(lo, hi - lo), w.subspan(lo, hi - lo), p);
  });
  return serial::sum(partial);
}

}  // namespace hardykit::kernels::omp
