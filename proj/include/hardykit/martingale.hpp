#pragma once

#include <cstdint>
#include <vector>

#include "hardykit/measure.hpp"

namespace hardykit {

/// One-jump counting process N(t) = 1[x <= t], its compensator
/// A(t) = sum over atoms s <= min(t, x) of p_s / (1 - F(s-)), and M = N - A.
struct CountingPath {
  double x = 0.0;
  std::vector<double> grid;
  std::vector<double> N;
  std::vector<double> A;
  std::vector<double> M;
};

CountingPath counting_path(double x, const FiniteDist& d, const std::vector<double>& grid);

/// E N(inf) and E A(inf) as separate exact sums over the atoms; both are 1.
struct ExactMean {
  double EN = 0.0;
  double EA = 0.0;
  double EM() const noexcept { return EN - EA; }
};
ExactMean exact_terminal_mean(const FiniteDist& d);

/// Monte Carlo mean of M(t) on the grid, standardized by the exact variance.
struct MeanCheck {
  double max_abs_mean = 0.0;
  double max_abs_standardized = 0.0;
};
MeanCheck compensator_mean_check(const FiniteDist& d, const std::vector<double>& grid,
                                 std::size_t n_samples, std::uint64_t seed);

/// Window of cdf levels where continuous-law identities are measured. The
/// grid error at level F is about 1 / (N min(F, 1 - F)), and the outermost
/// cells keep an O(1) error, so 10/N needs the window to stay off the ends.
struct Window {
  double lo = 0.125;
  double hi = 0.875;
};

/// Sup gaps between E(psi(X) | F_t) and the integral of R psi against M, over
/// all paths X = atom and all t in t_grid.
struct DoobGap {
  double full = 0.0;
  double inner = 0.0;  // paths and times inside the window
};
DoobGap doob_representation_check(const FiniteDist& d, const SupportFunction& psi,
                                  const std::vector<double>& t_grid, Window window = {});

/// Sup-norm gaps of R L psi = psi, L R psi = psi - E psi,
/// (I - H)(I - H*) psi = psi and (I - H*)(I - H) psi = psi - E psi.
struct CompositionGaps {
  double rl = 0.0;
  double lr = 0.0;
  double hh_star = 0.0;
  double h_star_h = 0.0;
  double rl_full = 0.0;
  double lr_full = 0.0;
  double hh_star_full = 0.0;
  double h_star_h_full = 0.0;
};
CompositionGaps composition_identities_check(const FiniteDist& d, const SupportFunction& psi,
                                             Window window = {});

}  // namespace hardykit
