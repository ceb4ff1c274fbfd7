#include "hardykit/martingale.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hardykit/error.hpp"
#include "hardykit/operators.hpp"
#include "hardykit/random_instance.hpp"

namespace hardykit {

namespace {

void check_grid(const std::vector<double>& grid) {
  if (grid.empty()) throw Error(ErrorCode::EmptyGrid, "no evaluation times");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i - 1] < grid[i])) throw Error(ErrorCode::BadGrid, "grid must be increasing");
  }
}

void require_grid(const FiniteDist& d) {
  if (!d.is_grid()) {
    throw Error(ErrorCode::RequiresGrid, "needs a quantile grid of a continuous law");
  }
}

// Lambdabar at the last atom <= t, 0 before the support.
double hazard_at(const FiniteDist& d, const std::vector<double>& hazard, double t) {
  const std::size_t k = d.count_le(t);
  return k == 0 ? 0.0 : hazard[k - 1];
}

bool inside(const FiniteDist& d, std::size_t i, Window w) {
  return d.cdf_at(i) >= w.lo && d.cdf_at(i) <= w.hi;
}

double sup_gap(std::span<const double> a, std::span<const double> b, double shift,
               const FiniteDist& d, const Window* w) {
  double g = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (w != nullptr && !inside(d, i, *w)) continue;
    g = std::max(g, std::abs(a[i] - (b[i] - shift)));
  }
  return g;
}

}  // namespace

CountingPath counting_path(double x, const FiniteDist& d, const std::vector<double>& grid) {
  check_grid(grid);
  const auto hz = forward_hazard(d).values;
  CountingPath path;
  path.x = x;
  path.grid = grid;
  for (double t : grid) {
    const double n = x <= t ? 1.0 : 0.0;
    const double a = hazard_at(d, hz, std::min(t, x));
    path.N.push_back(n);
    path.A.push_back(a);
    path.M.push_back(n - a);
  }
  return path;
}

ExactMean exact_terminal_mean(const FiniteDist& d) {
  const auto hz = forward_hazard(d).values;
  ExactMean m;
  for (std::size_t i = 0; i < d.size(); ++i) {
    m.EN += d.prob(i);
    m.EA += d.prob(i) * hz[i];
  }
  return m;
}

MeanCheck compensator_mean_check(const FiniteDist& d, const std::vector<double>& grid,
                                 std::size_t n_samples, std::uint64_t seed) {
  check_grid(grid);
  if (n_samples < 100) throw Error(ErrorCode::BadSampleSize, "need at least 100 samples");
  // M(t) depends on the path only through the atom hit, so the Monte Carlo
  // mean is a weighted sum of atom frequencies. Samples are drawn in fixed
  // chunks with split seeds; the counts do not depend on the thread count.
  constexpr long kChunks = 64;
  const std::size_t n = d.size();
  std::vector<std::vector<std::size_t>> counts(kChunks, std::vector<std::size_t>(n, 0));
#pragma omp parallel for schedule(static)
  for (long c = 0; c < kChunks; ++c) {
    const std::size_t lo = n_samples * static_cast<std::size_t>(c) / kChunks;
    const std::size_t hi = n_samples * static_cast<std::size_t>(c + 1) / kChunks;
    std::mt19937_64 rng(instance_seed(seed, static_cast<std::uint64_t>(c)));
    auto& local = counts[static_cast<std::size_t>(c)];
    for (std::size_t s = lo; s < hi; ++s) ++local[quantile_index(d, uniform01(rng))];
  }
  std::vector<double> freq(n, 0.0);
  for (const auto& local : counts) {
    for (std::size_t i = 0; i < n; ++i) freq[i] += static_cast<double>(local[i]);
  }
  const auto hz = forward_hazard(d).values;
  MeanCheck out;
  const double ns = static_cast<double>(n_samples);
  for (double t : grid) {
    double mean = 0.0, var = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double x = d.atom(i);
      const double m = (x <= t ? 1.0 : 0.0) - hazard_at(d, hz, std::min(t, x));
      mean += freq[i] * m;
      var += d.prob(i) * m * m;
    }
    mean /= ns;
    const double se = std::sqrt(var / ns);
    const double z = se > 0.0 ? std::abs(mean) / se : (mean == 0.0 ? 0.0 : HUGE_VAL);
    out.max_abs_mean = std::max(out.max_abs_mean, std::abs(mean));
    out.max_abs_standardized = std::max(out.max_abs_standardized, z);
  }
  return out;
}

DoobGap doob_representation_check(const FiniteDist& d, const SupportFunction& psi,
                                  const std::vector<double>& t_grid, Window window) {
  require_grid(d);
  require_aligned(d, psi);
  check_grid(t_grid);
  double scale = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) scale += std::abs(psi[i]) * d.prob(i);
  if (std::abs(expectation(d, psi)) > 1e-9 * std::max(1.0, scale)) {
    throw Error(ErrorCode::NotCentered, "psi must have mean zero");
  }
  const std::size_t n = d.size();
  const auto r = residual_R(d, psi);
  const auto lr = residual_L(d, r);
  const auto rbar = right_avg(d, psi);
  // Integral of R psi against dA up to atom k: sum_{s <= k} R psi(s) p_s / (1 - F(s-)).
  std::vector<double> comp(n);
  double run = 0.0;
  for (std::size_t i = 0; i < n; ++i) comp[i] = run += r[i] * d.prob(i) / d.tail_at(i);

  DoobGap gap;
  // Paths already stopped: the integral is L R psi(x), the target psi(x).
  for (std::size_t i = 0; i < n; ++i) {
    if (d.atom(i) > t_grid.back()) break;
    const double g = std::abs(lr[i] - psi[i]);
    gap.full = std::max(gap.full, g);
    if (inside(d, i, window)) gap.inner = std::max(gap.inner, g);
  }
  // Paths still running at t: the integral is -comp(t), the target Hbar psi(t+).
  for (double t : t_grid) {
    const std::size_t k = d.count_le(t);
    if (k == n) continue;  // every path has jumped
    const double integral = k == 0 ? 0.0 : -comp[k - 1];
    const double g = std::abs(integral - rbar[k]);
    gap.full = std::max(gap.full, g);
    if (k > 0 && inside(d, k - 1, window)) gap.inner = std::max(gap.inner, g);
  }
  return gap;
}

CompositionGaps composition_identities_check(const FiniteDist& d, const SupportFunction& psi,
                                             Window window) {
  require_grid(d);
  require_aligned(d, psi);
  const double mean = expectation(d, psi);
  const auto rl = residual_R(d, residual_L(d, psi));
  const auto lr = residual_L(d, residual_R(d, psi));

  auto minus = [](const SupportFunction& a, const SupportFunction& b) {
    SupportFunction out(std::vector<double>(a.values().begin(), a.values().end()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
  };
  const auto i_minus_hstar = minus(psi, copson_dual(d, psi));
  const auto hh = minus(i_minus_hstar, hardy_avg(d, i_minus_hstar));
  const auto i_minus_h = minus(psi, hardy_avg(d, psi));
  const auto hsh = minus(i_minus_h, copson_dual(d, i_minus_h));

  CompositionGaps g;
  g.rl = sup_gap(rl.values(), psi.values(), 0.0, d, &window);
  g.lr = sup_gap(lr.values(), psi.values(), mean, d, &window);
  g.hh_star = sup_gap(hh.values(), psi.values(), 0.0, d, &window);
  g.h_star_h = sup_gap(hsh.values(), psi.values(), mean, d, &window);
  g.rl_full = sup_gap(rl.values(), psi.values(), 0.0, d, nullptr);
  g.lr_full = sup_gap(lr.values(), psi.values(), mean, d, nullptr);
  g.hh_star_full = sup_gap(hh.values(), psi.values(), 0.0, d, nullptr);
  g.h_star_h_full = sup_gap(hsh.values(), psi.values(), mean, d, nullptr);
  return g;
}

}  // namespace hardykit
