#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace hardykit {

/// Finite discrete probability distribution: strictly increasing atoms with
/// positive masses summing to one. Immutable once built; the cumulative
/// sums F(x_i) and 1 - F(x_i-) are precomputed so every operator is a scan.
class FiniteDist {
 public:
  std::size_t size() const noexcept { return atoms_.size(); }
  std::span<const double> atoms() const noexcept { return atoms_; }
  std::span<const double> probs() const noexcept { return probs_; }
  double atom(std::size_t i) const { return atoms_[i]; }
  double prob(std::size_t i) const { return probs_[i]; }

  /// F(x_i); the last entry is exactly 1.
  std::span<const double> cdf_values() const noexcept { return cdf_; }
  /// 1 - F(x_i-), accumulated from the right; the first entry is exactly 1.
  std::span<const double> tail_values() const noexcept { return tail_; }
  double cdf_at(std::size_t i) const { return cdf_[i]; }
  double cdf_left_at(std::size_t i) const { return i == 0 ? 0.0 : cdf_[i - 1]; }
  double tail_at(std::size_t i) const { return tail_[i]; }

  /// Number of atoms <= x.
  std::size_t count_le(double x) const;
  /// Number of atoms < x.
  std::size_t count_lt(double x) const;

  /// True when the atoms are an equal-mass quantile grid of a continuous law.
  bool is_grid() const noexcept { return grid_; }

  double mean() const;

  /// Sorted, validated input; weights are divided by their sum.
  static FiniteDist from_sorted(std::vector<double> atoms, std::vector<double> weights,
                                bool grid = false);

 private:
  FiniteDist() = default;

  std::vector<double> atoms_;
  std::vector<double> probs_;
  std::vector<double> cdf_;
  std::vector<double> tail_;
  bool grid_ = false;
};

/// Real function on a carrier's support, index-aligned with its atoms.
class SupportFunction {
 public:
  SupportFunction() = default;
  explicit SupportFunction(std::vector<double> values) : values_(std::move(values)) {}

  static SupportFunction constant(std::size_t n, double c) {
    return SupportFunction(std::vector<double>(n, c));
  }
  /// Evaluates f at every atom of d.
  static SupportFunction tabulate(const FiniteDist& d, const std::function<double(double)>& f);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }

 private:
  std::vector<double> values_;
};

/// Finite measure on strictly increasing atoms with nonnegative masses.
class WeightedMeasure {
 public:
  std::span<const double> atoms() const noexcept { return atoms_; }
  std::span<const double> masses() const noexcept { return masses_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  double total() const;
  /// Mass of (-inf, x].
  double mass_le(double x) const;
  /// Mass of [x, inf).
  double mass_ge(double x) const;

  friend WeightedMeasure make_weighted_measure(std::vector<double> atoms,
                                               std::vector<double> masses);

 private:
  std::vector<double> atoms_;
  std::vector<double> masses_;
};

WeightedMeasure make_weighted_measure(std::vector<double> atoms, std::vector<double> masses);
/// The measure w dF.
WeightedMeasure weighted(const FiniteDist& d, const SupportFunction& w);

enum class GridFamily { Uniform01, Exponential, Pareto, CustomQuantile };

GridFamily parse_grid_family(std::string_view name);

/// Quantile function tabulated at increasing levels in [0, 1]; linear in between.
struct QuantileTable {
  std::vector<double> levels;
  std::vector<double> values;
};

struct GridSpec {
  GridFamily family = GridFamily::Uniform01;
  std::size_t n_atoms = 2;
  /// rate for Exponential, shape for Pareto; unused otherwise.
  double parameter = 1.0;
  QuantileTable table;
};

FiniteDist make_finite_dist(std::vector<double> atoms, std::vector<double> probs);
/// Like make_finite_dist but accepts any positive weights and normalizes them.
FiniteDist make_from_weights(std::vector<double> atoms, std::vector<double> weights);
FiniteDist degenerate(double at);
/// Equal mass on `n` equally spaced points from lo to hi inclusive.
FiniteDist uniform_points(double lo, double hi, std::size_t n);
FiniteDist bernoulli(double q);

double cdf(const FiniteDist& d, double x);
double cdf_left(const FiniteDist& d, double x);
/// Smallest atom x with F(x) >= u, for u in (0, 1].
double quantile(const FiniteDist& d, double u);
/// Index of the atom returned by quantile(); used by samplers with u in [0, 1).
std::size_t quantile_index(const FiniteDist& d, double u);

/// Quantile function of a continuous family at level u in (0, 1).
double family_quantile(const GridSpec& spec, double u);
/// N equal-mass atoms at F^{-1}((i - 1/2)/N), i = 1..N.
FiniteDist grid_of_continuous(const GridSpec& spec);

/// Law of max(X_1..X_p): F^p at every atom.
FiniteDist max_order_dist(const FiniteDist& d, unsigned p);

/// Conditional law given X <= c (F(.)/F(c)); requires mass below c.
FiniteDist conditional_le(const FiniteDist& d, double c);
/// Conditional law given X > c.
FiniteDist conditional_gt(const FiniteDist& d, double c);
/// Law of -X.
FiniteDist reflect(const FiniteDist& d);

}  // namespace hardykit
