#pragma once

#include <cstdint>
#include <vector>

#include "hardykit/measure.hpp"

namespace hardykit {

/// (p/(p-1))^p, p > 1.
double hardy_constant(double p);
/// p^p, p >= 1.
double copson_constant(double p);

/// p (p-1)^{(1-p)/p}.
double k_pp(double p);
/// Bliss-type mixed-norm factor with r = (q-p)/p; falls back to k_pp when q - p < 1e-8.
double k_qp(double p, double q);

/// Weighted Hardy problem: X ~ dX carries U, Y ~ dY carries V and psi.
struct WeightedProblem {
  FiniteDist dX;
  FiniteDist dY;
  SupportFunction U;
  SupportFunction V;
  double p = 2.0;
  double q = 2.0;
};

/// sup_x [int_{[x,inf)} U dF]^{1/q} [int_{(-inf,x]} V^{-1/(p-1)} dG]^{(p-1)/p}.
/// +infinity when an atom with V = 0 lies below a positive U-tail.
double muckenhoupt_B(const WeightedProblem& w);
/// The q = p form without roots: sup_x int_{[x,inf)} U dF [int_{(-inf,x]} V^{-1/(p-1)} dG]^{p-1}.
double muckenhoupt_B_power(const WeightedProblem& w);

/// {E([sum_{y<=X} psi g]^q U(X))}^{1/q} and {E psi^p V}^{1/p}.
struct WeightedSides {
  double lhs = 0.0;
  double rhs_norm = 0.0;
  double ratio() const noexcept;
};
WeightedSides weighted_sides(const WeightedProblem& w, const SupportFunction& psi);

/// Ratio of the test function V^{-1/(p-1)} 1[y <= z] at every atom z of dY,
/// next to the Muckenhoupt term at z. Each ratio is at least its term.
struct IndicatorScan {
  std::vector<double> z;
  std::vector<double> ratio;
  std::vector<double> b_term;
};
IndicatorScan indicator_scan(const WeightedProblem& w);

struct SearchConfig {
  unsigned restarts = 8;
  unsigned iterations = 200;
  std::uint64_t seed = 0;
};

struct ConstantsReport {
  double B = 0.0;
  double k_qp = 0.0;
  double C_lower = 0.0;
  double C_upper = 0.0;
  double p = 2.0;
  double q = 2.0;
  double indicator_best = 0.0;
  double ascent_best = 0.0;
};

/// Lower bound on the best constant C by maximizing the ratio over psi >= 0.
ConstantsReport estimate_best_constant(const WeightedProblem& w, const SearchConfig& search = {});

/// Best ratio E[(H psi)^p] / E psi^p (Hardy) and E[(H* psi)^p] / E psi^p
/// (Copson) found on d, from the family psi = u^{-1/p + eps} at the cell
/// midpoint levels u and from weighted-problem ascent.
struct SharpnessReport {
  double p = 2.0;
  double hardy_family = 0.0;
  double hardy_ascent = 0.0;
  double copson_family = 0.0;
  double copson_ascent = 0.0;
  double hardy_best() const noexcept;
  double copson_best() const noexcept;
};
SharpnessReport sharpness_scan(const FiniteDist& d, double p, const std::vector<double>& eps,
                               const SearchConfig& search = {});
std::vector<double> default_eps_scan();

}  // namespace hardykit
