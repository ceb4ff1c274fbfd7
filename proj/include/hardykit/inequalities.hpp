#pragma once

#include <span>

#include "hardykit/constants.hpp"
#include "hardykit/measure.hpp"
#include "hardykit/report.hpp"

namespace hardykit {

/// Tolerance for checks on quantile grids of continuous laws: 10/N.
double grid_tol(const FiniteDist& d);

/// E[(H_F psi)^p(X)] <= (p/(p-1))^p E psi^p(Y).
EvalReport hardy_eval(const FiniteDist& d, const SupportFunction& psi, double p,
                      double tol = kDefaultTol);
/// Same with 1[Y < X] and F(X-), 0/0 = 0. May fail; not asserted.
EvalReport hardy_strict_variant_eval(const FiniteDist& d, const SupportFunction& psi, double p,
                                     double tol = kDefaultTol);
/// Right tail: E[(Hbar_F psi)^p] <= (p/(p-1))^p E psi^p.
EvalReport hardy_right_eval(const FiniteDist& d, const SupportFunction& psi, double p,
                            double tol = kDefaultTol);
/// Left average on {X <= c}, right average on {X > c}.
EvalReport hardy_two_sided_eval(const FiniteDist& d, const SupportFunction& psi, double p, double c,
                                double tol = kDefaultTol);

enum class OrderedVariant { A, B };
/// X ~ dX, Y ~ dY, psi on dY's atoms. Variant A: disjoint supports, F <= G,
/// denominator G(X). Variant B: dX a grid, F >= G, denominator F(X).
EvalReport hardy_ordered_eval(const FiniteDist& dX, const FiniteDist& dY, const SupportFunction& psi,
                              double p, OrderedVariant variant);

/// E[(H*_F psi)^p] <= p^p E psi^p, p >= 1.
EvalReport copson_eval(const FiniteDist& d, const SupportFunction& psi, double p,
                       double tol = kDefaultTol);

enum class ReverseHardyVariant { Density, General, Integer };
/// Lower bounds on E[(H_F psi)^p] for nonincreasing psi.
EvalReport reverse_hardy_eval(const FiniteDist& d, const SupportFunction& psi, double p,
                              ReverseHardyVariant variant);

enum class ReverseCopsonVariant { Nrc0, Nrc1, Nrc2, Sharpened };
/// Lower bounds on E[(H*_F psi)^p]. With probe = true, nrc1 (with Gamma(p+1))
/// and nrc2 accept non-integer p and the outcome is recorded, not asserted.
EvalReport reverse_copson_eval(const FiniteDist& d, const SupportFunction& psi, double p,
                               ReverseCopsonVariant variant, bool probe = false);

/// E exp(E(1[Y<=X] log psi(Y) | X) / F(X)) <= e E psi.
EvalReport carleman_eval(const FiniteDist& d, const SupportFunction& psi,
                         double tol = kDefaultTol);

enum class Side { Left, Right };
/// Hazard-weighted rewrite on a grid; left uses dF/F, right uses dLambdabar.
EvalReport carleman_tail_eval(const FiniteDist& d, const SupportFunction& psi, Side side);

/// Mixed-norm weighted Hardy with constant k_qp * B.
EvalReport weighted_hardy_eval(const WeightedProblem& w, const SupportFunction& psi,
                               double tol = kDefaultTol);

/// Finite Hardy sums with weights p_n (p_1 > 0).
EvalReport lemma_broadbent_check(std::span<const double> a, std::span<const double> w, double p,
                                 double tol = kDefaultTol);
/// Finite Copson sums: sum_n (sum_{i>=n} a_i p_i / P_i)^p p_n <= p^p sum a_n^p p_n.
EvalReport lemma_copson_check(std::span<const double> a, std::span<const double> w, double p,
                              double tol = kDefaultTol);
/// gamma sum_{y<=x} chi [sum_{z<=y} chi g]^{gamma-1} g_y <= [sum_{y<=x} chi g]^gamma at every
/// atom x (mirrored for the right side); reports the atom with the worst margin.
EvalReport lemma_muckenhoupt_check(const FiniteDist& d, const SupportFunction& chi, double gamma,
                                   Side side, double tol = kDefaultTol);

}  // namespace hardykit
