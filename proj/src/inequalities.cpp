#include "hardykit/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "hardykit/error.hpp"
#include "hardykit/kernels.hpp"
#include "hardykit/operators.hpp"

namespace hardykit {

namespace {

void require_p_gt1(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw Error(ErrorCode::BadExponent, "need p > 1");
}

void require_p_ge1(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw Error(ErrorCode::BadExponent, "need p >= 1");
}

bool is_integer(double p) { return std::floor(p) == p; }

void require_nonnegative(const SupportFunction& psi) {
  for (double v : psi.values()) {
    if (!(v >= 0.0)) throw Error(ErrorCode::NegativeValue, "psi must be nonnegative");
  }
}

void require_positive(const SupportFunction& psi) {
  for (double v : psi.values()) {
    if (!(v > 0.0)) throw Error(ErrorCode::NonpositivePsi, "psi must be strictly positive");
  }
}

void require_grid(const FiniteDist& d) {
  if (!d.is_grid()) {
    throw Error(ErrorCode::RequiresGrid, "needs a quantile grid of a continuous law");
  }
}

void require_nonincreasing(const SupportFunction& psi) {
  for (std::size_t i = 1; i < psi.size(); ++i) {
    if (psi[i] > psi[i - 1]) throw Error(ErrorCode::NotMonotone, "psi must be nonincreasing");
  }
}

void require_ratio_nonincreasing(const FiniteDist& d, const SupportFunction& psi) {
  for (std::size_t i = 1; i < psi.size(); ++i) {
    if (psi[i] / d.cdf_at(i) > psi[i - 1] / d.cdf_at(i - 1)) {
      throw Error(ErrorCode::NotMonotone, "psi/F must be nonincreasing");
    }
  }
}

void check_inputs(const FiniteDist& d, const SupportFunction& psi) {
  require_aligned(d, psi);
  require_nonnegative(psi);
}

// E g(X)^p for g given on the atoms.
double moment(const FiniteDist& d, const SupportFunction& g, double p) {
  return kernels::weighted_power_sum(g.values(), d.probs(), p);
}

}  // namespace

double grid_tol(const FiniteDist& d) { return 10.0 / static_cast<double>(d.size()); }

EvalReport hardy_eval(const FiniteDist& d, const SupportFunction& psi, double p, double tol) {
  require_p_gt1(p);
  check_inputs(d, psi);
  const double c = hardy_constant(p);
  return upper_report("hardy", moment(d, hardy_avg(d, psi), p), c * moment(d, psi, p), c, tol);
}

EvalReport hardy_strict_variant_eval(const FiniteDist& d, const SupportFunction& psi, double p,
                                     double tol) {
  require_p_gt1(p);
  check_inputs(d, psi);
  double lhs = 0.0, below = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double f_left = d.cdf_left_at(i);
    if (f_left > 0.0) lhs += d.prob(i) * std::pow(below / f_left, p);
    below += psi[i] * d.prob(i);
  }
  const double c = hardy_constant(p);
  auto r = upper_report("hardy_strict", lhs, c * moment(d, psi, p), c, tol);
  r.asserted = false;
  return r;
}

EvalReport hardy_right_eval(const FiniteDist& d, const SupportFunction& psi, double p,
                            double tol) {
  require_p_gt1(p);
  check_inputs(d, psi);
  const double c = hardy_constant(p);
  return upper_report("hardy_right", moment(d, right_avg(d, psi), p), c * moment(d, psi, p), c,
                      tol);
}

EvalReport hardy_two_sided_eval(const FiniteDist& d, const SupportFunction& psi, double p,
                                double c, double tol) {
  require_p_gt1(p);
  check_inputs(d, psi);
  const auto left = hardy_avg(d, psi);
  const auto right = right_avg(d, psi);
  const std::size_t k = d.count_le(c);
  double lhs = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    lhs += d.prob(i) * std::pow(i < k ? left[i] : right[i], p);
  }
  const double k_c = hardy_constant(p);
  return upper_report("hardy_two_sided", lhs, k_c * moment(d, psi, p), k_c, tol);
}

EvalReport hardy_ordered_eval(const FiniteDist& dX, const FiniteDist& dY,
                              const SupportFunction& psi, double p, OrderedVariant variant) {
  require_p_gt1(p);
  check_inputs(dY, psi);
  if (variant == OrderedVariant::A) {
    for (double a : dX.atoms()) {
      if (dY.count_le(a) != dY.count_lt(a)) {
        throw Error(ErrorCode::SharedAtom, "X and Y share an atom");
      }
    }
  } else {
    require_grid(dX);
  }
  // Both cdfs are step functions, so comparing them at every atom of either
  // law covers the whole line. Equal cdfs built from different cumulative
  // sums may differ in the last bits, hence the slack.
  constexpr double kSlack = 1e-12;
  auto ordered_at = [&](double x) {
    const double f = cdf(dX, x), g = cdf(dY, x);
    return variant == OrderedVariant::A ? f <= g + kSlack : f + kSlack >= g;
  };
  for (double a : dX.atoms()) {
    if (!ordered_at(a)) throw Error(ErrorCode::OrderingViolated, "stochastic order violated");
  }
  for (double a : dY.atoms()) {
    if (!ordered_at(a)) throw Error(ErrorCode::OrderingViolated, "stochastic order violated");
  }
  std::vector<double> prefix(dY.size() + 1, 0.0);
  for (std::size_t j = 0; j < dY.size(); ++j) prefix[j + 1] = prefix[j] + psi[j] * dY.prob(j);
  double lhs = 0.0;
  for (std::size_t i = 0; i < dX.size(); ++i) {
    const std::size_t k = dY.count_le(dX.atom(i));
    const double num = prefix[k];
    const double den = variant == OrderedVariant::A ? (k == 0 ? 0.0 : dY.cdf_at(k - 1))
                                                    : dX.cdf_at(i);
    if (num > 0.0) lhs += dX.prob(i) * std::pow(num / den, p);
  }
  const double c = hardy_constant(p);
  const double tol = variant == OrderedVariant::A ? kDefaultTol : grid_tol(dX);
  return upper_report(variant == OrderedVariant::A ? "hardy_ordered_a" : "hardy_ordered_b", lhs,
                      c * moment(dY, psi, p), c, tol);
}

EvalReport copson_eval(const FiniteDist& d, const SupportFunction& psi, double p, double tol) {
  require_p_ge1(p);
  check_inputs(d, psi);
  const double c = copson_constant(p);
  return upper_report("copson", moment(d, copson_dual(d, psi), p), c * moment(d, psi, p), c, tol);
}

EvalReport reverse_hardy_eval(const FiniteDist& d, const SupportFunction& psi, double p,
                              ReverseHardyVariant variant) {
  check_inputs(d, psi);
  require_nonincreasing(psi);
  switch (variant) {
    case ReverseHardyVariant::Density: {
      require_p_gt1(p);
      require_grid(d);
      double rhs = 0.0;
      for (std::size_t i = 0; i < d.size(); ++i) {
        rhs += std::pow(psi[i], p) * (1.0 - std::pow(d.cdf_at(i), p - 1.0)) * d.prob(i);
      }
      const double c = p / (p - 1.0);
      return lower_report("reverse_hardy_density", moment(d, hardy_avg(d, psi), p), c * rhs, c,
                          grid_tol(d));
    }
    case ReverseHardyVariant::General:
      require_p_ge1(p);
      return lower_report("reverse_hardy_general", moment(d, hardy_avg(d, psi), p),
                          moment(d, psi, p), 1.0);
    case ReverseHardyVariant::Integer: {
      if (!(p >= 2.0) || !is_integer(p) || p > 64.0) {
        throw Error(ErrorCode::BadExponent, "integer variant needs integer p >= 2");
      }
      const FiniteDist top = max_order_dist(d, static_cast<unsigned>(p));
      // T_m = sum_{y >= m} p_y F(y)^{-p}
      std::vector<double> t(d.size());
      for (std::size_t i = 0; i < d.size(); ++i) t[i] = d.prob(i) * std::pow(d.cdf_at(i), -p);
      kernels::reverse_scan(t, t);
      double rhs = 0.0;
      for (std::size_t i = 0; i < d.size(); ++i) rhs += top.prob(i) * std::pow(psi[i], p) * t[i];
      return lower_report("reverse_hardy_integer", moment(d, hardy_avg(d, psi), p), rhs, 1.0);
    }
  }
  throw Error(ErrorCode::OutOfRange, "unknown variant");
}

EvalReport reverse_copson_eval(const FiniteDist& d, const SupportFunction& psi, double p,
                               ReverseCopsonVariant variant, bool probe) {
  check_inputs(d, psi);
  require_p_ge1(p);
  const double lhs = moment(d, copson_dual(d, psi), p);
  const double n = static_cast<double>(d.size());
  switch (variant) {
    case ReverseCopsonVariant::Nrc0:
      require_grid(d);
      require_ratio_nonincreasing(d, psi);
      return lower_report("reverse_copson_nrc0", lhs, moment(d, psi, p), 1.0, grid_tol(d));
    case ReverseCopsonVariant::Nrc1: {
      require_grid(d);
      require_nonincreasing(psi);
      if (!is_integer(p) && !probe) throw Error(ErrorCode::BadExponent, "nrc1 needs integer p");
      const double c = std::tgamma(p + 1.0);
      // The harmonic-tail sums on a grid carry an O(log^{p-1} N / N) error.
      const double tol = 10.0 * std::pow(std::max(1.0, std::log(n)), p - 1.0) / n;
      auto r = lower_report("reverse_copson_nrc1", lhs, c * moment(d, psi, p), c, tol);
      r.asserted = is_integer(p);
      return r;
    }
    case ReverseCopsonVariant::Nrc2: {
      require_nonincreasing(psi);
      if (!is_integer(p) && !probe) throw Error(ErrorCode::BadExponent, "nrc2 needs integer p");
      auto r = lower_report("reverse_copson_nrc2", lhs, moment(d, psi, p), 1.0);
      r.asserted = is_integer(p);
      return r;
    }
    case ReverseCopsonVariant::Sharpened: {
      require_ratio_nonincreasing(d, psi);
      double rhs = 0.0;
      for (std::size_t i = 0; i < d.size(); ++i) {
        rhs += std::pow(psi[i] * d.cdf_left_at(i) / d.cdf_at(i), p) * d.prob(i);
      }
      return lower_report("reverse_copson_sharpened", lhs, rhs, 1.0);
    }
  }
  throw Error(ErrorCode::OutOfRange, "unknown variant");
}

EvalReport carleman_eval(const FiniteDist& d, const SupportFunction& psi, double tol) {
  require_aligned(d, psi);
  require_positive(psi);
  // exp of a running mean of logs, shifted so constants come out exact.
  const double shift = std::log(psi[0]);
  std::vector<double> m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m[i] = (std::log(psi[i]) - shift) * d.prob(i);
  kernels::inclusive_scan(m, m);
  double lhs = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    lhs += d.prob(i) * std::exp(shift + m[i] / d.cdf_at(i));
  }
  const double e = std::exp(1.0);
  return upper_report("carleman", lhs, e * expectation(d, psi), e, tol);
}

EvalReport carleman_tail_eval(const FiniteDist& d, const SupportFunction& psi, Side side) {
  require_grid(d);
  require_aligned(d, psi);
  require_positive(psi);
  const double shift = std::log(psi[0]);
  std::vector<double> m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m[i] = (std::log(psi[i]) - shift) * d.prob(i);
  const bool left = side == Side::Left;
  if (left) {
    kernels::inclusive_scan(m, m);
  } else {
    kernels::reverse_scan(m, m);
  }
  double lhs = 0.0, rhs = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double den = left ? d.cdf_at(i) : d.tail_at(i);
    const double hazard = d.prob(i) / den;
    lhs += hazard * std::exp(shift + m[i] / den);
    rhs += hazard * psi[i];
  }
  return upper_report(left ? "carleman_tail_left" : "carleman_tail_right", lhs, rhs, 1.0,
                      grid_tol(d));
}

EvalReport weighted_hardy_eval(const WeightedProblem& w, const SupportFunction& psi, double tol) {
  require_nonnegative(psi);
  const auto sides = weighted_sides(w, psi);
  const double c = k_qp(w.p, w.q) * muckenhoupt_B(w);
  const double rhs = std::isinf(c) ? c : c * sides.rhs_norm;
  return upper_report("weighted_hardy", sides.lhs, rhs, c, tol);
}

namespace {

void check_lemma_inputs(std::span<const double> a, std::span<const double> w, double p) {
  require_p_gt1(p);
  if (a.size() != w.size()) throw Error(ErrorCode::LengthMismatch, "a and weights differ");
  if (a.empty()) throw Error(ErrorCode::EmptySupport, "no terms");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] >= 0.0) || !(w[i] >= 0.0)) {
      throw Error(ErrorCode::NegativeValue, "terms and weights must be nonnegative");
    }
  }
  if (!(w[0] > 0.0)) throw Error(ErrorCode::NonpositiveProb, "first weight must be positive");
}

double power_sum(std::span<const double> a, std::span<const double> w, double p) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::pow(a[i], p) * w[i];
  return s;
}

}  // namespace

EvalReport lemma_broadbent_check(std::span<const double> a, std::span<const double> w, double p,
                                 double tol) {
  check_lemma_inputs(a, w, p);
  double lhs = 0.0, num = 0.0, den = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    num += a[n] * w[n];
    den += w[n];
    lhs += std::pow(num / den, p) * w[n];
  }
  const double c = hardy_constant(p);
  return upper_report("lemma_broadbent", lhs, c * power_sum(a, w, p), c, tol);
}

EvalReport lemma_copson_check(std::span<const double> a, std::span<const double> w, double p,
                              double tol) {
  check_lemma_inputs(a, w, p);
  const std::size_t m = a.size();
  std::vector<double> tail(m + 1, 0.0);
  double big_p = 0.0;
  std::vector<double> term(m);
  for (std::size_t i = 0; i < m; ++i) {
    big_p += w[i];
    term[i] = a[i] * w[i] / big_p;
  }
  for (std::size_t i = m; i-- > 0;) tail[i] = tail[i + 1] + term[i];
  double lhs = 0.0;
  for (std::size_t n = 0; n < m; ++n) lhs += std::pow(tail[n], p) * w[n];
  const double c = copson_constant(p);
  return upper_report("lemma_copson", lhs, c * power_sum(a, w, p), c, tol);
}

EvalReport lemma_muckenhoupt_check(const FiniteDist& d, const SupportFunction& chi, double gamma,
                                   Side side, double tol) {
  check_inputs(d, chi);
  if (!(gamma > 0.0 && gamma < 1.0)) throw Error(ErrorCode::BadExponent, "need 0 < gamma < 1");
  const std::size_t n = d.size();
  std::vector<double> lhs(n), rhs(n);
  double inner = 0.0, outer = 0.0;
  auto step = [&](std::size_t i) {
    const double mass = chi[i] * d.prob(i);
    inner += mass;
    if (mass > 0.0) outer += gamma * mass * std::pow(inner, gamma - 1.0);
    lhs[i] = outer;
    rhs[i] = std::pow(inner, gamma);
  };
  if (side == Side::Left) {
    for (std::size_t i = 0; i < n; ++i) step(i);
  } else {
    for (std::size_t i = n; i-- > 0;) step(i);
  }
  std::size_t worst = 0;
  double worst_margin = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double margin = (lhs[i] - rhs[i]) / std::max(1.0, rhs[i]);
    if (margin > worst_margin) {
      worst_margin = margin;
      worst = i;
    }
  }
  return upper_report(side == Side::Left ? "lemma_muckenhoupt_left" : "lemma_muckenhoupt_right",
                      lhs[worst], rhs[worst], gamma, tol);
}

}  // namespace hardykit
