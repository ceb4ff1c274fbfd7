#include "hardykit/constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "hardykit/error.hpp"
#include "hardykit/operators.hpp"
#include "hardykit/random_instance.hpp"
#include "hardykit/special.hpp"

namespace hardykit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_pq(double p, double q) {
  if (!(p > 1.0) || !(q >= p) || !std::isfinite(q)) {
    throw Error(ErrorCode::BadExponent, "need 1 < p <= q < inf");
  }
}

void check_problem(const WeightedProblem& w) {
  check_pq(w.p, w.q);
  if (w.U.size() != w.dX.size() || w.V.size() != w.dY.size()) {
    throw Error(ErrorCode::LengthMismatch, "weights not aligned with their distributions");
  }
  for (double u : w.U.values()) {
    if (!(u >= 0.0)) throw Error(ErrorCode::NegativeValue, "U must be nonnegative");
  }
  for (double v : w.V.values()) {
    if (!(v >= 0.0)) throw Error(ErrorCode::NegativeValue, "V must be nonnegative");
  }
}

// nu_j = V_j^{-1/(p-1)} g_j, +inf where V_j = 0.
std::vector<double> nu_masses(const WeightedProblem& w) {
  std::vector<double> nu(w.dY.size());
  for (std::size_t j = 0; j < nu.size(); ++j) {
    nu[j] = w.V[j] == 0.0 ? kInf : std::pow(w.V[j], -1.0 / (w.p - 1.0)) * w.dY.prob(j);
  }
  return nu;
}

// mu(>= y_j) for every Y atom and nu(<= y_j), as cumulative sums.
struct Tails {
  std::vector<double> mu_ge;  // indexed by Y atom
  std::vector<double> nu_le;  // indexed by Y atom
};

Tails tails(const WeightedProblem& w) {
  const std::size_t nx = w.dX.size(), ny = w.dY.size();
  std::vector<double> mu_suffix(nx + 1, 0.0);
  for (std::size_t i = nx; i-- > 0;) mu_suffix[i] = mu_suffix[i + 1] + w.U[i] * w.dX.prob(i);
  Tails t;
  t.mu_ge.resize(ny);
  t.nu_le.resize(ny);
  const auto nu = nu_masses(w);
  double run = 0.0;
  for (std::size_t j = 0; j < ny; ++j) {
    run += nu[j];
    t.nu_le[j] = run;
    t.mu_ge[j] = mu_suffix[w.dX.count_lt(w.dY.atom(j))];
  }
  return t;
}

double b_term(double mu, double nu, double mu_exp, double nu_exp) {
  if (mu == 0.0 || nu == 0.0) return 0.0;
  return std::pow(mu, mu_exp) * std::pow(nu, nu_exp);
}

double sup_term(const WeightedProblem& w, double mu_exp, double nu_exp) {
  check_problem(w);
  // Between atoms nu(<= x) only grows toward the next Y atom while mu(>= x)
  // stays or shrinks, so the supremum is attained at a Y atom.
  const Tails t = tails(w);
  double best = 0.0;
  for (std::size_t j = 0; j < t.mu_ge.size(); ++j) {
    best = std::max(best, b_term(t.mu_ge[j], t.nu_le[j], mu_exp, nu_exp));
  }
  return best;
}

// S_i = sum over Y atoms <= x_i of psi g.
std::vector<double> left_sums(const WeightedProblem& w, std::span<const double> psi) {
  std::vector<double> prefix(w.dY.size() + 1, 0.0);
  for (std::size_t j = 0; j < w.dY.size(); ++j) prefix[j + 1] = prefix[j] + psi[j] * w.dY.prob(j);
  std::vector<double> s(w.dX.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = prefix[w.dY.count_le(w.dX.atom(i))];
  return s;
}

double ratio_of(const WeightedProblem& w, std::span<const double> psi) {
  return weighted_sides(w, SupportFunction(std::vector<double>(psi.begin(), psi.end()))).ratio();
}

// Normalizes so that sum psi^p V g = 1; returns false when psi vanishes.
bool normalize(const WeightedProblem& w, std::vector<double>& psi) {
  double s = 0.0;
  for (std::size_t j = 0; j < psi.size(); ++j) s += std::pow(psi[j], w.p) * w.V[j] * w.dY.prob(j);
  if (!(s > 0.0) || !std::isfinite(s)) return false;
  const double scale = std::pow(s, -1.0 / w.p);
  for (double& v : psi) v *= scale;
  return true;
}

// Multiplicative ascent from psi; returns the best ratio seen on the trajectory.
double ascend(const WeightedProblem& w, std::vector<double> psi, unsigned iterations) {
  const std::size_t nx = w.dX.size(), ny = w.dY.size();
  if (!normalize(w, psi)) return 0.0;
  double best = ratio_of(w, psi);
  std::vector<double> grad_suffix(nx + 1);
  for (unsigned it = 0; it < iterations; ++it) {
    const auto s = left_sums(w, psi);
    grad_suffix[nx] = 0.0;
    for (std::size_t i = nx; i-- > 0;) {
      grad_suffix[i] = grad_suffix[i + 1] + w.dX.prob(i) * w.U[i] * std::pow(s[i], w.q - 1.0);
    }
    for (std::size_t j = 0; j < ny; ++j) {
      const double t = grad_suffix[w.dX.count_lt(w.dY.atom(j))];
      const double u = std::pow(t / w.V[j], 1.0 / (w.p - 1.0));
      psi[j] = std::sqrt(psi[j] * u);
    }
    if (!normalize(w, psi)) break;
    best = std::max(best, ratio_of(w, psi));
  }
  return best;
}

}  // namespace

double hardy_constant(double p) {
  if (!(p > 1.0)) throw Error(ErrorCode::BadExponent, "Hardy constant needs p > 1");
  return std::pow(p / (p - 1.0), p);
}

double copson_constant(double p) {
  if (!(p >= 1.0)) throw Error(ErrorCode::BadExponent, "Copson constant needs p >= 1");
  return std::pow(p, p);
}

double k_pp(double p) {
  if (!(p > 1.0)) throw Error(ErrorCode::BadExponent, "k_pp needs p > 1");
  return p * std::pow(p - 1.0, (1.0 - p) / p);
}

double k_qp(double p, double q) {
  check_pq(p, q);
  if (q - p < 1e-8) return k_pp(p);
  const double r = (q - p) / p;
  const double log_k = (r / q) * (std::log(r) - log_beta(1.0 / r, (q - 1.0) / r));
  return std::exp(log_k);
}

double muckenhoupt_B(const WeightedProblem& w) {
  return sup_term(w, 1.0 / w.q, (w.p - 1.0) / w.p);
}

double muckenhoupt_B_power(const WeightedProblem& w) { return sup_term(w, 1.0, w.p - 1.0); }

double WeightedSides::ratio() const noexcept {
  if (rhs_norm == 0.0) return lhs == 0.0 ? 0.0 : kInf;
  return lhs / rhs_norm;
}

WeightedSides weighted_sides(const WeightedProblem& w, const SupportFunction& psi) {
  check_problem(w);
  if (psi.size() != w.dY.size()) throw Error(ErrorCode::LengthMismatch, "psi not aligned with dY");
  const auto s = left_sums(w, psi.values());
  double lhs = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != 0.0) lhs += w.dX.prob(i) * w.U[i] * std::pow(s[i], w.q);
  }
  double rhs = 0.0;
  for (std::size_t j = 0; j < psi.size(); ++j) {
    if (psi[j] != 0.0) rhs += std::pow(psi[j], w.p) * w.V[j] * w.dY.prob(j);
  }
  return {std::pow(lhs, 1.0 / w.q), std::pow(rhs, 1.0 / w.p)};
}

IndicatorScan indicator_scan(const WeightedProblem& w) {
  check_problem(w);
  const std::size_t nx = w.dX.size(), ny = w.dY.size();
  const Tails t = tails(w);
  // nu(<= x_i) for every X atom.
  std::vector<double> nu_x(nx);
  for (std::size_t i = 0; i < nx; ++i) {
    const std::size_t k = w.dY.count_le(w.dX.atom(i));
    nu_x[i] = k == 0 ? 0.0 : t.nu_le[k - 1];
  }
  // A(z) = sum over x_i <= z of f U nu(<= x_i)^q.
  std::vector<double> a_prefix(nx + 1, 0.0);
  for (std::size_t i = 0; i < nx; ++i) {
    const double term = nu_x[i] == 0.0 ? 0.0 : w.dX.prob(i) * w.U[i] * std::pow(nu_x[i], w.q);
    a_prefix[i + 1] = a_prefix[i] + term;
  }
  std::vector<double> mu_suffix(nx + 1, 0.0);
  for (std::size_t i = nx; i-- > 0;) mu_suffix[i] = mu_suffix[i + 1] + w.U[i] * w.dX.prob(i);
  IndicatorScan out;
  out.z.assign(w.dY.atoms().begin(), w.dY.atoms().end());
  out.ratio.resize(ny);
  out.b_term.resize(ny);
  for (std::size_t j = 0; j < ny; ++j) {
    const double nu = t.nu_le[j];
    out.b_term[j] = b_term(t.mu_ge[j], nu, 1.0 / w.q, (w.p - 1.0) / w.p);
    if (!std::isfinite(nu)) {
      out.ratio[j] = out.b_term[j];
      continue;
    }
    const std::size_t k = w.dX.count_le(w.dY.atom(j));
    const double mu_gt = mu_suffix[k];
    const double lhs_q = a_prefix[k] + (nu == 0.0 ? 0.0 : std::pow(nu, w.q) * mu_gt);
    out.ratio[j] = nu == 0.0 ? 0.0 : std::pow(lhs_q, 1.0 / w.q) / std::pow(nu, 1.0 / w.p);
  }
  return out;
}

ConstantsReport estimate_best_constant(const WeightedProblem& w, const SearchConfig& search) {
  if (search.restarts == 0 || search.iterations == 0) {
    throw Error(ErrorCode::BudgetZero, "restarts and iterations must be positive");
  }
  check_problem(w);
  ConstantsReport rep;
  rep.p = w.p;
  rep.q = w.q;
  rep.B = muckenhoupt_B(w);
  rep.k_qp = k_qp(w.p, w.q);
  rep.C_upper = rep.k_qp * rep.B;
  if (!std::isfinite(rep.B)) {
    rep.C_lower = rep.indicator_best = rep.ascent_best = kInf;
    return rep;
  }
  const auto scan = indicator_scan(w);
  std::size_t best_z = 0;
  for (std::size_t j = 0; j < scan.ratio.size(); ++j) {
    if (scan.ratio[j] > scan.ratio[best_z]) best_z = j;
  }
  rep.indicator_best = scan.ratio.empty() ? 0.0 : scan.ratio[best_z];

  const std::size_t ny = w.dY.size();
  std::vector<double> base(ny);
  for (std::size_t j = 0; j < ny; ++j) base[j] = std::pow(w.V[j], -1.0 / (w.p - 1.0));

  const auto restarts = static_cast<long>(search.restarts);
  std::vector<double> best(search.restarts, 0.0);
#pragma omp parallel for schedule(dynamic)
  for (long r = 0; r < restarts; ++r) {
    std::vector<double> psi = base;
    if (r == 1) {
      for (std::size_t j = best_z + 1; j < ny; ++j) psi[j] = 0.0;
    } else if (r >= 2) {
      std::mt19937_64 rng(instance_seed(search.seed, static_cast<std::uint64_t>(r)));
      std::normal_distribution<double> normal;
      for (double& v : psi) v *= std::exp(normal(rng));
    }
    best[static_cast<std::size_t>(r)] = ascend(w, std::move(psi), search.iterations);
  }
  rep.ascent_best = *std::max_element(best.begin(), best.end());
  rep.C_lower = std::max(rep.indicator_best, rep.ascent_best);
  return rep;
}

double SharpnessReport::hardy_best() const noexcept { return std::max(hardy_family, hardy_ascent); }
double SharpnessReport::copson_best() const noexcept {
  return std::max(copson_family, copson_ascent);
}

std::vector<double> default_eps_scan() {
  return {0.5, 0.3, 0.2, 0.1, 0.05, 0.03, 0.02, 0.01, 0.005, 0.002, 0.001, 0.0};
}

SharpnessReport sharpness_scan(const FiniteDist& d, double p, const std::vector<double>& eps,
                               const SearchConfig& search) {
  if (!(p > 1.0)) throw Error(ErrorCode::BadExponent, "sharpness scan needs p > 1");
  SharpnessReport rep;
  rep.p = p;
  const std::size_t n = d.size();
  for (double e : eps) {
    SupportFunction psi{std::vector<double>(n)};
    for (std::size_t i = 0; i < n; ++i) {
      const double u = 0.5 * (d.cdf_left_at(i) + d.cdf_at(i));
      psi[i] = std::pow(u, -1.0 / p + e);
    }
    std::vector<double> pw(n);
    for (std::size_t i = 0; i < n; ++i) pw[i] = std::pow(psi[i], p) * d.prob(i);
    double denom = 0.0;
    for (double v : pw) denom += v;
    const auto h = hardy_avg(d, psi);
    const auto c = copson_dual(d, psi);
    double hl = 0.0, cl = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      hl += std::pow(h[i], p) * d.prob(i);
      cl += std::pow(c[i], p) * d.prob(i);
    }
    rep.hardy_family = std::max(rep.hardy_family, hl / denom);
    rep.copson_family = std::max(rep.copson_family, cl / denom);
  }

  std::vector<double> u(n), v(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = std::pow(d.cdf_at(i), -p);
  const WeightedProblem hardy{d, d, SupportFunction(u), SupportFunction::constant(n, 1.0), p, p};
  rep.hardy_ascent = std::pow(estimate_best_constant(hardy, search).C_lower, p);

  // Copson with phi = psi / F on the reflected law is weighted Hardy with
  // U = 1 and V = F^p.
  const FiniteDist r = reflect(d);
  for (std::size_t i = 0; i < n; ++i) v[i] = std::pow(d.cdf_at(n - 1 - i), p);
  const WeightedProblem copson{r, r, SupportFunction::constant(n, 1.0), SupportFunction(v), p, p};
  rep.copson_ascent = std::pow(estimate_best_constant(copson, search).C_lower, p);
  return rep;
}

}  // namespace hardykit
