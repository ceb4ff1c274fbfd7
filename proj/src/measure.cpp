#include "hardykit/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hardykit/error.hpp"

namespace hardykit {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateAtom: return "DuplicateAtom";
    case ErrorCode::NonpositiveProb: return "NonpositiveProb";
    case ErrorCode::EmptySupport: return "EmptySupport";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::BadExponent: return "BadExponent";
    case ErrorCode::NegativeValue: return "NegativeValue";
    case ErrorCode::NonpositivePsi: return "NonpositivePsi";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::RequiresGrid: return "RequiresGrid";
    case ErrorCode::OrderingViolated: return "OrderingViolated";
    case ErrorCode::SharedAtom: return "SharedAtom";
    case ErrorCode::BudgetZero: return "BudgetZero";
    case ErrorCode::EmptySample: return "EmptySample";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::BadGrid: return "BadGrid";
    case ErrorCode::NotCentered: return "NotCentered";
    case ErrorCode::BadSampleSize: return "BadSampleSize";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

void check_atoms_finite(std::span<const double> atoms) {
  for (double a : atoms) {
    if (!std::isfinite(a)) throw Error(ErrorCode::OutOfRange, "atoms must be finite");
  }
}

// Sorts atoms ascending with weights permuted in lockstep; rejects ties.
void sort_lockstep(std::vector<double>& atoms, std::vector<double>& weights) {
  std::vector<std::size_t> order(atoms.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return atoms[a] < atoms[b]; });
  std::vector<double> sa(atoms.size()), sw(atoms.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    sa[i] = atoms[order[i]];
    sw[i] = weights[order[i]];
  }
  for (std::size_t i = 1; i < sa.size(); ++i) {
    if (sa[i] == sa[i - 1]) {
      std::ostringstream msg;
      msg << "atom " << sa[i] << " appears more than once";
      throw Error(ErrorCode::DuplicateAtom, msg.str());
    }
  }
  atoms = std::move(sa);
  weights = std::move(sw);
}

void check_weights(std::span<const double> atoms, std::span<const double> weights) {
  if (atoms.empty()) throw Error(ErrorCode::EmptySupport, "no atoms");
  if (atoms.size() != weights.size()) {
    throw Error(ErrorCode::LengthMismatch, "atoms and probs differ in length");
  }
  check_atoms_finite(atoms);
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::NonpositiveProb, "probabilities must be positive and finite");
    }
  }
}

}  // namespace

FiniteDist FiniteDist::from_sorted(std::vector<double> atoms, std::vector<double> weights,
                                   bool grid) {
  check_weights(atoms, weights);
  for (std::size_t i = 1; i < atoms.size(); ++i) {
    if (!(atoms[i - 1] < atoms[i])) {
      throw Error(atoms[i - 1] == atoms[i] ? ErrorCode::DuplicateAtom : ErrorCode::BadGrid,
                  "atoms must be strictly increasing");
    }
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  FiniteDist d;
  const std::size_t n = atoms.size();
  d.atoms_ = std::move(atoms);
  d.probs_ = std::move(weights);
  for (double& p : d.probs_) p /= total;
  d.cdf_.resize(n);
  d.tail_.resize(n);
  double run = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    run += d.probs_[i];
    d.cdf_[i] = run;
  }
  run = 0.0;
  for (std::size_t i = n; i-- > 0;) {
    run += d.probs_[i];
    d.tail_[i] = run;
  }
  d.cdf_[n - 1] = 1.0;
  d.tail_[0] = 1.0;
  // Clamp rounding overshoot so cdf stays in [0, 1].
  for (double& c : d.cdf_) c = std::min(c, 1.0);
  for (double& t : d.tail_) t = std::min(t, 1.0);
  d.grid_ = grid;
  return d;
}

std::size_t FiniteDist::count_le(double x) const {
  return static_cast<std::size_t>(std::upper_bound(atoms_.begin(), atoms_.end(), x) -
                                  atoms_.begin());
}

std::size_t FiniteDist::count_lt(double x) const {
  return static_cast<std::size_t>(std::lower_bound(atoms_.begin(), atoms_.end(), x) -
                                  atoms_.begin());
}

double FiniteDist::mean() const {
  double m = 0.0;
  for (std::size_t i = 0; i < size(); ++i) m += atoms_[i] * probs_[i];
  return m;
}

SupportFunction SupportFunction::tabulate(const FiniteDist& d,
                                          const std::function<double(double)>& f) {
  std::vector<double> v(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) v[i] = f(d.atom(i));
  return SupportFunction(std::move(v));
}

double WeightedMeasure::total() const {
  return std::accumulate(masses_.begin(), masses_.end(), 0.0);
}

double WeightedMeasure::mass_le(double x) const {
  const auto end = std::upper_bound(atoms_.begin(), atoms_.end(), x) - atoms_.begin();
  return std::accumulate(masses_.begin(), masses_.begin() + end, 0.0);
}

double WeightedMeasure::mass_ge(double x) const {
  const auto begin = std::lower_bound(atoms_.begin(), atoms_.end(), x) - atoms_.begin();
  return std::accumulate(masses_.begin() + begin, masses_.end(), 0.0);
}

WeightedMeasure make_weighted_measure(std::vector<double> atoms, std::vector<double> masses) {
  if (atoms.size() != masses.size()) {
    throw Error(ErrorCode::LengthMismatch, "atoms and masses differ in length");
  }
  check_atoms_finite(atoms);
  for (double m : masses) {
    if (!(m >= 0.0) || !std::isfinite(m)) {
      throw Error(ErrorCode::NegativeValue, "masses must be nonnegative and finite");
    }
  }
  sort_lockstep(atoms, masses);
  WeightedMeasure w;
  w.atoms_ = std::move(atoms);
  w.masses_ = std::move(masses);
  return w;
}

WeightedMeasure weighted(const FiniteDist& d, const SupportFunction& w) {
  if (w.size() != d.size()) throw Error(ErrorCode::LengthMismatch, "weight not aligned");
  std::vector<double> masses(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) masses[i] = w[i] * d.prob(i);
  return make_weighted_measure(std::vector<double>(d.atoms().begin(), d.atoms().end()),
                               std::move(masses));
}

GridFamily parse_grid_family(std::string_view name) {
  if (name == "uniform01" || name == "uniform") return GridFamily::Uniform01;
  if (name == "exponential" || name == "exp") return GridFamily::Exponential;
  if (name == "pareto") return GridFamily::Pareto;
  if (name == "custom" || name == "custom-quantile-table") return GridFamily::CustomQuantile;
  throw Error(ErrorCode::UnknownFamily, std::string(name));
}

FiniteDist make_finite_dist(std::vector<double> atoms, std::vector<double> probs) {
  check_weights(atoms, probs);
  const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg << "probabilities sum to " << total;
    throw Error(ErrorCode::NotNormalized, msg.str());
  }
  sort_lockstep(atoms, probs);
  return FiniteDist::from_sorted(std::move(atoms), std::move(probs));
}

FiniteDist make_from_weights(std::vector<double> atoms, std::vector<double> weights) {
  check_weights(atoms, weights);
  sort_lockstep(atoms, weights);
  return FiniteDist::from_sorted(std::move(atoms), std::move(weights));
}

FiniteDist degenerate(double at) { return make_finite_dist({at}, {1.0}); }

FiniteDist uniform_points(double lo, double hi, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::EmptySupport, "uniform with no points");
  if (n == 1) return degenerate(lo);
  if (!(lo < hi)) throw Error(ErrorCode::OutOfRange, "uniform needs lo < hi");
  std::vector<double> atoms(n);
  for (std::size_t i = 0; i < n; ++i) {
    atoms[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  atoms.back() = hi;
  return FiniteDist::from_sorted(std::move(atoms), std::vector<double>(n, 1.0));
}

FiniteDist bernoulli(double q) {
  if (!(q > 0.0 && q < 1.0)) throw Error(ErrorCode::OutOfRange, "Bernoulli needs 0 < q < 1");
  return make_finite_dist({0.0, 1.0}, {1.0 - q, q});
}

double cdf(const FiniteDist& d, double x) {
  const std::size_t k = d.count_le(x);
  return k == 0 ? 0.0 : d.cdf_at(k - 1);
}

double cdf_left(const FiniteDist& d, double x) {
  const std::size_t k = d.count_lt(x);
  return k == 0 ? 0.0 : d.cdf_at(k - 1);
}

std::size_t quantile_index(const FiniteDist& d, double u) {
  const auto cdfs = d.cdf_values();
  const auto it = std::lower_bound(cdfs.begin(), cdfs.end(), u);
  if (it == cdfs.end()) return d.size() - 1;
  return static_cast<std::size_t>(it - cdfs.begin());
}

double quantile(const FiniteDist& d, double u) {
  if (!(u > 0.0 && u <= 1.0)) throw Error(ErrorCode::OutOfRange, "quantile level outside (0,1]");
  return d.atom(quantile_index(d, u));
}

double family_quantile(const GridSpec& spec, double u) {
  switch (spec.family) {
    case GridFamily::Uniform01:
      return u;
    case GridFamily::Exponential:
      if (!(spec.parameter > 0.0)) throw Error(ErrorCode::OutOfRange, "rate must be positive");
      return -std::log1p(-u) / spec.parameter;
    case GridFamily::Pareto:
      if (!(spec.parameter > 0.0)) throw Error(ErrorCode::OutOfRange, "shape must be positive");
      return std::pow(1.0 - u, -1.0 / spec.parameter);
    case GridFamily::CustomQuantile: {
      const auto& t = spec.table;
      if (t.levels.size() < 2 || t.levels.size() != t.values.size()) {
        throw Error(ErrorCode::LengthMismatch, "quantile table needs >= 2 aligned entries");
      }
      if (u <= t.levels.front()) return t.values.front();
      if (u >= t.levels.back()) return t.values.back();
      const auto hi = static_cast<std::size_t>(
          std::upper_bound(t.levels.begin(), t.levels.end(), u) - t.levels.begin());
      const std::size_t lo = hi - 1;
      const double w = (u - t.levels[lo]) / (t.levels[hi] - t.levels[lo]);
      return t.values[lo] + w * (t.values[hi] - t.values[lo]);
    }
  }
  throw Error(ErrorCode::UnknownFamily, "unhandled grid family");
}

FiniteDist grid_of_continuous(const GridSpec& spec) {
  if (spec.n_atoms < 2) throw Error(ErrorCode::OutOfRange, "grid needs at least 2 atoms");
  const std::size_t n = spec.n_atoms;
  std::vector<double> atoms(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    atoms[i] = family_quantile(spec, u);
  }
  return FiniteDist::from_sorted(std::move(atoms), std::vector<double>(n, 1.0), true);
}

FiniteDist max_order_dist(const FiniteDist& d, unsigned p) {
  if (p == 0) throw Error(ErrorCode::BadExponent, "order must be >= 1");
  if (p == 1) return d;
  std::vector<double> probs(d.size());
  double prev = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double cur = std::pow(d.cdf_at(i), static_cast<double>(p));
    probs[i] = cur - prev;
    prev = cur;
  }
  return FiniteDist::from_sorted(std::vector<double>(d.atoms().begin(), d.atoms().end()),
                                 std::move(probs));
}

FiniteDist conditional_le(const FiniteDist& d, double c) {
  const std::size_t k = d.count_le(c);
  if (k == 0) throw Error(ErrorCode::EmptySupport, "no mass at or below the cut");
  return FiniteDist::from_sorted(
      std::vector<double>(d.atoms().begin(), d.atoms().begin() + static_cast<long>(k)),
      std::vector<double>(d.probs().begin(), d.probs().begin() + static_cast<long>(k)));
}

FiniteDist conditional_gt(const FiniteDist& d, double c) {
  const std::size_t k = d.count_le(c);
  if (k == d.size()) throw Error(ErrorCode::EmptySupport, "no mass above the cut");
  return FiniteDist::from_sorted(
      std::vector<double>(d.atoms().begin() + static_cast<long>(k), d.atoms().end()),
      std::vector<double>(d.probs().begin() + static_cast<long>(k), d.probs().end()));
}

FiniteDist reflect(const FiniteDist& d) {
  std::vector<double> atoms(d.atoms().rbegin(), d.atoms().rend());
  for (double& a : atoms) a = -a;
  std::vector<double> probs(d.probs().rbegin(), d.probs().rend());
  return FiniteDist::from_sorted(std::move(atoms), std::move(probs), d.is_grid());
}

}  // namespace hardykit
