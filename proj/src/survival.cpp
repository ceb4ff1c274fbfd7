#include "hardykit/survival.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "hardykit/error.hpp"
#include "hardykit/random_instance.hpp"

namespace hardykit {

double StepEstimate::at(double t) const {
  if (continuity == Continuity::Right) {
    const auto it = std::upper_bound(jump_times.begin(), jump_times.end(), t);
    if (it == jump_times.begin()) return before_first;
    return values[static_cast<std::size_t>(it - jump_times.begin()) - 1];
  }
  const auto it = std::lower_bound(jump_times.begin(), jump_times.end(), t);
  if (it == jump_times.end()) return after_last;
  return values[static_cast<std::size_t>(it - jump_times.begin())];
}

CensoredSample simulate_censored(const FiniteDist& dX, const FiniteDist& dY, std::size_t n,
                                 CensorSide side, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::BadSampleSize, "need n >= 1");
  std::mt19937_64 rng(seed);
  CensoredSample s;
  s.side = side;
  s.times.resize(n);
  s.events.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = dX.atom(quantile_index(dX, uniform01(rng)));
    const double y = dY.atom(quantile_index(dY, uniform01(rng)));
    if (side == CensorSide::Right) {
      s.times[i] = std::min(x, y);
      s.events[i] = x <= y;
    } else {
      s.times[i] = std::max(x, y);
      s.events[i] = x >= y;
    }
  }
  return s;
}

namespace {

void check_sample(const CensoredSample& s, CensorSide want) {
  if (s.times.empty()) throw Error(ErrorCode::EmptySample, "no observations");
  if (s.times.size() != s.events.size()) {
    throw Error(ErrorCode::LengthMismatch, "times and indicators differ in length");
  }
  if (s.side != want) {
    throw Error(ErrorCode::OutOfRange, want == CensorSide::Right
                                           ? "forward estimators need a right-censored sample"
                                           : "backward estimators need a left-censored sample");
  }
}

// Distinct times with event and censoring counts at each.
struct Tally {
  std::vector<double> times;
  std::vector<std::size_t> events;
  std::vector<std::size_t> censored;
};

Tally tally(const CensoredSample& s) {
  std::vector<std::size_t> order(s.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return s.times[a] < s.times[b]; });
  Tally t;
  for (std::size_t idx : order) {
    if (t.times.empty() || t.times.back() != s.times[idx]) {
      t.times.push_back(s.times[idx]);
      t.events.push_back(0);
      t.censored.push_back(0);
    }
    (s.events[idx] ? t.events : t.censored).back() += 1;
  }
  return t;
}

// Hazard jumps d_j / r_j at event times, with r_j the number at risk: at or
// after t_j (forward) or at or before t_j (backward). Events at a time are
// counted before censorings, so a tied censoring stays in the risk set.
struct Jumps {
  std::vector<double> times;
  std::vector<double> dh;
};

Jumps hazard_jumps(const CensoredSample& s, bool forward) {
  const Tally t = tally(s);
  const std::size_t m = t.times.size();
  std::vector<std::size_t> at_obs(m);
  for (std::size_t k = 0; k < m; ++k) at_obs[k] = t.events[k] + t.censored[k];
  std::vector<std::size_t> risk(m);
  if (forward) {
    std::size_t run = 0;
    for (std::size_t k = m; k-- > 0;) risk[k] = run += at_obs[k];
  } else {
    std::size_t run = 0;
    for (std::size_t k = 0; k < m; ++k) risk[k] = run += at_obs[k];
  }
  Jumps j;
  for (std::size_t k = 0; k < m; ++k) {
    if (t.events[k] == 0) continue;
    j.times.push_back(t.times[k]);
    j.dh.push_back(static_cast<double>(t.events[k]) / static_cast<double>(risk[k]));
  }
  return j;
}

}  // namespace

StepEstimate EmpiricalSubdists::H_uc() const {
  StepEstimate e;
  e.jump_times = times;
  for (std::size_t c : uncensored) e.values.push_back(static_cast<double>(c) / n);
  e.after_last = e.values.empty() ? 0.0 : e.values.back();
  return e;
}

StepEstimate EmpiricalSubdists::H_c() const {
  StepEstimate e;
  e.jump_times = times;
  for (std::size_t c : censored) e.values.push_back(static_cast<double>(c) / n);
  e.after_last = e.values.empty() ? 0.0 : e.values.back();
  return e;
}

StepEstimate EmpiricalSubdists::H() const {
  StepEstimate e;
  e.jump_times = times;
  for (std::size_t c : total) e.values.push_back(static_cast<double>(c) / n);
  e.after_last = 1.0;
  return e;
}

EmpiricalSubdists empirical_subdists(const CensoredSample& s) {
  check_sample(s, CensorSide::Right);
  const Tally t = tally(s);
  EmpiricalSubdists h;
  h.n = s.size();
  h.times = t.times;
  std::size_t uc = 0, c = 0;
  for (std::size_t k = 0; k < t.times.size(); ++k) {
    uc += t.events[k];
    c += t.censored[k];
    h.uncensored.push_back(uc);
    h.censored.push_back(c);
    h.total.push_back(uc + c);
  }
  return h;
}

StepEstimate nelson_aalen_forward(const CensoredSample& s) {
  check_sample(s, CensorSide::Right);
  const Jumps j = hazard_jumps(s, true);
  StepEstimate e;
  e.jump_times = j.times;
  double run = 0.0;
  for (double d : j.dh) e.values.push_back(run += d);
  e.after_last = run;
  return e;
}

StepEstimate kaplan_meier_forward(const CensoredSample& s) {
  check_sample(s, CensorSide::Right);
  const Jumps j = hazard_jumps(s, true);
  StepEstimate e;
  e.jump_times = j.times;
  e.before_first = 1.0;
  double surv = 1.0;
  for (double d : j.dh) e.values.push_back(surv *= 1.0 - d);
  e.after_last = surv;
  return e;
}

StepEstimate nelson_aalen_backward(const CensoredSample& s) {
  check_sample(s, CensorSide::Left);
  const Jumps j = hazard_jumps(s, false);
  StepEstimate e;
  e.continuity = Continuity::Left;
  e.jump_times = j.times;
  e.values.resize(j.dh.size());
  double run = 0.0;
  for (std::size_t k = j.dh.size(); k-- > 0;) e.values[k] = run += j.dh[k];
  e.before_first = run;
  e.after_last = 0.0;
  return e;
}

StepEstimate kaplan_meier_backward(const CensoredSample& s) {
  check_sample(s, CensorSide::Left);
  const Jumps j = hazard_jumps(s, false);
  StepEstimate e;
  e.jump_times = j.times;
  e.values.resize(j.dh.size());
  // F(t_k) = prod over later event times only.
  double prod = 1.0;
  for (std::size_t k = j.dh.size(); k-- > 0;) {
    e.values[k] = prod;
    prod *= 1.0 - j.dh[k];
  }
  e.before_first = prod;
  e.after_last = 1.0;
  return e;
}

}  // namespace hardykit
