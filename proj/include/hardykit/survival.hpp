#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hardykit/measure.hpp"

namespace hardykit {

/// Right: (Z, delta) = (min(X, Y), 1[X <= Y]). Left: (W, gamma) = (max(U, V), 1[U >= V]).
enum class CensorSide { Right, Left };

struct CensoredSample {
  std::vector<double> times;
  std::vector<std::uint8_t> events;  // 1 = event observed
  CensorSide side = CensorSide::Right;

  std::size_t size() const noexcept { return times.size(); }
};

enum class Continuity { Right, Left };

/// Step function given by its values at the jump times. Right-continuous:
/// f(t) = value at the last jump <= t, else before_first. Left-continuous:
/// f(t) = value at the first jump >= t, else after_last.
struct StepEstimate {
  std::vector<double> jump_times;
  std::vector<double> values;
  double before_first = 0.0;
  double after_last = 0.0;
  Continuity continuity = Continuity::Right;

  double at(double t) const;
};

/// X from dX and Y from dY (U and V for the left side); deterministic in seed.
CensoredSample simulate_censored(const FiniteDist& dX, const FiniteDist& dY, std::size_t n,
                                 CensorSide side, std::uint64_t seed);

/// Counts at every distinct observed time; H_uc + H_c = H holds in integers.
struct EmpiricalSubdists {
  std::vector<double> times;
  std::vector<std::size_t> uncensored;  // cumulative event count at times[k]
  std::vector<std::size_t> censored;
  std::vector<std::size_t> total;
  std::size_t n = 0;

  StepEstimate H_uc() const;
  StepEstimate H_c() const;
  StepEstimate H() const;
};
EmpiricalSubdists empirical_subdists(const CensoredSample& s);

/// Jumps d_j / r_j with r_j = #{Z >= t_j}; nondecreasing, right-continuous.
StepEstimate nelson_aalen_forward(const CensoredSample& s);
/// Survival prod_{t_j <= t} (1 - d_j / r_j).
StepEstimate kaplan_meier_forward(const CensoredSample& s);
/// Jumps d_j / l_j with l_j = #{W <= t_j}, summed over t_j >= t; left-continuous.
StepEstimate nelson_aalen_backward(const CensoredSample& s);
/// Distribution function prod_{t_j > t} (1 - d_j / l_j).
StepEstimate kaplan_meier_backward(const CensoredSample& s);

}  // namespace hardykit
