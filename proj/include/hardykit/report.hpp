#pragma once

#include <string>

namespace hardykit {

inline constexpr double kDefaultTol = 1e-10;

/// upper: lhs <= rhs is the claim; lower: lhs >= rhs.
enum class Direction { Upper, Lower };

/// Both sides of one inequality instance.
struct EvalReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double constant = 1.0;
  double ratio = 0.0;  // lhs / rhs with 0/0 = 0
  double tol = kDefaultTol;
  bool holds = true;
  Direction direction = Direction::Upper;
  // False for evaluators whose inequality is allowed to fail (counterexamples,
  // conjecture probes); a failing unasserted report is not a violation.
  bool asserted = true;

  bool violated() const noexcept { return asserted && !holds; }
};

double safe_ratio(double lhs, double rhs) noexcept;

/// holds = lhs <= rhs + tol * max(1, rhs).
EvalReport upper_report(std::string name, double lhs, double rhs, double constant,
                        double tol = kDefaultTol);
/// holds = lhs >= rhs - tol * max(1, rhs).
EvalReport lower_report(std::string name, double lhs, double rhs, double constant,
                        double tol = kDefaultTol);

}  // namespace hardykit
