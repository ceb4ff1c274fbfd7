#include "hardykit/report.hpp"

#include <algorithm>
#include <cmath>

namespace hardykit {

double safe_ratio(double lhs, double rhs) noexcept {
  if (rhs == 0.0) return lhs == 0.0 ? 0.0 : std::copysign(HUGE_VAL, lhs);
  return lhs / rhs;
}

EvalReport upper_report(std::string name, double lhs, double rhs, double constant, double tol) {
  EvalReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.constant = constant;
  r.ratio = safe_ratio(lhs, rhs);
  r.tol = tol;
  r.direction = Direction::Upper;
  r.holds = lhs <= rhs + tol * std::max(1.0, std::abs(rhs));
  return r;
}

EvalReport lower_report(std::string name, double lhs, double rhs, double constant, double tol) {
  EvalReport r = upper_report(std::move(name), lhs, rhs, constant, tol);
  r.direction = Direction::Lower;
  r.holds = lhs >= rhs - tol * std::max(1.0, std::abs(rhs));
  return r;
}

}  // namespace hardykit
