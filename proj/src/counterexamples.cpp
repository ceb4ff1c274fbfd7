#include "hardykit/counterexamples.hpp"

#include <cmath>

#include "hardykit/error.hpp"

namespace hardykit {

namespace {

void check_q(double q) {
  if (!(q > 0.0 && q < 1.0)) throw Error(ErrorCode::OutOfRange, "need 0 < q < 1");
}

void check_case(double q, double p, double a, double b) {
  check_q(q);
  if (!(p > 1.0)) throw Error(ErrorCode::BadExponent, "need p > 1");
  if (!(a >= 0.0 && b >= 0.0)) throw Error(ErrorCode::NegativeValue, "need a, b >= 0");
}

double mean_power(double q, double p, double a, double b) {
  return (1.0 - q) * std::pow(a, p) + q * std::pow(b, p);
}

// Relative slack for closed-form comparisons.
bool exceeds(double lhs, double rhs) { return lhs > rhs + 1e-12 * std::fmax(1.0, rhs); }

}  // namespace

BernoulliCase strict_variant_case(double q, double p) {
  check_case(q, p, 1.0, 0.0);
  BernoulliCase c;
  c.q = q;
  c.p = p;
  c.a = 1.0;
  c.b = 0.0;
  c.lhs_closed = q;
  c.rhs_closed = std::pow(p / (p - 1.0), p) * (1.0 - q);
  c.threshold = 1.0 / (1.0 + std::pow(1.0 - 1.0 / p, p));
  c.violated = q > *c.threshold;
  return c;
}

BernoulliCase hardy_bound_case(double q, double p, double a, double b) {
  check_case(q, p, a, b);
  BernoulliCase c;
  c.q = q;
  c.p = p;
  c.a = a;
  c.b = b;
  c.lhs_closed = (1.0 - q) * std::pow(a, p) + q * std::pow((1.0 - q) * a + q * b, p);
  c.rhs_closed = (1.0 + q) * mean_power(q, p, a, b);
  c.violated = exceeds(c.lhs_closed, c.rhs_closed);
  return c;
}

BernoulliCase copson_bound_case(double q, double p, double a, double b) {
  check_case(q, p, a, b);
  BernoulliCase c;
  c.q = q;
  c.p = p;
  c.a = a;
  c.b = b;
  c.lhs_closed = (1.0 - q) * std::pow(a + q * b, p) + q * std::pow(q * b, p);
  c.rhs_closed = std::pow(1.0 + q, p - 1.0) * mean_power(q, p, a, b);
  c.violated = exceeds(c.lhs_closed, c.rhs_closed);
  return c;
}

CopsonChain copson_chain_bounds(double q, double p, double a, double b) {
  check_case(q, p, a, b);
  const double m = mean_power(q, p, a, b);
  return {std::pow(1.0 + q, p - 1.0) * m, std::pow(2.0, p - 1.0) * m, std::pow(p, p) * m};
}

BernoulliCase reverse_copson_counterexample(double q, double p) {
  if (!(q > 0.0 && q <= 1.0)) throw Error(ErrorCode::OutOfRange, "need 0 < q <= 1");
  if (!(p >= 1.0)) throw Error(ErrorCode::BadExponent, "need p >= 1");
  BernoulliCase c;
  c.q = q;
  c.p = p;
  c.a = 1.0 - q;  // psi = F
  c.b = 1.0;
  c.lhs_closed = (1.0 - q) + std::pow(q, p + 1.0);
  c.rhs_closed = std::pow(1.0 - q, p + 1.0) + q;
  c.threshold = 0.5;
  c.violated = c.lhs_closed < c.rhs_closed;
  return c;
}

double reverse_copson_printed_gap(double q, double p) {
  return (1.0 - 2.0 * q) * (1.0 - std::pow(1.0 - q, p));
}

}  // namespace hardykit
