#pragma once

#include <optional>

namespace hardykit {

/// Closed-form Bernoulli(q) computation with psi(0) = a, psi(1) = b.
/// Written with arithmetic and pow only, independent of the operator code.
struct BernoulliCase {
  double q = 0.5;
  double p = 2.0;
  double a = 0.0;
  double b = 0.0;
  double lhs_closed = 0.0;
  double rhs_closed = 0.0;
  std::optional<double> threshold;
  bool violated = false;

  double gap() const noexcept { return lhs_closed - rhs_closed; }
};

/// psi = (1, 0) with the strict indicator: lhs = q, rhs = (p/(p-1))^p (1-q),
/// violated exactly for q above 1/(1 + (1-1/p)^p).
BernoulliCase strict_variant_case(double q, double p);

/// Hardy lhs against the sharpened bound (1+q) E psi^p.
BernoulliCase hardy_bound_case(double q, double p, double a, double b);

/// Copson lhs against (1+q)^{p-1} E psi^p; see copson_chain_bounds for the rest of the chain.
BernoulliCase copson_bound_case(double q, double p, double a, double b);

/// The two looser links 2^{p-1} E psi^p and p^p E psi^p of the Copson chain.
struct CopsonChain {
  double sharpened = 0.0;
  double doubled = 0.0;
  double classical = 0.0;
};
CopsonChain copson_chain_bounds(double q, double p, double a, double b);

/// psi = F for the reverse Copson inequality without continuity:
/// lhs = E[(1 - F(X-))^p] = (1-q) + q^{p+1}, rhs = E[F(X)^p] = (1-q)^{p+1} + q.
BernoulliCase reverse_copson_counterexample(double q, double p);

/// The closed form (1-2q)[1-(1-q)^p] as printed alongside this counterexample.
double reverse_copson_printed_gap(double q, double p);

}  // namespace hardykit
