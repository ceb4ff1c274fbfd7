#pragma once

#include <vector>

#include "hardykit/measure.hpp"

namespace hardykit {

enum class HazardDirection { Forward, Backward };

/// Cumulative hazard evaluated at the carrier's atoms.
struct HazardFunction {
  std::vector<double> atoms;
  std::vector<double> values;
  HazardDirection direction = HazardDirection::Forward;
};

/// H_F psi(x) = sum_{y<=x} psi(y) p_y / F(x).
SupportFunction hardy_avg(const FiniteDist& d, const SupportFunction& psi);
/// Hbar_F psi(x) = sum_{y>=x} psi(y) p_y / (1 - F(x-)).
SupportFunction right_avg(const FiniteDist& d, const SupportFunction& psi);
/// H*_F psi(x) = sum_{y>=x} psi(y) p_y / F(y).
SupportFunction copson_dual(const FiniteDist& d, const SupportFunction& psi);
/// Hbar*_F psi(x) = sum_{y<=x} psi(y) p_y / (1 - F(y-)).
SupportFunction forward_dual(const FiniteDist& d, const SupportFunction& psi);

/// Lambda(x) = sum_{y>=x} p_y / F(y); nonincreasing.
HazardFunction backward_hazard(const FiniteDist& d);
/// Lambdabar(x) = sum_{y<=x} p_y / (1 - F(y-)); nondecreasing.
HazardFunction forward_hazard(const FiniteDist& d);

/// R = I - Hbar_F.
SupportFunction residual_R(const FiniteDist& d, const SupportFunction& psi);
/// L = I - Hbar*_F, the inverse of R on centered functions when F is continuous.
SupportFunction residual_L(const FiniteDist& d, const SupportFunction& psi);

/// E psi(X) = sum psi p.
double expectation(const FiniteDist& d, const SupportFunction& psi);

/// Throws LengthMismatch unless psi has one value per atom.
void require_aligned(const FiniteDist& d, const SupportFunction& psi);

}  // namespace hardykit
