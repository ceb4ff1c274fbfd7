#include "hardykit/operators.hpp"

#include "hardykit/error.hpp"
#include "hardykit/kernels.hpp"

namespace hardykit {

void require_aligned(const FiniteDist& d, const SupportFunction& psi) {
  if (psi.size() != d.size()) {
    throw Error(ErrorCode::LengthMismatch, "function length " + std::to_string(psi.size()) +
                                               " vs " + std::to_string(d.size()) + " atoms");
  }
}

namespace {

// Averages are taken of psi - psi[0] and the shift is added back, so a
// constant psi comes out exactly constant.
std::vector<double> shifted_mass(const FiniteDist& d, const SupportFunction& psi, double shift) {
  std::vector<double> m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m[i] = (psi[i] - shift) * d.prob(i);
  return m;
}

}  // namespace

SupportFunction hardy_avg(const FiniteDist& d, const SupportFunction& psi) {
  require_aligned(d, psi);
  const double shift = psi[0];
  auto out = shifted_mass(d, psi, shift);
  kernels::inclusive_scan(out, out);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = shift + out[i] / d.cdf_at(i);
  return SupportFunction(std::move(out));
}

SupportFunction right_avg(const FiniteDist& d, const SupportFunction& psi) {
  require_aligned(d, psi);
  const double shift = psi[0];
  auto out = shifted_mass(d, psi, shift);
  kernels::reverse_scan(out, out);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = shift + out[i] / d.tail_at(i);
  return SupportFunction(std::move(out));
}

SupportFunction copson_dual(const FiniteDist& d, const SupportFunction& psi) {
  require_aligned(d, psi);
  std::vector<double> out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = psi[i] * d.prob(i) / d.cdf_at(i);
  kernels::reverse_scan(out, out);
  return SupportFunction(std::move(out));
}

SupportFunction forward_dual(const FiniteDist& d, const SupportFunction& psi) {
  require_aligned(d, psi);
  std::vector<double> out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = psi[i] * d.prob(i) / d.tail_at(i);
  kernels::inclusive_scan(out, out);
  return SupportFunction(std::move(out));
}

HazardFunction backward_hazard(const FiniteDist& d) {
  const auto v = copson_dual(d, SupportFunction::constant(d.size(), 1.0));
  return {std::vector<double>(d.atoms().begin(), d.atoms().end()),
          std::vector<double>(v.values().begin(), v.values().end()), HazardDirection::Backward};
}

HazardFunction forward_hazard(const FiniteDist& d) {
  const auto v = forward_dual(d, SupportFunction::constant(d.size(), 1.0));
  return {std::vector<double>(d.atoms().begin(), d.atoms().end()),
          std::vector<double>(v.values().begin(), v.values().end()), HazardDirection::Forward};
}

SupportFunction residual_R(const FiniteDist& d, const SupportFunction& psi) {
  auto out = right_avg(d, psi);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = psi[i] - out[i];
  return out;
}

SupportFunction residual_L(const FiniteDist& d, const SupportFunction& psi) {
  auto out = forward_dual(d, psi);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = psi[i] - out[i];
  return out;
}

double expectation(const FiniteDist& d, const SupportFunction& psi) {
  require_aligned(d, psi);
  std::vector<double> m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m[i] = psi[i] * d.prob(i);
  return kernels::sum(m);
}

}  // namespace hardykit
