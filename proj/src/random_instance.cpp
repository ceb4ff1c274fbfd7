#include "hardykit/random_instance.hpp"

#include <algorithm>
#include <cmath>

namespace hardykit {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t instance_seed(std::uint64_t base, std::uint64_t i) noexcept {
  return splitmix64(splitmix64(base) ^ (i * 0xd1b54a32d192ed03ULL));
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

namespace {

double std_normal(std::mt19937_64& rng) {
  // Box-Muller on our own uniforms so draws do not depend on the library.
  double u1 = uniform01(rng);
  while (u1 == 0.0) u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

}  // namespace

FiniteDist random_dist(std::mt19937_64& rng, std::size_t max_atoms) {
  const std::size_t n = 1 + static_cast<std::size_t>(rng() % max_atoms);
  std::vector<double> atoms;
  while (atoms.size() < n) {
    const double a = std_normal(rng);
    if (std::find(atoms.begin(), atoms.end(), a) == atoms.end()) atoms.push_back(a);
  }
  std::vector<double> w(n);
  for (double& x : w) {
    double u = uniform01(rng);
    while (u == 0.0) u = uniform01(rng);
    x = -std::log(u);
  }
  return make_from_weights(std::move(atoms), std::move(w));
}

SupportFunction random_psi(std::mt19937_64& rng, std::size_t n) {
  std::vector<double> v(n);
  for (double& x : v) {
    do {
      x = std::abs(std_normal(rng));
    } while (x == 0.0);
  }
  return SupportFunction(std::move(v));
}

RandomInstance random_instance(std::uint64_t seed, std::size_t max_atoms) {
  std::mt19937_64 rng(seed);
  FiniteDist d = random_dist(rng, max_atoms);
  SupportFunction psi = random_psi(rng, d.size());
  const double p = kSuiteExponents[rng() % std::size(kSuiteExponents)];
  const double cut = std_normal(rng);
  return {std::move(d), std::move(psi), p, cut};
}

WeightedProblem random_weighted(std::uint64_t seed, std::size_t max_atoms) {
  std::mt19937_64 rng(seed);
  FiniteDist dX = random_dist(rng, max_atoms);
  FiniteDist dY = random_dist(rng, max_atoms);
  SupportFunction U = random_psi(rng, dX.size());
  SupportFunction V = random_psi(rng, dY.size());
  constexpr double ps[] = {1.5, 2.0, 3.0};
  constexpr double dq[] = {0.0, 0.5, 1.0};
  const double p = ps[rng() % 3];
  const double q = p + dq[rng() % 3];
  return {std::move(dX), std::move(dY), std::move(U), std::move(V), p, q};
}

}  // namespace hardykit
