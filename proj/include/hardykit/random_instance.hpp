#pragma once

#include <cstdint>
#include <random>

#include "hardykit/constants.hpp"
#include "hardykit/measure.hpp"

namespace hardykit {

/// splitmix64 finalizer; decorrelates consecutive seeds.
std::uint64_t splitmix64(std::uint64_t x) noexcept;
/// Independent seed for instance i of a run seeded with base.
std::uint64_t instance_seed(std::uint64_t base, std::uint64_t i) noexcept;

/// Uniform double in [0, 1) from the top 53 bits; same on every platform.
double uniform01(std::mt19937_64& rng);

/// 1..max_atoms sorted distinct N(0,1) atoms with Dirichlet(1) masses.
FiniteDist random_dist(std::mt19937_64& rng, std::size_t max_atoms = 12);
/// |N(0,1)| values, resampled when exactly zero.
SupportFunction random_psi(std::mt19937_64& rng, std::size_t n);

struct RandomInstance {
  FiniteDist d;
  SupportFunction psi;
  double p;
  double cut;  // split point for the two-sided evaluator
};

inline constexpr double kSuiteExponents[] = {1.1, 1.5, 2.0, 3.0, 5.0};

RandomInstance random_instance(std::uint64_t seed, std::size_t max_atoms = 12);

/// Random weighted problem with positive U, V, p in {1.5, 2, 3} and q in {p, p+0.5, p+1}.
WeightedProblem random_weighted(std::uint64_t seed, std::size_t max_atoms = 6);

}  // namespace hardykit
